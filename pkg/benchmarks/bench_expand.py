"""Benchmark: compiled expansion kernel vs the numpy fallback.

The hot loop of every oracle sweep is the windowed Laurent expansion of a
short rational generating function.  This script times the same expansions
under both kernels and checks that they agree bit for bit.

Run:  python benchmarks/bench_expand.py
"""

import os
import subprocess
import sys
import time

CASES = [
    ("cone 89/144 on [0,267]x[0,432]", "cone", 89, 144, 3),
    ("cone 120/113 on [0,360]x[0,339]", "cone", 120, 113, 3),
    ("cone 97/251 on [0,485]x[0,1255]", "cone", 97, 251, 5),
    ("carlitz 250/183 on [-1,250]x[-1,184]", "carlitz", 250, 183, 1),
]


def run_case(kind: str, a: int, b: int, mult: int):
    from lattice_stairs import barvinok, carlitz
    from lattice_stairs.genfun import gf_expand_grid, generic_direction
    from lattice_stairs.numeric import SlopePair

    sp = SlopePair(a, b)
    if kind == "cone":
        f = barvinok.gf_cone(barvinok.ConeSpec(sp))
        win = (0, mult * a, 0, mult * b)
    else:
        f = carlitz.carlitz_short(sp).gf
        win = (-1, a, -1, b + 1)
    d = generic_direction(f, seed=(2 * b + 1, 1))
    t0 = time.perf_counter()
    grid = gf_expand_grid(f, win, d)
    dt = time.perf_counter() - t0
    return dt, int(grid.sum()), f.term_count


def main() -> int:
    if len(sys.argv) > 1:
        # child mode: one backend, print timings as tsv
        from lattice_stairs.backend import BACKEND
        print(f"# backend: {BACKEND}", flush=True)
        for name, kind, a, b, mult in CASES:
            best = None
            checksum = terms = 0
            for _ in range(3):
                dt, checksum, terms = run_case(kind, a, b, mult)
                best = dt if best is None else min(best, dt)
            print(f"{name}\t{best:.4f}\t{checksum}\t{terms}", flush=True)
        return 0

    rows = {}
    for backend in ("auto", "py"):
        env = dict(os.environ, LATTICE_STAIRS_BACKEND=backend)
        out = subprocess.run([sys.executable, __file__, "child"], env=env,
                             capture_output=True, text=True, check=True).stdout
        lines = [ln for ln in out.splitlines() if ln and not ln.startswith("#")]
        label = out.splitlines()[0].split(": ")[1]
        for ln in lines:
            name, dt, checksum, terms = ln.split("\t")
            rows.setdefault(name, {})[label] = (float(dt), int(checksum), int(terms))

    print(f"{'case':44s} {'terms':>5s} {'compiled':>10s} {'python':>10s} {'speedup':>8s}")
    for name, r in rows.items():
        if "compiled" not in r:
            print(f"{name:44s}  (no compiled kernel available)")
            continue
        (tc, cc, terms), (tp, cp, _) = r["compiled"], r["python"]
        agree = "" if cc == cp else "  !! HASH MISMATCH"
        print(f"{name:44s} {terms:5d} {tc:9.4f}s {tp:9.4f}s {tp / tc:7.1f}x{agree}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
