"""Oracle sweep suites: every symbolic construction is replayed against an
independent brute-force enumeration over the ranges the package promises.

Each suite returns a Report of named checks with failure details.  Sweeps
are embarrassingly parallel over parameter pairs; set LATTICE_STAIRS_THREADS
to cap the worker pool (1 disables it).  Aggregation sorts by parameter
tuple, so results do not depend on completion order.
"""

from __future__ import annotations

import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

import numpy as np

from . import barvinok, carlitz, white
from .genfun import RationalGF, gf_expand, gf_expand_grid, generic_direction
from .numeric import SlopePair, euclid_chain
from .sequences import (PeriodicIntSeq, beatty, beatty_period, block_sequence,
                        is_balanced, is_evenly_distributed,
                        is_recursively_balanced, is_sturmian,
                        is_swap_symmetric, reduce, shift_equivalent)
from .staircase import (LineSpec, pipe_window, staircase_by_recursion,
                        staircase_window, translate_equivalent)


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class Report:
    suite: str
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def add(self, name: str, failures: list[str], detail: str = "") -> None:
        if failures:
            self.checks.append(Check(name, False, "; ".join(failures[:5])))
        else:
            self.checks.append(Check(name, True, detail))

    def to_json_dict(self) -> dict:
        return {
            "suite": self.suite,
            "ok": self.ok,
            "checks": [{"name": c.name, "ok": c.ok, "detail": c.detail}
                       for c in self.checks],
        }


def worker_count() -> int:
    env = os.environ.get("LATTICE_STAIRS_THREADS")
    if env:
        return max(1, int(env))
    return min(4, os.cpu_count() or 1)


def _map_jobs(fn, items):
    """Run fn over items, fanning out when the pool is enabled; the caller
    gets results in item order either way."""
    items = list(items)
    n = worker_count()
    if n <= 1 or len(items) < 32:
        return [fn(it) for it in items]
    chunk = max(1, len(items) // (n * 8))
    with ProcessPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, items, chunksize=chunk))


def coprime_pairs(bound: int, lo: int = 1):
    return [(a, b) for a in range(lo, bound + 1) for b in range(lo, bound + 1)
            if gcd(a, b) == 1]


# -- sequences ---------------------------------------------------------------

def _check_pattern(bits: tuple[int, ...]) -> str:
    s = PeriodicIntSeq(bits)
    answers = (is_sturmian(s), is_recursively_balanced(s),
               is_evenly_distributed(s), is_swap_symmetric(s))
    if len(set(answers)) != 1:
        return f"{bits}: sturmian/recursive/even/swap = {answers}"
    return ""


def verify_sequences(max_len: int = 14, lemma_bound: int = 200,
                     block_bound: int = 150, seed: int = 0) -> Report:
    rep = Report("sequences")

    patterns = []
    for length in range(1, max_len + 1):
        for mask in range(1, 1 << length):
            patterns.append(tuple((mask >> i) & 1 for i in range(length)))
    failures = [msg for msg in _map_jobs(_check_pattern, patterns) if msg]
    rep.add(f"four-characterization agreement on 0/1 periods of length <= {max_len}",
            failures, f"{len(patterns)} patterns")

    failures = []
    for a, b in coprime_pairs(lemma_bound):
        per = beatty_period(SlopePair(a, b))
        if is_balanced(per) != b // a and not (a == 1):
            failures.append(f"({a},{b}): balance level != floor(b/a)")
        if a == 1 and is_balanced(per) != b:
            failures.append(f"({a},{b}): constant sequence balance convention")
        if sum(per.period) != b or per.minimal_period_length != a:
            failures.append(f"({a},{b}): period sum or minimal period wrong")
    rep.add(f"step sequences balanced with sum b, minimal period a (a,b <= {lemma_bound})",
            failures)

    failures = []
    for a, b in coprime_pairs(lemma_bound):
        if a == 1:
            continue
        per = beatty_period(SlopePair(a, b))
        if reduce(per).period != beatty_period(SlopePair(a, b % a)).period:
            failures.append(f"({a},{b}): reduction != step sequence of (a, b mod a)")
        k = 1 + (a + b) % 3
        lifted = PeriodicIntSeq(tuple(v + k for v in per.period))
        if lifted.period != beatty_period(SlopePair(a, b + k * a)).period:
            failures.append(f"({a},{b}): adding {k} != step sequence of (a, b+{k}a)")
    rep.add(f"reduction both directions (a,b <= {lemma_bound})", failures)

    failures = []
    for a in range(1, block_bound + 1):
        for b in range(a + 1, block_bound + 1):
            if gcd(a, b) != 1:
                continue
            blocks = block_sequence(beatty_period(SlopePair(b, a)))
            if not shift_equivalent(blocks, beatty_period(SlopePair(a, b))):
                failures.append(f"block sequence of ({b},{a}) != steps of ({a},{b})")
    rep.add(f"block sequences swap the slope (0 < a < b <= {block_bound})", failures)

    failures = []
    for a, b in coprime_pairs(block_bound):
        per = beatty_period(SlopePair(a, b))
        if not shift_equivalent(per, per.reversed()):
            failures.append(f"({a},{b}): reversal not a shift")
    rep.add(f"reversal invariance (a,b <= {block_bound})", failures)

    rng = random.Random(seed)
    failures = []
    for _ in range(500):
        a = rng.randrange(1, 80)
        b = rng.randrange(1, 80)
        if gcd(a, b) != 1:
            continue
        x0 = rng.randrange(-100, 100)
        x1 = x0 + rng.randrange(0, 150)
        sp = SlopePair(a, b)
        total = sum(beatty(sp, n) for n in range(x0, x1 + 1))
        slope = Fraction(b, a)
        lhs = total - slope * (x1 - x0 + 1)
        rhs = (slope * (x0 - 1) - (slope * (x0 - 1)).__floor__()) - \
              (slope * x1 - (slope * x1).__floor__())
        if lhs != rhs:
            failures.append(f"({a},{b}) on [{x0},{x1}]: interval sum identity")
    rep.add("interval sum identity in exact rationals (500 samples)", failures)
    return rep


# -- staircase ---------------------------------------------------------------

def _check_stair_recursion(ab) -> str:
    a, b = ab
    x0, x1 = -a, 2 * a
    ls = LineSpec(SlopePair(a, b))
    s_rec, c_rec = staircase_by_recursion(SlopePair(a, b), x0, x1)
    s_win = staircase_window(ls, x0, x1, "staircase")
    c_win = staircase_window(ls, x0, x1, "corners")
    if s_rec.points != s_win.points:
        return f"({a},{b}): staircase recursion != membership"
    if c_rec.points != c_win.points:
        return f"({a},{b}): corner recursion != membership"
    # corner bijection and long-column criterion for steep slopes
    if 1 < a < b:
        q, c = divmod(b, a)
        s_red = staircase_window(LineSpec(SlopePair(a, c)), x0, x1, "staircase")
        sheared = {(x, q * x + y) for (x, y) in s_red.points}
        if sheared != c_win.points:
            return f"({a},{b}): shear of reduced staircase != corners"
        c_red = staircase_window(LineSpec(SlopePair(a, c)), x0, x1, "corners")
        for x in range(x0, x1 + 1):
            long_col = len(s_win.column(x)) == q + 1
            if long_col != bool(c_red.column(x)):
                return f"({a},{b}): long columns != corner columns of reduced"
    return ""


def verify_staircase_recursion(bound: int = 80) -> Report:
    rep = Report("staircase-recursion")
    failures = [m for m in _map_jobs(_check_stair_recursion, coprime_pairs(bound)) if m]
    rep.add(f"recursive construction matches membership over [-a, 2a] (a,b <= {bound})",
            failures)
    return rep


def _check_reflection(ab) -> str:
    a, b = ab
    sp = SlopePair(a, b)
    offsets = [Fraction(0), Fraction(1, a), Fraction(-1, a), Fraction(1, 3 * a)]
    base = staircase_window(LineSpec(sp, 0, 1), 0, 4 * a, "staircase")
    base_c = staircase_window(LineSpec(sp, 0, 1), 0, 4 * a, "corners")
    for sigma in (1, -1):
        for r in offsets:
            ls = LineSpec(sp, r, sigma)
            for which, ref in (("staircase", base), ("corners", base_c)):
                w = staircase_window(ls, a, 3 * a, which)
                if not translate_equivalent(w, ref, min_overlap_cols=2 * a):
                    return f"({a},{b},sigma={sigma},r={r}): {which} not a translate"
        # origin reflection: negate a window exactly
        ls = LineSpec(sp, 0, sigma)
        w = staircase_window(ls, -2 * a, 2 * a, "staircase")
        neg = {(-p[0], -p[1]) for p in w.points}
        w2 = staircase_window(LineSpec(sp, 0, -sigma), -2 * a, 2 * a, "staircase")
        if neg != w2.points:
            return f"({a},{b},sigma={sigma}): origin reflection mismatch"
        # diagonal reflection swaps the slope parameters and the side
        w = staircase_window(ls, -2 * a, 2 * a, "staircase")
        mirrored = {(p[1], p[0]) for p in w.points}
        guard = 2 * max(1, (a + b) // min(a, b))
        y0, y1 = -2 * b + guard, 2 * b - guard
        if y0 <= y1:
            target = staircase_window(LineSpec(SlopePair(b, a), 0, -sigma), y0, y1,
                                      "staircase")
            inner = {p for p in mirrored if y0 <= p[0] <= y1}
            if inner != target.points:
                return f"({a},{b},sigma={sigma}): diagonal reflection mismatch"
    return ""


def verify_staircase_reflections(bound: int = 60) -> Report:
    rep = Report("staircase-reflections")
    failures = [m for m in _map_jobs(_check_reflection, coprime_pairs(bound)) if m]
    rep.add(f"translation and reflection laws (a,b <= {bound}, both sides, "
            f"r in {{0, 1/a, -1/a, 1/(3a)}})", failures)
    return rep


def _check_facts(ab) -> str:
    a, b = ab
    sp = SlopePair(a, b)
    for sigma in (1, -1):
        ls = LineSpec(sp, 0, sigma)
        x0, x1 = -2 * a, 2 * a
        vp, hp = pipe_window(ls, x0, x1)
        s = staircase_window(ls, x0, x1, "staircase")
        c = staircase_window(ls, x0, x1, "corners")
        if (a >= b) != (hp.points <= vp.points):
            return f"({a},{b},{sigma}): pipe inclusion vs flatness"
        if (a <= b) != (vp.points <= hp.points):
            return f"({a},{b},{sigma}): pipe inclusion vs steepness"
        cols_single = all(len(s.column(x)) == 1 for x in range(x0, x1 + 1))
        if (a >= b) != cols_single:
            return f"({a},{b},{sigma}): column counts vs flatness"
        ccols_single = all(len(c.column(x)) == 1 for x in range(x0, x1 + 1))
        if (a <= b) != ccols_single:
            return f"({a},{b},{sigma}): corner columns vs steepness"
        # interior rows only: a row is complete once its x-extent fits the window
        pad = (a + b) // b + 2
        ylo = (b * x0) // a + pad
        yhi = (b * x1) // a - pad
        if ylo <= yhi:
            rows_single = all(len(c.row(y)) == 1 for y in range(ylo, yhi + 1))
            if (a >= b) != rows_single:
                return f"({a},{b},{sigma}): corner rows vs flatness"
            srows_single = all(len(s.row(y)) == 1 for y in range(ylo, yhi + 1))
            if (a <= b) != srows_single:
                return f"({a},{b},{sigma}): staircase rows vs steepness"
    # topmost point of every column is (n, floor(bn/a))
    ls = LineSpec(sp)
    s = staircase_window(ls, -a, 2 * a, "staircase")
    for x in range(-a, 2 * a + 1):
        if max(p[1] for p in s.column(x)) != (b * x) // a:
            return f"({a},{b}): topmost column point"
    return ""


def verify_staircase_facts(bound: int = 60) -> Report:
    rep = Report("staircase-facts")
    pairs = [(a, b) for (a, b) in coprime_pairs(bound) if a != b or a == 1]
    failures = [m for m in _map_jobs(_check_facts, pairs) if m]
    rep.add(f"pipe inclusions, row/column counts, topmost points (a,b <= {bound})",
            failures)
    return rep


# -- barvinok ----------------------------------------------------------------

def _points_grid(points, window) -> "np.ndarray":
    x0, x1, y0, y1 = window
    grid = np.zeros((x1 - x0 + 1, y1 - y0 + 1), dtype=np.int64)
    for (x, y) in points:
        grid[x - x0, y - y0] = 1
    return grid


def _check_cone_pair(ab) -> str:
    a, b = ab
    sp = SlopePair(a, b)
    cs = barvinok.ConeSpec(sp)
    f = barvinok.gf_cone(cs)
    n = f.term_count
    bound = 4 * len(euclid_chain(a, b)) + 8
    if n > bound:
        return f"({a},{b}): cone term count {n} > {bound}"
    win = (0, 3 * a, 0, 3 * b)
    d = generic_direction(f, seed=(2 * b + 1, 1))
    got = gf_expand_grid(f, win, d)
    xs = np.arange(0, 3 * a + 1, dtype=np.int64)[:, None]
    ys = np.arange(0, 3 * b + 1, dtype=np.int64)[None, :]
    want = (a * ys <= b * xs).astype(np.int64)
    if not np.array_equal(got, want):
        return f"({a},{b}): cone expansion != membership"
    # triangles against brute enumeration
    for half in (True, False):
        gf = barvinok.gf_half_open_triangle(sp) if half else barvinok.gf_closed_triangle(sp)
        brute = barvinok.triangle_points_brute(barvinok.TriangleSpec(sp, half))
        twin = (0, a, -1, b + 1)
        w = gf_expand_grid(gf, twin, generic_direction(gf, seed=(2 * b + 1, 1)))
        if not np.array_equal(w, _points_grid(brute.points, twin)):
            return f"({a},{b}): triangle (half_open={half}) expansion != brute"
    return ""


def verify_barvinok(bound: int = 120) -> Report:
    rep = Report("barvinok")
    failures = [m for m in _map_jobs(_check_cone_pair, coprime_pairs(bound)) if m]
    rep.add(f"cone and triangle expansions match brute force, term count "
            f"<= 4*chain+8 (a,b <= {bound})", failures)
    return rep


def _check_positivity(ab) -> str:
    a, b = ab
    sp = SlopePair(a, b)
    d = (2 * b + 1, 1)
    win = (0, a, -1, b + 1)
    pieces = barvinok.gf_half_open_triangle_pieces(sp)
    support = set()
    for piece in pieces:
        w = gf_expand(piece, win, generic_direction(piece, seed=d))
        if not w.is_indicator():
            return f"({a},{b}): triangle piece not a 0/1 set"
        if support & w.support():
            return f"({a},{b}): triangle pieces overlap"
        support |= w.support()
    brute = barvinok.triangle_points_brute(barvinok.TriangleSpec(sp, True))
    if support != set(brute.points):
        return f"({a},{b}): triangle pieces do not cover"
    # cone pieces on a smaller window
    win = (0, 2 * a, 0, 2 * b)
    support = set()
    for piece in barvinok.gf_cone_pieces(barvinok.ConeSpec(sp)):
        w = gf_expand(piece, win, generic_direction(piece, seed=d))
        if not w.is_indicator():
            return f"({a},{b}): cone piece not a 0/1 set"
        if support & w.support():
            return f"({a},{b}): cone pieces overlap"
        support |= w.support()
    # carlitz terms are single pieces
    cwin = (-1, a, -b - 1, b + 1)
    support = set()
    cf = carlitz.carlitz_short(sp).gf
    for t in cf.terms:
        w = gf_expand(RationalGF((t,)), cwin, generic_direction(cf, seed=d))
        if not w.is_indicator():
            return f"({a},{b}): carlitz term not a 0/1 set"
        if support & w.support():
            return f"({a},{b}): carlitz terms overlap"
        support |= w.support()
    naive = carlitz.carlitz_naive(sp).coefficient_map()
    if support != set(naive):
        return f"({a},{b}): carlitz terms do not partition the support"
    return ""


def verify_positivity(bound: int = 120, samples: int = 60, seed: int = 0) -> Report:
    rep = Report("positivity")
    rng = random.Random(seed)
    pairs = coprime_pairs(bound)
    picked = sorted(rng.sample(pairs, min(samples, len(pairs))))
    failures = [m for m in _map_jobs(_check_positivity, picked) if m]
    rep.add(f"decomposition pieces are disjoint 0/1 sets ({len(picked)} sampled "
            f"pairs <= {bound})", failures)
    return rep


# -- carlitz -----------------------------------------------------------------

def _check_ppd(ab) -> str:
    a, b = ab
    for axis in ("down", "right"):
        ps = carlitz.ParallelepipedSpec(SlopePair(a, b), axis, True)
        if carlitz.parallelepiped_by_recursion(ps).points != \
                carlitz.parallelepiped_points_brute(ps).points:
            return f"({a},{b},{axis}): recursion != brute"
    return ""


def _check_carlitz_pair(ab) -> str:
    a, b = ab
    sp = SlopePair(a, b)
    short = carlitz.carlitz_short(sp)
    n = short.gf.term_count
    bound = 16 * len(euclid_chain(a, b)) + 8
    if n > bound:
        return f"({a},{b}): carlitz term count {n} > {bound}"
    win = (-1, max(a - 1, 0), -1, b + 1)
    d = generic_direction(short.gf, seed=(2 * max(a, b) + 1, 1))
    got = gf_expand_grid(short.gf, win, d)
    want = _points_grid(carlitz.carlitz_naive(sp).coefficient_map(), win)
    if not np.array_equal(got, want):
        return f"({a},{b}): short expansion != naive polynomial"
    return ""


def _check_carlitz_translate(ab) -> str:
    a, b = ab
    sp = SlopePair(a, b)
    naive = set(carlitz.carlitz_naive(sp).coefficient_map())
    ppd = carlitz.parallelepiped_points_brute(
        carlitz.ParallelepipedSpec(sp, "down", True)).points
    if naive != {(x - 1, y) for (x, y) in ppd}:
        return f"({a},{b}): naive monomials != shifted parallelepiped points"
    return ""


def verify_carlitz(bound: int = 250, ppd_bound: int = 100,
                   timing_ms: float = 100.0, seed: int = 0) -> Report:
    rep = Report("carlitz")

    failures = [m for m in _map_jobs(_check_ppd, coprime_pairs(ppd_bound)) if m]
    rep.add(f"parallelepiped recursion matches brute force, both axes "
            f"(a,b <= {ppd_bound})", failures)

    failures = [m for m in _map_jobs(_check_carlitz_pair, coprime_pairs(bound)) if m]
    rep.add(f"short representation matches the naive polynomial, term count "
            f"<= 16*chain+8 (a,b <= {bound})", failures)

    failures = [m for m in _map_jobs(_check_carlitz_translate,
                                     coprime_pairs(min(bound, 80))) if m]
    rep.add("naive monomials are the shifted parallelepiped interior", failures)

    failures = []
    big = 10 ** 12
    for a, b in ((big + 39, 7 * big + 61), (big + 61, big + 39), (2 * big + 1, 3 * big + 2)):
        if gcd(a, b) != 1:
            continue
        t0 = time.perf_counter()
        short = carlitz.carlitz_short(SlopePair(a, b))
        ms = (time.perf_counter() - t0) * 1e3
        if ms >= timing_ms:
            failures.append(f"({a},{b}): construction took {ms:.1f} ms")
        if short.gf.term_count > 16 * len(euclid_chain(a, b)) + 8:
            failures.append(f"({a},{b}): term count out of bound")
    rep.add(f"construction at 10^12 scale under {timing_ms:.0f} ms", failures)

    rng = random.Random(seed)
    failures = []
    for a, b in sorted(rng.sample(coprime_pairs(60), 25)):
        sp = SlopePair(a, b)
        pf = carlitz.carlitz_short(sp, product_free=True)
        if any(t.denom for t in pf.gf.terms):
            failures.append(f"({a},{b}): product-free form kept a denominator")
            continue
        if any(t.coeff <= 0 for t in pf.gf.terms):
            failures.append(f"({a},{b}): product-free coefficient not positive")
        win = (-1, max(a - 1, 0), -1, b + 1)
        got = gf_expand(pf.gf, win, (2 * max(a, b) + 1, 1))
        if dict(got.coeffs) != carlitz.carlitz_naive(sp).coefficient_map():
            failures.append(f"({a},{b}): product-free expansion != naive")
    rep.add("product-free variant: denominator-free, positive, exact (25 samples)",
            failures)
    return rep


# -- white -------------------------------------------------------------------

def _check_white_slice(n: int) -> str:
    for a in range(n):
        for b in range(n):
            t = white.TetraSpec(a, b, n)
            empty = white.is_empty(t)
            clean = white.is_clean(t)
            if clean != white.reeve_criterion(t):
                return f"T({a},{b},{n}): clean != gcd criterion"
            if empty and t.c < 1:
                return f"T({a},{b},{n}): empty but c = {t.c} < 1"
            if empty and n >= 2:
                if not (t.a >= 1 and t.b >= 1 and t.c >= 1):
                    return f"T({a},{b},{n}): empty with parameter < 1"
                if any(white.f_function(t, k) != 1 for k in range(2, n)):
                    return f"T({a},{b},{n}): empty but f != 1 somewhere"
            v = white.classify(t)
            if clean and v.f_all_one and not v.abc_has_one:
                return f"T({a},{b},{n}): f = 1 throughout but no parameter is 1"
            want_empty = (n == 1) or (clean and v.abc_has_one)
            if empty != want_empty:
                return f"T({a},{b},{n}): emptiness vs classification"
    return ""


def verify_white(n_bound: int = 30, necessity_bound: int = 60) -> Report:
    rep = Report("white")
    failures = [m for m in _map_jobs(_check_white_slice,
                                     list(range(1, n_bound + 1))) if m]
    rep.add(f"cleanness criterion, step-sum diagnostics and classification "
            f"(n <= {n_bound})", failures)

    failures = []
    for n in range(1, necessity_bound + 1):
        for d in range(1, n):
            if gcd(d, n) != 1:
                continue
            if not white.is_empty(white.TetraSpec(1, d, n)):
                failures.append(f"T(1,{d},{n}) not empty")
    rep.add(f"unit-parameter tetrahedra are empty (n <= {necessity_bound})", failures)
    return rep


SUITES = {
    "sequences": lambda max_n, seed: verify_sequences(
        max_len=min(14, max_n) if max_n else 14,
        lemma_bound=min(200, max_n) if max_n else 200,
        block_bound=min(150, max_n) if max_n else 150, seed=seed),
    "staircase": lambda max_n, seed: _staircase_all(max_n),
    "barvinok": lambda max_n, seed: verify_barvinok(min(120, max_n) if max_n else 120),
    "carlitz": lambda max_n, seed: verify_carlitz(
        bound=min(250, max_n) if max_n else 250,
        ppd_bound=min(100, max_n) if max_n else 100),
    "white": lambda max_n, seed: verify_white(
        n_bound=min(30, max_n) if max_n else 30,
        necessity_bound=min(60, max_n) if max_n else 60),
    "positivity": lambda max_n, seed: verify_positivity(
        bound=min(120, max_n) if max_n else 120, seed=seed),
}


def _staircase_all(max_n) -> Report:
    rep = Report("staircase")
    for sub in (verify_staircase_recursion(min(80, max_n) if max_n else 80),
                verify_staircase_reflections(min(60, max_n) if max_n else 60),
                verify_staircase_facts(min(60, max_n) if max_n else 60)):
        rep.checks.extend(sub.checks)
    return rep


def run_suite(name: str, max_n: int | None = None, seed: int = 0) -> Report:
    if name == "all":
        rep = Report("all")
        for key in ("sequences", "staircase", "barvinok", "carlitz", "white",
                    "positivity"):
            sub = SUITES[key](max_n, seed)
            for c in sub.checks:
                rep.checks.append(Check(f"{key}: {c.name}", c.ok, c.detail))
        return rep
    if name not in SUITES:
        raise KeyError(name)
    return SUITES[name](max_n, seed)
