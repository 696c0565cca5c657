"""Exact algebra of short rational generating functions in two variables.

A term is  coeff * x^monomial * prod(1 - x^w) / prod(1 - x^u)  with integer
exponent vectors; a RationalGF is a sum of terms.  Sums encode unions of
point sets, products their Minkowski sums, and substituting exponents by a
nonsingular integer matrix applies that linear map to the set.  Terms are
never brought to a common denominator and numerator products are never
distributed: the whole value of the representation is that it stays short
in factored form.

Verification happens through windowed Laurent expansion: given a direction
d with <d, u> != 0 for every denominator vector u, each 1/(1 - x^u) expands
as a geometric series on the side of u where <d, u> > 0 (after rewriting
1/(1-x^u) = -x^{-u}/(1-x^{-u}) if needed), and the series truncate against
a rectangular exponent window.  All coefficients are exact integers.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .errors import DomainError, ExpansionDirectionError
from .numeric import Vec
from . import backend

Window = tuple[int, int, int, int]  # x0, x1, y0, y1 inclusive


@dataclass(frozen=True)
class GFTerm:
    """coeff * x^monomial * prod(1 - x^w) * prod(1 + x^v) / prod(1 - x^u).

    The positive binomials in ``plus`` only appear in denominator-free
    product representations; ordinary short GFs leave it empty.
    """

    coeff: int
    monomial: Vec = (0, 0)
    numer: tuple[Vec, ...] = ()
    denom: tuple[Vec, ...] = ()
    plus: tuple[Vec, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "monomial", tuple(self.monomial))
        object.__setattr__(self, "numer", tuple(tuple(w) for w in self.numer))
        object.__setattr__(self, "denom", tuple(tuple(u) for u in self.denom))
        object.__setattr__(self, "plus", tuple(tuple(v) for v in self.plus))
        if any(u == (0, 0) for u in self.denom):
            raise DomainError("zero denominator vector")

    @property
    def size(self) -> int:
        return 1 + len(self.numer) + len(self.denom) + len(self.plus)


@dataclass(frozen=True)
class RationalGF:
    terms: tuple[GFTerm, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "terms", tuple(self.terms))

    @property
    def term_count(self) -> int:
        return len(self.terms)

    @property
    def size(self) -> int:
        return sum(t.size for t in self.terms)

    @classmethod
    def zero(cls) -> "RationalGF":
        return cls(())

    @classmethod
    def monomial(cls, coeff: int, mono: Vec = (0, 0)) -> "RationalGF":
        if coeff == 0:
            return cls(())
        return cls((GFTerm(coeff, mono),))


def gf_interval(v: Vec, k: int) -> RationalGF:
    """Generating function of {0, v, 2v, ..., kv}: (1 - x^{(k+1)v})/(1 - x^v)."""
    v = tuple(v)
    if v == (0, 0):
        raise DomainError("interval direction must be nonzero")
    if k < 0:
        raise DomainError("interval multiple must be >= 0")
    if k == 0:
        return RationalGF.monomial(1)
    return RationalGF((GFTerm(1, (0, 0), (((k + 1) * v[0], (k + 1) * v[1]),), (v,)),))


def gf_add(*fs: RationalGF) -> RationalGF:
    return RationalGF(tuple(t for f in fs for t in f.terms))


def gf_mul(f: RationalGF, g: RationalGF) -> RationalGF:
    terms = []
    for t1 in f.terms:
        for t2 in g.terms:
            terms.append(GFTerm(
                t1.coeff * t2.coeff,
                (t1.monomial[0] + t2.monomial[0], t1.monomial[1] + t2.monomial[1]),
                t1.numer + t2.numer,
                t1.denom + t2.denom,
                t1.plus + t2.plus,
            ))
    return RationalGF(tuple(terms))


def gf_scale(f: RationalGF, c: int, mono: Vec = (0, 0)) -> RationalGF:
    """Multiply by c * x^mono."""
    if c == 0:
        return RationalGF.zero()
    return RationalGF(tuple(
        GFTerm(t.coeff * c, (t.monomial[0] + mono[0], t.monomial[1] + mono[1]),
               t.numer, t.denom, t.plus)
        for t in f.terms))


def gf_substitute(f: RationalGF, matrix: tuple[Vec, Vec]) -> RationalGF:
    """Replace every exponent vector e by matrix @ e.

    The expansion of the result is the pushforward of the expansion of f
    under the linear map, provided det(matrix) != 0.
    """
    (m11, m12), (m21, m22) = matrix
    if m11 * m22 - m12 * m21 == 0:
        raise DomainError("substitution matrix must be nonsingular")

    def app(v: Vec) -> Vec:
        return (m11 * v[0] + m12 * v[1], m21 * v[0] + m22 * v[1])

    return RationalGF(tuple(
        GFTerm(t.coeff, app(t.monomial),
               tuple(app(w) for w in t.numer),
               tuple(app(u) for u in t.denom),
               tuple(app(v) for v in t.plus))
        for t in f.terms))


@dataclass(frozen=True)
class LaurentWindow:
    """Exact coefficients of a Laurent expansion over a rectangular window.

    Only nonzero coefficients are stored.  Equality compares coefficient
    maps over the window intersection.
    """

    coeffs: Mapping[Vec, int]
    window: Window

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs",
                           {tuple(p): c for p, c in dict(self.coeffs).items() if c})

    def __getitem__(self, p: Vec) -> int:
        return self.coeffs.get(tuple(p), 0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentWindow):
            return NotImplemented
        x0 = max(self.window[0], other.window[0])
        x1 = min(self.window[1], other.window[1])
        y0 = max(self.window[2], other.window[2])
        y1 = min(self.window[3], other.window[3])
        for side, mine in ((self, other), (other, self)):
            for p, c in side.coeffs.items():
                if x0 <= p[0] <= x1 and y0 <= p[1] <= y1 and mine[p] != c:
                    return False
        return True

    def is_indicator(self) -> bool:
        return all(c in (0, 1) for c in self.coeffs.values())

    def support(self) -> frozenset[Vec]:
        return frozenset(self.coeffs)


def _normalize_term(term: GFTerm, d: Vec):
    """Flip denominators (and binomial factors) onto the <d, .> > 0 side.

    Uses 1/(1-x^u) = -x^{-u}/(1-x^{-u}), (1-x^w) = -x^w (1-x^{-w}) and
    (1+x^v) = x^v (1+x^{-v}).  Returns (coeff, monomial, numer, plus, denom)
    or None when a numerator factor is zero.
    """
    coeff = term.coeff
    mono = list(term.monomial)
    denom = []
    for u in term.denom:
        s = d[0] * u[0] + d[1] * u[1]
        if s == 0:
            raise ExpansionDirectionError(
                f"direction {d} is orthogonal to denominator vector {u}")
        if s < 0:
            coeff = -coeff
            mono[0] -= u[0]
            mono[1] -= u[1]
            u = (-u[0], -u[1])
        denom.append(u)
    numer = []
    for w in term.numer:
        if w == (0, 0):
            return None  # factor (1 - x^0) = 0 annihilates the term
        s = d[0] * w[0] + d[1] * w[1]
        if s < 0:
            coeff = -coeff
            mono[0] += w[0]
            mono[1] += w[1]
            w = (-w[0], -w[1])
        numer.append(w)
    plus = []
    for v in term.plus:
        if v == (0, 0):
            coeff *= 2  # (1 + x^0) = 2
            continue
        s = d[0] * v[0] + d[1] * v[1]
        if s < 0:
            mono[0] += v[0]
            mono[1] += v[1]
            v = (-v[0], -v[1])
        plus.append(v)
    return coeff, (mono[0], mono[1]), numer, plus, denom


def _pair_parallel(numer: list[Vec], denom: list[Vec]):
    """Match numerator factors w = m*u against denominators u.

    Each match turns (1-x^{mu})/(1-x^u) into the finite interval sum
    {0, u, ..., (m-1)u}, which keeps expansion coefficients small.
    m = 1 cancels the pair outright.
    Returns (residual numer, residual denom, [(u, m), ...]).
    """
    intervals: list[tuple[Vec, int]] = []
    numer = list(numer)
    residual_denom = []
    for u in denom:
        hit = None
        for i, w in enumerate(numer):
            if w[0] * u[1] == w[1] * u[0]:  # parallel, same side of d
                m = w[0] // u[0] if u[0] else w[1] // u[1]
                if m >= 1 and (m * u[0], m * u[1]) == w:
                    hit = (i, m)
                    break
        if hit is None:
            residual_denom.append(u)
        else:
            i, m = hit
            numer.pop(i)
            if m > 1:
                intervals.append((u, m))
    return numer, residual_denom, intervals


def _expand_numer(coeff: int, mono: Vec, numer: list[Vec], plus: list[Vec]) -> dict[Vec, int]:
    points = {tuple(mono): coeff}
    for w, sign in [(w, -1) for w in numer] + [(v, 1) for v in plus]:
        nxt: dict[Vec, int] = {}
        for p, c in points.items():
            nxt[p] = nxt.get(p, 0) + c
            q = (p[0] + w[0], p[1] + w[1])
            nxt[q] = nxt.get(q, 0) + sign * c
        points = {p: c for p, c in nxt.items() if c}
    return points


def _cross(u: Vec, v: Vec) -> int:
    return u[0] * v[1] - u[1] * v[0]


def _primitive(v: Vec) -> Vec:
    from math import gcd
    g = gcd(abs(v[0]), abs(v[1]))
    return (v[0] // g, v[1] // g)


_QUADRANT_BASES = (  # det(v, w) = 1 each; cone(v, w) is the closed quadrant
    ((1, 0), (0, 1)),
    ((0, 1), (-1, 0)),
    ((-1, 0), (0, -1)),
    ((0, -1), (1, 0)),
)


def _enclosing_basis(vectors: list[Vec]) -> tuple[Vec, Vec]:
    """A det-1 basis (v, w) whose nonnegative span contains all vectors.

    An axis quadrant is preferred whenever the sign patterns allow: it keeps
    the change of basis skew-free, so the working grid stays close to the
    requested window.  Otherwise the vectors span a pointed cone inside an
    open half-plane and a supercone is built from its clockwise extreme ray.
    """
    for v, w in _QUADRANT_BASES:
        # cone membership: cross(v, u) >= 0 and cross(u, w) >= 0
        if all(_cross(v, u) >= 0 and _cross(u, w) >= 0 for u in vectors):
            return v, w
    lo = hi = vectors[0]
    for u in vectors[1:]:
        if _cross(lo, u) < 0:
            lo = u
        if _cross(hi, u) > 0:
            hi = u
    v = _primitive(lo)
    w1 = _primitive(hi)
    if _cross(v, w1) == 1:
        return v, w1
    # pick w0 with det(v, w0) = v0*s + v1*t = 1, then shift by multiples of v
    # until cone(v, w) contains w1: need cross(w1, w0 + k v) >= 0, i.e.
    # k <= cross(w1, w0) / cross(v, w1)
    g, s, t = _ext_gcd(v[0], v[1])
    w0 = (-t, s)
    k = _cross(w1, w0) // _cross(v, w1)
    return v, (w0[0] + k * v[0], w0[1] + k * v[1])


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, s, t) with a*s + b*t = g = gcd(a, b)."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


_MAX_GRID_CELLS = 1 << 26
_INT64_SAFE = 1 << 61


class _Accumulator:
    """Window-shaped sum of term expansions: int64 ndarray while safe,
    spilled into a Python-int dict when coefficient bounds get large."""

    def __init__(self, window: Window):
        self.window = window
        x0, x1, y0, y1 = window
        self.grid = np.zeros((x1 - x0 + 1, y1 - y0 + 1), dtype=np.int64)
        self.big: dict[Vec, int] = {}
        self.bound = 0

    def reserve(self, term_bound: int) -> bool:
        """Account for a term; returns True if int64 accumulation stays safe."""
        self.bound += term_bound
        if term_bound < _INT64_SAFE and self.bound < _INT64_SAFE:
            return True
        self._spill()
        return term_bound < _INT64_SAFE

    def _spill(self) -> None:
        if self.grid is None:
            return
        x0, _, y0, _ = self.window
        for i, j in zip(*np.nonzero(self.grid)):
            p = (x0 + int(i), y0 + int(j))
            self.big[p] = self.big.get(p, 0) + int(self.grid[i, j])
        self.grid = None
        self.bound = 0

    def add_big(self, p: Vec, c: int) -> None:
        self._spill()
        self.big[p] = self.big.get(p, 0) + c

    def to_coeffs(self) -> dict[Vec, int]:
        out = dict(self.big)
        if self.grid is not None:
            x0, _, y0, _ = self.window
            for i, j in zip(*np.nonzero(self.grid)):
                p = (x0 + int(i), y0 + int(j))
                out[p] = out.get(p, 0) + int(self.grid[i, j])
        return {p: c for p, c in out.items() if c}

    def to_array(self):
        x0, x1, y0, y1 = self.window
        if self.grid is not None and not self.big:
            return self.grid
        arr = np.zeros((x1 - x0 + 1, y1 - y0 + 1), dtype=object)
        if self.grid is not None:
            arr += self.grid
        for (x, y), c in self.big.items():
            arr[x - x0, y - y0] += c
        return arr


def _expand_term_into(acc: _Accumulator, term: GFTerm, d: Vec) -> None:
    norm = _normalize_term(term, d)
    if norm is None:
        return
    coeff, mono, numer, plus, denom = norm
    numer, denom, intervals = _pair_parallel(numer, denom)
    points = _expand_numer(coeff, mono, numer, plus)
    if not points:
        return
    x0, x1, y0, y1 = acc.window

    series = [(u, 0) for u in denom] + intervals
    if not series:
        weight = sum(abs(c) for c in points.values())
        if acc.reserve(weight) and acc.grid is not None:
            for p, c in points.items():
                if x0 <= p[0] <= x1 and y0 <= p[1] <= y1:
                    acc.grid[p[0] - x0, p[1] - y0] += c
        else:
            for p, c in points.items():
                if x0 <= p[0] <= x1 and y0 <= p[1] <= y1:
                    acc.add_big(p, c)
        return

    v, w = _enclosing_basis([u for u, _ in series])
    # inverse of the column basis [v w]; det(v, w) = 1
    inv = ((w[1], -w[0]), (-v[1], v[0]))

    def tr(p: Vec) -> Vec:
        return (inv[0][0] * p[0] + inv[0][1] * p[1], inv[1][0] * p[0] + inv[1][1] * p[1])

    corners = [tr((x, y)) for x in (x0, x1) for y in (y0, y1)]
    hix = max(c[0] for c in corners)
    hiy = max(c[1] for c in corners)
    live = {tr(p): c for p, c in points.items()}
    live = {p: c for p, c in live.items() if p[0] <= hix and p[1] <= hiy}
    if not live:
        return
    lox = min(min(p[0] for p in live), min(c[0] for c in corners))
    loy = min(min(p[1] for p in live), min(c[1] for c in corners))
    nx, ny = hix - lox + 1, hiy - loy + 1
    if nx * ny > _MAX_GRID_CELLS:
        raise DomainError(
            f"expansion grid of {nx}x{ny} cells is too large; "
            "choose a tighter window or a less skewed direction")

    tseries = [(tr(u), m) for u, m in series]
    # conservative coefficient bound decides between int64 and big-int paths
    bound = sum(abs(c) for c in live.values())
    for (ux, uy), _m in tseries:
        steps = min(nx // ux if ux else nx, ny // uy if uy else ny)
        bound *= steps + 1
    int64_ok = acc.reserve(bound)

    grid = backend.run_passes(live, (lox, loy), (nx, ny), tseries, not int64_ok)

    identity = inv == ((1, 0), (0, 1))
    if int64_ok and acc.grid is not None and identity:
        # the working frame is axis-aligned with the window: pure slicing
        gx0, gx1 = max(x0, lox), min(x1, lox + nx - 1)
        gy0, gy1 = max(y0, loy), min(y1, loy + ny - 1)
        if gx0 <= gx1 and gy0 <= gy1:
            acc.grid[gx0 - x0: gx1 - x0 + 1, gy0 - y0: gy1 - y0 + 1] += \
                grid[gx0 - lox: gx1 - lox + 1, gy0 - loy: gy1 - loy + 1]
        return
    if int64_ok and acc.grid is not None:
        xs = np.arange(x0, x1 + 1, dtype=np.int64)[:, None]
        ys = np.arange(y0, y1 + 1, dtype=np.int64)[None, :]
        ii = inv[0][0] * xs + inv[0][1] * ys - lox
        jj = inv[1][0] * xs + inv[1][1] * ys - loy
        mask = (ii >= 0) & (ii < nx) & (jj >= 0) & (jj < ny)
        vals = np.zeros(mask.shape, dtype=np.int64)
        vals[mask] = grid[ii[mask], jj[mask]]
        acc.grid += vals
        return
    for x in range(x0, x1 + 1):
        for y in range(y0, y1 + 1):
            i = inv[0][0] * x + inv[0][1] * y - lox
            j = inv[1][0] * x + inv[1][1] * y - loy
            if 0 <= i < nx and 0 <= j < ny:
                c = grid[i][j] if not int64_ok else int(grid[i, j])
                if c:
                    acc.add_big((x, y), c)


def _expand_acc(f: RationalGF, window: Window, direction: Vec) -> _Accumulator:
    x0, x1, y0, y1 = window
    if x0 > x1 or y0 > y1:
        raise DomainError(f"empty window {window}")
    if tuple(direction) == (0, 0):
        raise ExpansionDirectionError("direction must be nonzero")
    acc = _Accumulator(window)
    for term in f.terms:
        _expand_term_into(acc, term, tuple(direction))
    return acc


def gf_expand(f: RationalGF, window: Window, direction: Vec) -> LaurentWindow:
    """Exact Laurent coefficients of f over the window.

    direction must have nonzero inner product with every denominator vector;
    otherwise an ExpansionDirectionError asks the caller for a generic one.
    """
    acc = _expand_acc(f, window, direction)
    return LaurentWindow(acc.to_coeffs(), window)


def gf_expand_grid(f: RationalGF, window: Window, direction: Vec):
    """Window-shaped (x, then y) coefficient array; int64 when safely exact,
    otherwise object dtype with Python ints.  Fast path for oracle sweeps."""
    return _expand_acc(f, window, direction).to_array()


def generic_direction(f: RationalGF, seed: Vec = (3, 1)) -> Vec:
    """A direction non-orthogonal to every denominator vector of f.

    Starts from the seed and perturbs deterministically until valid.
    """
    denoms = {u for t in f.terms for u in t.denom}
    dx, dy = seed
    for k in range(1000):
        d = (dx + k * k, dy + k)
        if all(d[0] * u[0] + d[1] * u[1] != 0 for u in denoms):
            return d
    raise ExpansionDirectionError("could not find a generic direction")


# -- serialization ----------------------------------------------------------

def term_to_text(t: GFTerm) -> str:
    parts = [f"{t.coeff} * x^({t.monomial[0]},{t.monomial[1]})"]
    for w in t.numer:
        parts.append(f"(1 - x^({w[0]},{w[1]}))")
    for v in t.plus:
        parts.append(f"(1 + x^({v[0]},{v[1]}))")
    s = " * ".join(parts)
    if t.denom:
        s += " / " + " ".join(f"(1 - x^({u[0]},{u[1]}))" for u in t.denom)
    return s


def gf_to_text(f: RationalGF) -> str:
    if not f.terms:
        return "0"
    return "\n+ ".join(term_to_text(t) for t in f.terms)


def gf_to_json_dict(f: RationalGF) -> dict:
    terms = []
    for t in f.terms:
        td = {
            "coeff": t.coeff,
            "monomial": list(t.monomial),
            "numer": [list(w) for w in t.numer],
            "denom": [list(u) for u in t.denom],
        }
        if t.plus:
            td["plus"] = [list(v) for v in t.plus]
        terms.append(td)
    return {"terms": terms}


def gf_from_json_dict(d: Mapping) -> RationalGF:
    return RationalGF(tuple(
        GFTerm(int(td["coeff"]), tuple(td["monomial"]),
               tuple(tuple(w) for w in td["numer"]),
               tuple(tuple(u) for u in td["denom"]),
               tuple(tuple(v) for v in td.get("plus", ())))
        for td in d["terms"]))


def gf_to_json(f: RationalGF) -> str:
    return json.dumps(gf_to_json_dict(f))


def gf_from_json(s: str) -> RationalGF:
    return gf_from_json_dict(json.loads(s))
