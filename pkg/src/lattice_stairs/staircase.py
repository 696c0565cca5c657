"""Lattice point sets near a rational line: half-planes, pipes, staircases,
corners, and the Euclid-style recursive construction of staircase windows.

For slope b/a, offset r and orientation sigma, membership tests evaluate

    v = sigma * ((b/a) x - y + r)

exactly over Q.  The vertical pipe is 0 <= v < 1, the horizontal pipe is
0 <= v < b/a; their union is the staircase, their intersection the corners.
Windows are inclusive column ranges [x0, x1]; staircases of positive slope
have every column of the window non-empty.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from .errors import DomainError
from .numeric import SlopePair, Vec

Which = Literal["staircase", "corners"]


@dataclass(frozen=True)
class LineSpec:
    """Oriented rational line y = (b/a) x + r with half-plane side sigma."""

    slope: SlopePair
    offset: Fraction = Fraction(0)
    sigma: int = 1

    def __post_init__(self) -> None:
        if self.sigma not in (1, -1):
            raise DomainError(f"sigma must be +1 or -1, got {self.sigma}")
        object.__setattr__(self, "offset", Fraction(self.offset))
        self.slope.require_coprime()

    def line_value(self, p: Vec) -> Fraction:
        """sigma * ((b/a) p1 - p2 + r); 0 on the line, positive inside the half-plane."""
        return self.sigma * (Fraction(self.slope.b, self.slope.a) * p[0] - p[1] + self.offset)


@dataclass(frozen=True)
class PointWindow:
    """A finite lattice point set restricted to the column range [x0, x1]."""

    points: frozenset[Vec]
    window: tuple[int, int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "points", frozenset(tuple(p) for p in self.points))
        x0, x1 = self.window
        if any(not (x0 <= p[0] <= x1) for p in self.points):
            raise DomainError("point outside the column window")

    @property
    def y_range(self) -> tuple[int, int] | None:
        """Derived row extent, for rendering; None when empty."""
        if not self.points:
            return None
        ys = [p[1] for p in self.points]
        return (min(ys), max(ys))

    def column(self, x: int) -> frozenset[Vec]:
        return frozenset(p for p in self.points if p[0] == x)

    def row(self, y: int) -> frozenset[Vec]:
        return frozenset(p for p in self.points if p[1] == y)

    def translate(self, v: Vec) -> "PointWindow":
        x0, x1 = self.window
        return PointWindow(frozenset((p[0] + v[0], p[1] + v[1]) for p in self.points),
                           (x0 + v[0], x1 + v[0]))

    def normalized(self) -> frozenset[Vec]:
        """Point set shifted so its lexicographically smallest point is the origin."""
        if not self.points:
            return frozenset()
        ax, ay = min(self.points)
        return frozenset((p[0] - ax, p[1] - ay) for p in self.points)


def in_halfplane(ls: LineSpec, p: Vec) -> bool:
    return ls.line_value(p) >= 0


def pipe_membership(ls: LineSpec, p: Vec) -> tuple[bool, bool]:
    """(in vertical pipe, in horizontal pipe); union = staircase, intersection = corners."""
    v = ls.line_value(p)
    slope = Fraction(ls.slope.b, ls.slope.a)
    return (0 <= v < 1, 0 <= v < slope)


def _column_y_bounds(ls: LineSpec, x: int, which: str) -> tuple[int, int]:
    """Inclusive integer y-range of one column of a pipe/staircase/corner set."""
    a, b = ls.slope.a, ls.slope.b
    height = Fraction(b, a) * x + ls.offset
    slope = Fraction(b, a)
    one = Fraction(1)
    if which == "vpipe":
        width = one
    elif which == "hpipe":
        width = slope
    elif which == "staircase":
        width = max(one, slope)
    elif which == "corners":
        width = min(one, slope)
    else:
        raise DomainError(f"unknown selector {which!r}")
    if ls.sigma == 1:
        # height - width < y <= height
        lo = math.floor(height - width) + 1
        hi = math.floor(height)
    else:
        # height <= y < height + width
        lo = math.ceil(height)
        hi = math.ceil(height + width) - 1
    return lo, hi


def staircase_window(ls: LineSpec, x0: int, x1: int, which: Which = "staircase") -> PointWindow:
    """All staircase (or corner) points with first coordinate in [x0, x1]."""
    if x0 > x1:
        raise DomainError(f"empty window [{x0}, {x1}]")
    pts = set()
    for x in range(x0, x1 + 1):
        lo, hi = _column_y_bounds(ls, x, which)
        pts.update((x, y) for y in range(lo, hi + 1))
    return PointWindow(frozenset(pts), (x0, x1))


def pipe_window(ls: LineSpec, x0: int, x1: int) -> tuple[PointWindow, PointWindow]:
    """(vertical pipe, horizontal pipe) windows; test helper for the pipe inclusions."""
    out = []
    for which in ("vpipe", "hpipe"):
        pts = set()
        for x in range(x0, x1 + 1):
            lo, hi = _column_y_bounds(ls, x, which)
            pts.update((x, y) for y in range(lo, hi + 1))
        out.append(PointWindow(frozenset(pts), (x0, x1)))
    return out[0], out[1]


def column_counts(ls: LineSpec, x0: int, x1: int, which: Which = "staircase") -> list[int]:
    """Column cardinalities over the window; these are the slope's step counts."""
    if x0 > x1:
        raise DomainError(f"empty window [{x0}, {x1}]")
    counts = []
    for x in range(x0, x1 + 1):
        lo, hi = _column_y_bounds(ls, x, which)
        counts.append(max(0, hi - lo + 1))
    return counts


def reflect(pw: PointWindow, which: Literal["diagonal", "origin"]) -> PointWindow:
    """Reflect the point set; the result is re-windowed by its own column range.

    Diagonal reflection swaps coordinates (turning a column window into a row
    window); origin reflection negates both.  Reflections are exact on the
    infinite sets, so callers comparing windows must cut matching columns.
    """
    if which == "diagonal":
        pts = frozenset((p[1], p[0]) for p in pw.points)
    elif which == "origin":
        pts = frozenset((-p[0], -p[1]) for p in pw.points)
    else:
        raise DomainError(f"unknown reflection {which!r}")
    if pts:
        xs = [p[0] for p in pts]
        window = (min(xs), max(xs))
    else:
        window = (0, 0)
    return PointWindow(pts, window)


def _stairs_rec(a: int, b: int, x0: int, x1: int) -> tuple[set[Vec], set[Vec]]:
    """(staircase, corners) of slope b/a over columns [x0, x1], built purely
    from the three recursion cases: shear reduction for a < b, double
    reflection to swap parameters, and the explicit integral-slope rows."""
    if x0 > x1:
        return set(), set()
    if b == 1:
        stair = {(x, x // a) for x in range(x0, x1 + 1)}
        corner = {(x, x // a) for x in range(x0, x1 + 1) if x % a == 0}
        return stair, corner
    if 1 < a < b:
        q, c = divmod(b, a)
        s1, c1 = _stairs_rec(a, c, x0, x1)  # the shear keeps columns fixed
        sheared = {(x, q * x + y) for (x, y) in s1}
        sheared_c = {(x, q * x + y) for (x, y) in c1}
        corner = sheared
        stair = {(x, y - t) for (x, y) in sheared for t in range(q)}
        stair |= {(x, y - q) for (x, y) in sheared_c}
        return stair, corner
    # a > b (flat) or a == 1: swap parameters through (x, y) -> (-y, -x).
    # Required preimage columns cover the y-range of our columns, padded.
    ylo = (b * x0) // a - b // a - 3
    yhi = (b * x1) // a + b // a + 3
    s1, c1 = _stairs_rec(b, a, -yhi, -ylo)
    stair = {(-y, -x) for (x, y) in s1 if x0 <= -y <= x1}
    corner = {(-y, -x) for (x, y) in c1 if x0 <= -y <= x1}
    return stair, corner


def staircase_by_recursion(sp: SlopePair, x0: int, x1: int) -> tuple[PointWindow, PointWindow]:
    """Staircase and corner windows of slope b/a (r = 0, sigma = +) built by
    recursion only, never by membership testing."""
    sp.require_coprime()
    if x0 > x1:
        raise DomainError(f"empty window [{x0}, {x1}]")
    stair, corner = _stairs_rec(sp.a, sp.b, x0, x1)
    return (PointWindow(frozenset(stair), (x0, x1)),
            PointWindow(frozenset(corner), (x0, x1)))


def line_lattice_point(ls: LineSpec) -> Vec | None:
    """Some lattice point on the line, or None.

    One exists iff r = k/a for integral k; then b*x - a*y = -k is solvable
    because gcd(a, b) = 1 (extended Euclid).
    """
    a, b = ls.slope.a, ls.slope.b
    k = ls.offset * a
    if k.denominator != 1:
        return None
    k = int(k)
    # solve b*x = -k (mod a)
    x = (-k * pow(b, -1, a)) % a if a > 1 else 0
    y = (b * x + k) // a
    return (x, y)


def translate_equivalent(pw1: PointWindow, pw2: PointWindow, min_overlap_cols: int = 1) -> bool:
    """True iff some integer translate of pw1's points matches pw2's on the
    overlapping column range (with at least min_overlap_cols columns).

    Purely set-level: every column shift with enough overlap is tried, the
    row shift is pinned by the first populated column and then verified
    across the overlap, so no translation is constructed from number theory.
    """
    if not pw1.points or not pw2.points:
        return pw1.points == pw2.points
    cols1: dict[int, list[int]] = {}
    cols2: dict[int, list[int]] = {}
    for (x, y) in pw1.points:
        cols1.setdefault(x, []).append(y)
    for (x, y) in pw2.points:
        cols2.setdefault(x, []).append(y)
    for c in cols1.values():
        c.sort()
    for c in cols2.values():
        c.sort()
    s_lo = pw2.window[0] - pw1.window[1] + min_overlap_cols - 1
    s_hi = pw2.window[1] - pw1.window[0] - min_overlap_cols + 1
    for s in range(s_lo, s_hi + 1):
        lo = max(pw1.window[0] + s, pw2.window[0])
        hi = min(pw1.window[1] + s, pw2.window[1])
        if hi - lo + 1 < min_overlap_cols:
            continue
        dy = None
        ok = True
        for x in range(lo, hi + 1):
            ys1 = cols1.get(x - s, ())
            ys2 = cols2.get(x, ())
            if len(ys1) != len(ys2):
                ok = False
                break
            if not ys1:
                continue
            if dy is None:
                dy = ys2[0] - ys1[0]
            if any(y1 + dy != y2 for y1, y2 in zip(ys1, ys2)):
                ok = False
                break
        if ok and dy is not None:
            return True
    return False


def render(stair: PointWindow, corners: PointWindow | None = None, header: str | None = None) -> str:
    """ASCII picture: rows top-to-bottom, '#' staircase point, 'O' corner, '.' empty."""
    pts = set(stair.points)
    cpts = set(corners.points) if corners is not None else set()
    pts |= cpts
    x0, x1 = stair.window
    lines = []
    if header is not None:
        lines.append(header)
    if not pts:
        lines.append("(empty window)")
        return "\n".join(lines)
    ys = [p[1] for p in pts]
    for y in range(max(ys), min(ys) - 1, -1):
        row = []
        for x in range(x0, x1 + 1):
            if (x, y) in cpts:
                row.append("O")
            elif (x, y) in pts:
                row.append("#")
            else:
                row.append(".")
        lines.append("".join(row))
    return "\n".join(lines)
