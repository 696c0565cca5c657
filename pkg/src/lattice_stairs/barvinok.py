"""Short rational generating functions for 2-D triangles and cones.

The half-open triangle under the segment from the origin to (a, b) (right
edge at x = a, diagonal lattice points removed) is partitioned Euclid-style:
shear off the integral-slope part below y = (b div a) x, swap parameters by
the antidiagonal reflection plus a translation, and recurse; the base case
is a single column.  Each integral-slope piece costs two terms, so the whole
representation has O(chain length) terms, and the pieces are pairwise
disjoint lattice sets (a positive decomposition, not a signed one).

The cone spanned by (1, 0) and (a, b) is a one-period slab repeated along
(a, b): the slab splits into the origin, the half-open triangle, and a
quarter-plane tail starting at x = a + 1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .genfun import (GFTerm, RationalGF, gf_add, gf_interval, gf_mul,
                     gf_scale, gf_substitute, generic_direction)
from .numeric import SlopePair, Vec
from .staircase import PointWindow

# antidiagonal reflection (x, y) -> (-y, -x) as an exponent matrix
_SWAP = ((0, -1), (-1, 0))


@dataclass(frozen=True)
class TriangleSpec:
    slope: SlopePair
    half_open: bool = False


@dataclass(frozen=True)
class ConeSpec:
    slope: SlopePair

    def __post_init__(self) -> None:
        self.slope.require_coprime()


def triangle_points_brute(t: TriangleSpec) -> PointWindow:
    """Exact enumeration by membership tests: 0 <= x <= a, 0 <= y, a*y <= b*x;
    the half-open variant removes the lattice points of the diagonal segment."""
    a, b = t.slope.a, t.slope.b
    from math import gcd
    g = gcd(a, b)
    pts = set()
    for x in range(a + 1):
        for y in range(b + 1):
            if a * y <= b * x:
                if t.half_open and b * x == a * y and x % (a // g) == 0:
                    continue  # on the diagonal segment
                pts.add((x, y))
    return PointWindow(frozenset(pts), (0, a))


def cone_member(cs: ConeSpec, p: Vec) -> bool:
    """p in cone((1,0),(a,b)): 0 <= a*y <= b*x."""
    return 0 <= cs.slope.a * p[1] <= cs.slope.b * p[0]


def _column_gf(b: int) -> RationalGF:
    """{(1, 0), ..., (1, b-1)}: the single-column half-open triangle."""
    return gf_scale(gf_interval((0, 1), b - 1), 1, (1, 0))


def _integral_slope_gf(a: int, q: int) -> RationalGF:
    """Half-open triangle below y = qx over columns 1..a (q >= 1):
    (1/(1-x2)) * ((1-x1^{a+1})/(1-x1) - (1-x1^{a+1}x2^{q(a+1)})/(1-x1 x2^q))."""
    return RationalGF((
        GFTerm(1, (0, 0), (((a + 1), 0),), ((0, 1), (1, 0))),
        GFTerm(-1, (0, 0), ((a + 1, q * (a + 1)),), ((0, 1), (1, q))),
    ))


def gf_half_open_triangle_pieces(sp: SlopePair) -> list[RationalGF]:
    """Disjoint pieces whose union is the half-open triangle's lattice set."""
    sp.require_coprime()
    return _tri_pieces(sp.a, sp.b)


def _tri_pieces(a: int, b: int) -> list[RationalGF]:
    if a == 1:
        return [_column_gf(b)]
    q, c = divmod(b, a)
    # shear (1 0; q 1) after the antidiagonal swap, then translate by (a, b)
    n = ((0, -1), (-1, -q))
    pieces = [gf_scale(gf_substitute(p, n), 1, (a, b)) for p in _tri_pieces(c, a)]
    if q >= 1:
        pieces.append(_integral_slope_gf(a, q))
    return pieces


def gf_half_open_triangle(sp: SlopePair) -> RationalGF:
    return gf_add(*gf_half_open_triangle_pieces(sp))


def gf_closed_triangle(sp: SlopePair) -> RationalGF:
    """Closed triangle = half-open triangle plus the two diagonal endpoints."""
    sp.require_coprime()
    return gf_add(RationalGF.monomial(1),
                  gf_half_open_triangle(sp),
                  RationalGF.monomial(1, (sp.a, sp.b)))


def _slab_pieces(sp: SlopePair) -> list[RationalGF]:
    a, b = sp.a, sp.b
    tail = RationalGF((GFTerm(1, (a + 1, 0), ((0, b),), ((1, 0), (0, 1))),))
    return [RationalGF.monomial(1)] + gf_half_open_triangle_pieces(sp) + [tail]


def gf_cone_pieces(cs: ConeSpec) -> list[RationalGF]:
    """Disjoint pieces of the cone: each slab piece swept along (a, b)."""
    a, b = cs.slope.a, cs.slope.b
    rep = RationalGF((GFTerm(1, (0, 0), (), ((a, b),)),))
    return [gf_mul(p, rep) for p in _slab_pieces(cs.slope)]


def gf_cone(cs: ConeSpec) -> RationalGF:
    return gf_add(*gf_cone_pieces(cs))


def cone_direction(cs: ConeSpec) -> Vec:
    """Default expansion direction for cone GFs: positive on (1,0), (0,1) and
    (a,b); perturbed if some transformed denominator is orthogonal."""
    return generic_direction(gf_cone(cs), seed=(2 * cs.slope.b + 1, 1))


def triangle_direction(sp: SlopePair) -> Vec:
    return generic_direction(gf_half_open_triangle(sp), seed=(2 * sp.b + 1, 1))
