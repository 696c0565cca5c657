"""Lattice tetrahedra spanned by 0, e1, e2 and an apex (a, b, n): exact
emptiness and cleanness by brute enumeration, the gcd cleanness criterion,
the step-sum diagnostics f and g, and a parameter-level classifier.

With c = n - a - b + 1 (so a + b + c = n + 1), an empty tetrahedron forces
c >= 1, the step sums f(k) = B_{n,a}(k) + B_{n,b}(k) + B_{n,c}(k) to equal
1 for k = 2 .. n-1, and then one of a, b, c to equal 1; conversely apexes
(1, d, n) with gcd(d, n) = 1 give empty tetrahedra.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Optional

from .errors import DomainError, UndefinedParameterError
from .numeric import SlopePair
from .sequences import beatty

Vec3 = tuple[int, int, int]


@dataclass(frozen=True)
class TetraSpec:
    """conv{0, e1, e2, (a, b, n)} with n >= 1."""

    a: int
    b: int
    n: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise DomainError(f"n must be >= 1, got {self.n}")

    @property
    def c(self) -> int:
        return self.n - self.a - self.b + 1

    @property
    def vertices(self) -> tuple[Vec3, Vec3, Vec3, Vec3]:
        return ((0, 0, 0), (1, 0, 0), (0, 1, 0), (self.a, self.b, self.n))


def _barycentric_num(t: TetraSpec, p: Vec3) -> tuple[int, int, int, int]:
    """Barycentric coordinates times n: (n*alpha1, ..., n*alpha4), exact."""
    x, y, z = p
    a4 = z
    a2 = t.n * x - t.a * z
    a3 = t.n * y - t.b * z
    a1 = t.n - a2 - a3 - a4
    return a1, a2, a3, a4


def tetra_points_brute(t: TetraSpec) -> list[Vec3]:
    """All lattice points of the closed tetrahedron, by exact barycentric tests."""
    pts = []
    n = t.n
    for z in range(0, n + 1):
        # n*alpha2 = n*x - a*z in [0, n]  =>  x in [a z / n, (a z + n)/n]
        x_lo = -((-t.a * z) // n)
        x_hi = (t.a * z + n) // n
        y_lo = -((-t.b * z) // n)
        y_hi = (t.b * z + n) // n
        for x in range(x_lo, x_hi + 1):
            for y in range(y_lo, y_hi + 1):
                a1, a2, a3, a4 = _barycentric_num(t, (x, y, z))
                if 0 <= a1 <= n and 0 <= a2 <= n and 0 <= a3 <= n and 0 <= a4 <= n:
                    pts.append((x, y, z))
    return sorted(pts)


def is_empty(t: TetraSpec) -> bool:
    """Only the four vertices are lattice points."""
    return len(tetra_points_brute(t)) == 4


def is_clean(t: TetraSpec) -> bool:
    """No non-vertex lattice point on the boundary (some barycentric = 0)."""
    verts = set(t.vertices)
    for p in tetra_points_brute(t):
        if p in verts:
            continue
        if 0 in _barycentric_num(t, p):
            return False
    return True


def reeve_criterion(t: TetraSpec) -> bool:
    """gcd characterization of cleanness: n = 1 (the unit-height case), or
    gcd(a, n) = gcd(b, n) = gcd(1 - a - b, n) = 1 with n >= 2.

    The gcds are invariant under shearing a, b modulo n, so parameters
    outside [0, n-1] need no explicit normalization.
    """
    if t.n == 1:
        return True
    return (gcd(t.a, t.n) == 1 and gcd(t.b, t.n) == 1
            and gcd(1 - t.a - t.b, t.n) == 1)


def _require_abc(t: TetraSpec) -> tuple[int, int, int]:
    if t.a < 1 or t.b < 1 or t.c < 1:
        raise UndefinedParameterError(
            f"f/g need a, b, c >= 1; got a={t.a}, b={t.b}, c={t.c}")
    return t.a, t.b, t.c


def f_function(t: TetraSpec, k: int) -> int:
    """B_{n,a}(k) + B_{n,b}(k) + B_{n,c}(k)."""
    a, b, c = _require_abc(t)
    n = t.n
    return (beatty(SlopePair(n, a), k) + beatty(SlopePair(n, b), k)
            + beatty(SlopePair(n, c), k))


def g_function(t: TetraSpec, k: int) -> int:
    """ceil(ak/n) + ceil(bk/n) + ceil(ck/n)."""
    a, b, c = _require_abc(t)
    n = t.n
    return -((-a * k) // n) - ((-b * k) // n) - ((-c * k) // n)


@dataclass(frozen=True)
class Verdict:
    empty: bool
    clean: bool
    f_all_one: Optional[bool]  # None when f is undefined for these parameters
    abc_has_one: bool
    white_form: Optional[tuple[int, int, int]]  # (1, d, n); (0, 0, 1) for unit height

    def to_json_dict(self) -> dict:
        return {
            "empty": self.empty,
            "clean": self.clean,
            "f_all_one": self.f_all_one,
            "abc_has_one": self.abc_has_one,
            "white_form": list(self.white_form) if self.white_form else None,
        }


def classify(t: TetraSpec) -> Verdict:
    """Parameter-level classification; no equivalence witness is constructed.

    a and b are first normalized modulo n (a shear equivalence), then
    abc_has_one asks whether 1 appears among the normalized a, b, c.  When
    it does, the reported form is (1, d, n) with d the smaller of the two
    remaining parameters (they sum to n, so both or neither are coprime
    to n).
    """
    empty = is_empty(t)
    clean = is_clean(t)
    n = t.n
    if n == 1:
        return Verdict(empty, clean, None, False, (0, 0, 1))
    a = t.a % n
    b = t.b % n
    c = n - a - b + 1
    norm = TetraSpec(a, b, n)
    if a >= 1 and b >= 1 and c >= 1:
        f_all_one = all(f_function(norm, k) == 1 for k in range(2, n))
    else:
        f_all_one = None
    abc_has_one = 1 in (a, b, c)
    white_form = None
    if abc_has_one:
        rest = sorted([a, b, c])
        rest.remove(1)
        white_form = (1, min(rest), n)
    return Verdict(empty, clean, f_all_one, abc_has_one, white_form)
