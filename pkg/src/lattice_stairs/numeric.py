"""Exact integer helpers: floor division, Euclidean remainder chains, and
2x2 unimodular affine maps of the integer lattice.

Everything here is arbitrary-precision (plain Python ints), immutable and
pure, so values can be shared freely between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable

from .errors import DomainError

Vec = tuple[int, int]


def floor_div_mod(b: int, a: int) -> tuple[int, int]:
    """Return (q, r) with b = q*a + r and 0 <= r < a.

    Floor semantics for negative b: floor_div_mod(-3, 5) == (-1, 2).
    """
    if a <= 0:
        raise DomainError(f"divisor must be positive, got {a}")
    return divmod(b, a)


@dataclass(frozen=True)
class SlopePair:
    """Coprime positive integers (a, b) defining the slope b/a."""

    a: int
    b: int

    def __post_init__(self) -> None:
        if self.a < 1 or self.b < 1:
            raise DomainError(f"slope parameters must be >= 1, got ({self.a}, {self.b})")

    @classmethod
    def coprime(cls, a: int, b: int) -> "SlopePair":
        """Checked constructor: raises unless gcd(a, b) == 1."""
        if a >= 1 and b >= 1 and gcd(a, b) != 1:
            raise DomainError(f"({a}, {b}) is not coprime")
        return cls(a, b)

    @property
    def is_coprime(self) -> bool:
        return gcd(self.a, self.b) == 1

    def require_coprime(self) -> "SlopePair":
        if not self.is_coprime:
            raise DomainError(f"operation requires gcd(a, b) = 1, got ({self.a}, {self.b})")
        return self


@dataclass(frozen=True)
class EuclidChain:
    """Remainder chain c1 = b, c2 = a, c[i+2] = c[i] mod c[i+1], down to the first 0."""

    entries: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i: int) -> int:
        return self.entries[i]


def euclid_chain(a: int, b: int) -> EuclidChain:
    """Remainder chain starting [b, a, ...], ending at the first zero entry.

    If gcd(a, b) == 1 the last nonzero entry is 1.  The length is at most
    2*log2(a) + 4 (each remainder at least halves every two steps).
    """
    if a < 1 or b < 1:
        raise DomainError(f"chain parameters must be >= 1, got ({a}, {b})")
    entries = [b, a]
    while entries[-1] != 0:
        entries.append(entries[-2] % entries[-1])
    return EuclidChain(tuple(entries))


def _mat_mul(m1: tuple[Vec, Vec], m2: tuple[Vec, Vec]) -> tuple[Vec, Vec]:
    return (
        (m1[0][0] * m2[0][0] + m1[0][1] * m2[1][0], m1[0][0] * m2[0][1] + m1[0][1] * m2[1][1]),
        (m1[1][0] * m2[0][0] + m1[1][1] * m2[1][0], m1[1][0] * m2[0][1] + m1[1][1] * m2[1][1]),
    )


@dataclass(frozen=True)
class AffineLatticeMap:
    """p -> matrix @ p + translation with |det(matrix)| = 1, so Z^2 maps onto Z^2."""

    matrix: tuple[Vec, Vec]
    translation: Vec = (0, 0)

    def __post_init__(self) -> None:
        if abs(self.det) != 1:
            raise DomainError(f"matrix must be unimodular, det = {self.det}")

    @property
    def det(self) -> int:
        (m11, m12), (m21, m22) = self.matrix
        return m11 * m22 - m12 * m21

    def apply(self, p: Vec) -> Vec:
        (m11, m12), (m21, m22) = self.matrix
        return (m11 * p[0] + m12 * p[1] + self.translation[0],
                m21 * p[0] + m22 * p[1] + self.translation[1])

    def apply_linear(self, v: Vec) -> Vec:
        """Matrix part only; right action on difference vectors."""
        (m11, m12), (m21, m22) = self.matrix
        return (m11 * v[0] + m12 * v[1], m21 * v[0] + m22 * v[1])

    def apply_set(self, points: Iterable[Vec]) -> frozenset[Vec]:
        return frozenset(self.apply(p) for p in points)

    def compose(self, other: "AffineLatticeMap") -> "AffineLatticeMap":
        """self after other: (self.compose(other)).apply(p) == self.apply(other.apply(p))."""
        return AffineLatticeMap(
            _mat_mul(self.matrix, other.matrix),
            self.apply(other.translation),
        )

    def inverse(self) -> "AffineLatticeMap":
        (m11, m12), (m21, m22) = self.matrix
        d = self.det  # +1 or -1
        inv = ((m22 * d, -m12 * d), (-m21 * d, m11 * d))
        t = (inv[0][0] * self.translation[0] + inv[0][1] * self.translation[1],
             inv[1][0] * self.translation[0] + inv[1][1] * self.translation[1])
        return AffineLatticeMap(inv, (-t[0], -t[1]))

    @classmethod
    def identity(cls) -> "AffineLatticeMap":
        return cls(((1, 0), (0, 1)))

    @classmethod
    def shear(cls, q: int) -> "AffineLatticeMap":
        """(x, y) -> (x, qx + y); keeps columns invariant."""
        return cls(((1, 0), (q, 1)))

    @classmethod
    def diagonal_reflection(cls) -> "AffineLatticeMap":
        """(x, y) -> (y, x)."""
        return cls(((0, 1), (1, 0)))

    @classmethod
    def origin_reflection(cls) -> "AffineLatticeMap":
        """(x, y) -> (-x, -y)."""
        return cls(((-1, 0), (0, -1)))

    @classmethod
    def antidiagonal_reflection(cls) -> "AffineLatticeMap":
        """(x, y) -> (-y, -x): origin reflection after diagonal reflection."""
        return cls(((0, -1), (-1, 0)))

    @classmethod
    def translate(cls, v: Vec) -> "AffineLatticeMap":
        return cls(((1, 0), (0, 1)), (v[0], v[1]))


def apply_map(m: AffineLatticeMap, p: Vec) -> Vec:
    return m.apply(p)
