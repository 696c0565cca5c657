"""Periodic integer sequences and rational-slope Beatty machinery.

A bi-infinite periodic sequence is stored as one period.  The step sequence
of slope b/a is

    beatty(a, b, n) = floor(b*n/a) - floor(b*(n-1)/a),

balanced at floor(b/a); subtracting that floor yields the 0,1-sequence that
records where the long steps sit.  Four independent decision procedures
characterize exactly those 0,1-sequences that arise this way: being a shift
of a reduced step sequence, the recursive block condition, even distribution
of the ones, and swap symmetry.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Optional

from .errors import DomainError
from .numeric import SlopePair


def beatty(sp: SlopePair, n: int) -> int:
    """floor((b/a) n) - floor((b/a) (n-1)), exact for any integer n."""
    a, b = sp.a, sp.b
    return (b * n) // a - (b * (n - 1)) // a


@dataclass(frozen=True)
class PeriodicIntSeq:
    """One full period of a bi-infinite periodic integer sequence.

    The stored period need not be minimal; equality semantics that matter
    mathematically ("identical up to shift") go through ``canonical()``,
    the lexicographically smallest rotation of the minimal period.
    """

    period: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.period:
            raise DomainError("period must be non-empty")
        object.__setattr__(self, "period", tuple(int(v) for v in self.period))

    def __len__(self) -> int:
        return len(self.period)

    def value(self, n: int) -> int:
        return self.period[n % len(self.period)]

    @property
    def minimal_period_length(self) -> int:
        p = self.period
        n = len(p)
        for d in range(1, n + 1):
            if n % d == 0 and all(p[i] == p[i % d] for i in range(n)):
                return d
        return n  # unreachable: d = n always matches

    def minimal(self) -> "PeriodicIntSeq":
        return PeriodicIntSeq(self.period[: self.minimal_period_length])

    def canonical(self) -> tuple[int, ...]:
        """Lexicographically smallest rotation of the minimal period."""
        p = self.period[: self.minimal_period_length]
        return min(p[i:] + p[:i] for i in range(len(p)))

    @property
    def is_zero_one(self) -> bool:
        return all(v in (0, 1) for v in self.period)

    def ones(self) -> int:
        """Number of ones in the minimal period (0,1-sequences only)."""
        if not self.is_zero_one:
            raise DomainError("ones() requires a 0,1-sequence")
        return sum(self.period[: self.minimal_period_length])

    def reversed(self) -> "PeriodicIntSeq":
        return PeriodicIntSeq(tuple(reversed(self.period)))


def beatty_period(sp: SlopePair) -> PeriodicIntSeq:
    """One period (sampled at n = 1..a) of the slope-b/a step sequence.

    Requires gcd(a, b) = 1; then the minimal period is a and the entries
    sum to b.
    """
    sp.require_coprime()
    a = sp.a
    return PeriodicIntSeq(tuple(beatty(sp, n) for n in range(1, a + 1)))


def is_balanced(s: PeriodicIntSeq) -> Optional[int]:
    """The k with all entries in {k, k+1}, if any.

    A constant sequence with value c reports k = c (its reduction is the
    zero sequence).
    """
    lo, hi = min(s.period), max(s.period)
    if hi - lo > 1:
        return None
    return lo if hi != lo else hi


def reduce(s: PeriodicIntSeq) -> PeriodicIntSeq:
    """Subtract the balance level, leaving a 0,1-sequence."""
    k = is_balanced(s)
    if k is None:
        raise DomainError(f"sequence {s.period} is not balanced")
    return PeriodicIntSeq(tuple(v - k for v in s.period))


def shift_equivalent(s: PeriodicIntSeq, t: PeriodicIntSeq) -> bool:
    """True iff some shift makes the bi-infinite extensions equal."""
    return s.canonical() == t.canonical()


def block_sequence(s: PeriodicIntSeq) -> PeriodicIntSeq:
    """Lengths of the maximal blocks "1 0...0" of a 0,1-sequence.

    The period is rotated so it starts at a 1 before cutting blocks; the
    result is defined up to shift, and block lengths are listed from that
    first 1 onward.
    """
    if not s.is_zero_one:
        raise DomainError("block_sequence requires a 0,1-sequence")
    p = s.minimal().period
    if 1 not in p:
        raise DomainError("block_sequence requires at least one 1 per period")
    start = p.index(1)
    p = p[start:] + p[:start]
    ones_at = [i for i, v in enumerate(p) if v == 1]
    ones_at.append(len(p))
    return PeriodicIntSeq(tuple(ones_at[j + 1] - ones_at[j] for j in range(len(ones_at) - 1)))


def _zero_one_minimal(s: PeriodicIntSeq) -> PeriodicIntSeq:
    if not s.is_zero_one:
        raise DomainError("operation requires a 0,1-sequence")
    m = s.minimal()
    if 1 not in m.period:
        raise DomainError("operation requires at least one 1 per period")
    return m


def is_sturmian(s: PeriodicIntSeq) -> bool:
    """True iff s is, up to shift, the reduced step sequence of some rational slope.

    The input is normalized to its minimal period first; with period length
    a and b ones, the candidate slope is b/a, which only exists in reduced
    form when gcd(a, b) = 1 (otherwise minimal periods already differ).
    """
    m = _zero_one_minimal(s)
    a, b = len(m.period), sum(m.period)
    if a == b:
        return True  # all-ones, minimal period (1,)
    if gcd(a, b) != 1:
        return False
    return shift_equivalent(m, reduce(beatty_period(SlopePair(a, b))))


def is_recursively_balanced(s: PeriodicIntSeq) -> bool:
    """Recursive block condition: one 1 per period, or block-balanced with a
    recursively balanced reduced block sequence.

    Terminates because the reduced block sequence has strictly fewer ones.
    """
    m = _zero_one_minimal(s)
    if sum(m.period) == 1:
        return True
    blocks = block_sequence(m)
    if is_balanced(blocks) is None:
        return False
    return is_recursively_balanced(reduce(blocks))


def is_evenly_distributed(s: PeriodicIntSeq) -> bool:
    """True iff every interval holds floor or ceil of density * length ones.

    Checking lengths 1 .. P-1 at every start is complete: an interval of
    length qP + r contains exactly q full periods contributing q*ones, so
    its condition reduces to the length-r case.
    """
    m = _zero_one_minimal(s)
    p = m.period
    n = len(p)
    b = sum(p)
    prefix = [0]
    for v in p + p:
        prefix.append(prefix[-1] + v)
    for start in range(n):
        for length in range(1, n):
            ones = prefix[start + length] - prefix[start]
            # strict two-sided bound: (ones-1) < b*length/n < (ones+1)
            if not ((ones - 1) * n < b * length < (ones + 1) * n):
                return False
    return True


def swap(s: PeriodicIntSeq, i: int) -> PeriodicIntSeq:
    """Decrement entries at positions = i, increment at i+1 (mod the minimal period)."""
    p = list(s.minimal().period)
    n = len(p)
    p[i % n] -= 1
    p[(i + 1) % n] += 1
    return PeriodicIntSeq(tuple(p))


def is_swap_symmetric(s: PeriodicIntSeq) -> bool:
    """True iff some swap produces a shift of the same sequence."""
    m = s.minimal()
    n = len(m.period)
    target = m.canonical()
    return any(swap(m, i).canonical() == target for i in range(n))
