import math

import pytest
from hypothesis import given, strategies as st

from lattice_stairs.errors import DomainError
from lattice_stairs.numeric import (AffineLatticeMap, SlopePair, apply_map,
                                    euclid_chain, floor_div_mod)


def test_floor_div_mod_examples():
    assert floor_div_mod(13, 5) == (2, 3)
    assert floor_div_mod(0, 7) == (0, 0)
    # the only (q, r) with 0 <= r < 5 and -3 = 5q + r
    assert floor_div_mod(-3, 5) == (-1, 2)


def test_floor_div_mod_rejects_zero_divisor():
    with pytest.raises(DomainError):
        floor_div_mod(3, 0)
    with pytest.raises(DomainError):
        floor_div_mod(3, -2)


@given(st.integers(-10**12, 10**12), st.integers(1, 10**9))
def test_floor_div_mod_roundtrip(b, a):
    q, r = floor_div_mod(b, a)
    assert q * a + r == b
    assert 0 <= r < a


def test_euclid_chain_examples():
    assert list(euclid_chain(5, 13)) == [13, 5, 3, 2, 1, 0]
    assert list(euclid_chain(1, 1)) == [1, 1, 0]
    # repeated-mod oracle, starting [b, a, ...]
    assert list(euclid_chain(8, 3)) == [3, 8, 3, 2, 1, 0]


def test_euclid_chain_invariants_small_sweep():
    for a in range(1, 301):
        for b in range(1, 301):
            ch = euclid_chain(a, b)
            es = ch.entries
            assert all(es[i + 2] == es[i] % es[i + 1] for i in range(len(es) - 2))
            assert all(es[i] > es[i + 1] for i in range(2, len(es) - 1))
            assert len(ch) <= 2 * math.log2(a) + 4
            if math.gcd(a, b) == 1:
                assert es[-2] == 1


@given(st.integers(1, 10**4), st.integers(1, 10**4))
def test_euclid_chain_length_bound(a, b):
    assert len(euclid_chain(a, b)) <= 2 * math.log2(a) + 4


def test_slope_pair_validation():
    with pytest.raises(DomainError):
        SlopePair(0, 3)
    with pytest.raises(DomainError):
        SlopePair.coprime(2, 4)
    assert SlopePair.coprime(2, 5).is_coprime
    assert not SlopePair(2, 4).is_coprime


def test_apply_map_examples():
    # the shear that lifts slope 3/5 corners to slope 13/5 corners
    shear = AffineLatticeMap.shear(2)
    assert apply_map(shear, (5, 3)) == (5, 13)
    ident = AffineLatticeMap.identity()
    assert apply_map(ident, (-7, 9)) == (-7, 9)
    diag = AffineLatticeMap.diagonal_reflection()
    assert apply_map(diag, apply_map(diag, (2, 9))) == (2, 9)


def test_map_determinant_enforced():
    with pytest.raises(DomainError):
        AffineLatticeMap(((2, 0), (0, 1)))


_maps = st.builds(
    AffineLatticeMap,
    st.sampled_from([((1, 0), (0, 1)), ((0, 1), (1, 0)), ((-1, 0), (0, -1)),
                     ((1, 0), (3, 1)), ((1, -2), (0, 1)), ((0, -1), (-1, 0))]),
    st.tuples(st.integers(-20, 20), st.integers(-20, 20)),
)
_points = st.tuples(st.integers(-50, 50), st.integers(-50, 50))


@given(_maps, _maps, _points)
def test_compose_is_application_order(m1, m2, p):
    assert m1.compose(m2).apply(p) == m1.apply(m2.apply(p))


@given(_maps, _points)
def test_inverse_roundtrip(m, p):
    assert m.inverse().apply(m.apply(p)) == p
    assert m.apply(m.inverse().apply(p)) == p
