import time
from math import gcd

import pytest

from lattice_stairs.carlitz import (CarlitzPolynomial, ParallelepipedSpec,
                                    carlitz_naive, carlitz_short,
                                    parallelepiped_by_recursion,
                                    parallelepiped_gf,
                                    parallelepiped_points_brute)
from lattice_stairs.errors import DomainError
from lattice_stairs.genfun import gf_expand, generic_direction
from lattice_stairs.numeric import SlopePair, euclid_chain


def short_coeffs(sp, **kw):
    f = carlitz_short(sp, **kw).gf
    win = (-1, max(sp.a, 1), -1, sp.b + 1)
    d = generic_direction(f, seed=(2 * max(sp.a, sp.b) + 1, 1))
    return dict(gf_expand(f, win, d).coeffs)


def test_parallelepiped_brute_base_cases():
    # slope 1/a: the down-axis interior is the open row, the right-axis empty
    for a in (2, 3, 7):
        down = parallelepiped_points_brute(ParallelepipedSpec(SlopePair(a, 1), "down", True))
        assert set(down.points) == {(k, 0) for k in range(1, a)}
        right = parallelepiped_points_brute(ParallelepipedSpec(SlopePair(a, 1), "right", True))
        assert set(right.points) == set()


def test_parallelepiped_brute_examples():
    down = parallelepiped_points_brute(ParallelepipedSpec(SlopePair(5, 3), "down", True))
    assert set(down.points) == {(1, 0), (2, 1), (3, 1), (4, 2)}
    right = parallelepiped_points_brute(ParallelepipedSpec(SlopePair(5, 3), "right", True))
    assert set(right.points) == {(2, 1), (4, 2)}
    closed = parallelepiped_points_brute(ParallelepipedSpec(SlopePair(5, 3), "down", False))
    assert set(closed.points) == {(0, 0), (1, 0), (2, 1), (3, 1), (4, 2)}
    # closed = open interior plus the origin, one point per column
    assert len({x for (x, y) in closed.points}) == 5


def test_parallelepiped_recursion_examples():
    for a, b in ((5, 13), (3, 8), (8, 3), (5, 3), (1, 9), (9, 1)):
        for axis in ("down", "right"):
            ps = ParallelepipedSpec(SlopePair(a, b), axis, True)
            assert parallelepiped_by_recursion(ps).points == \
                parallelepiped_points_brute(ps).points, (a, b, axis)


def test_parallelepiped_recursion_sweep():
    for a in range(1, 25):
        for b in range(1, 25):
            if gcd(a, b) != 1:
                continue
            for axis in ("down", "right"):
                ps = ParallelepipedSpec(SlopePair(a, b), axis, True)
                assert parallelepiped_by_recursion(ps).points == \
                    parallelepiped_points_brute(ps).points


def test_carlitz_naive_examples():
    assert carlitz_naive(SlopePair(3, 2)).coefficient_map() == {(0, 0): 1, (1, 1): 1}
    for a in (2, 3, 6):
        assert carlitz_naive(SlopePair(a, 1)).coefficient_map() == \
            {(k, 0): 1 for k in range(a - 1)}
    assert carlitz_naive(SlopePair(1, 9)).coefficient_map() == {}


def test_carlitz_short_examples():
    assert short_coeffs(SlopePair(3, 2)) == {(0, 0): 1, (1, 1): 1}
    assert short_coeffs(SlopePair(7, 1)) == {(k, 0): 1 for k in range(6)}
    assert short_coeffs(SlopePair(1, 8)) == {}
    assert short_coeffs(SlopePair(5, 13)) == carlitz_naive(SlopePair(5, 13)).coefficient_map()


def test_carlitz_short_oracle_sweep():
    for a in range(1, 30):
        for b in range(1, 30):
            if gcd(a, b) != 1:
                continue
            assert short_coeffs(SlopePair(a, b)) == \
                carlitz_naive(SlopePair(a, b)).coefficient_map(), (a, b)


def test_translate_identity():
    for a, b in ((5, 3), (5, 13), (12, 7), (7, 12)):
        naive = set(carlitz_naive(SlopePair(a, b)).coefficient_map())
        ppd = parallelepiped_points_brute(
            ParallelepipedSpec(SlopePair(a, b), "down", True)).points
        assert naive == {(x - 1, y) for (x, y) in ppd}


def test_term_count_and_speed():
    for a, b in ((144, 233), (233, 144), (89, 144), (250, 249)):
        if gcd(a, b) != 1:
            continue
        n = carlitz_short(SlopePair(a, b)).gf.term_count
        assert n <= 16 * len(euclid_chain(a, b)) + 8, (a, b, n)
    big = 10 ** 12
    t0 = time.perf_counter()
    poly = carlitz_short(SlopePair(big + 39, 7 * big + 61))
    assert (time.perf_counter() - t0) < 0.1
    assert poly.gf.term_count <= 16 * len(euclid_chain(big + 39, 7 * big + 61)) + 8


def test_product_free_variant():
    for a, b in ((5, 13), (13, 5), (12, 35), (1, 4), (9, 1)):
        sp = SlopePair(a, b)
        pf = carlitz_short(sp, product_free=True)
        assert all(not t.denom and not t.numer for t in pf.gf.terms)
        assert all(t.coeff > 0 for t in pf.gf.terms)
        assert short_coeffs(sp, product_free=True) == \
            carlitz_naive(sp).coefficient_map(), (a, b)


def test_parallelepiped_gf_right_axis():
    sp = SlopePair(5, 3)
    f = parallelepiped_gf(ParallelepipedSpec(sp, "right", True))
    got = dict(gf_expand(f, (-1, 6, -4, 4), generic_direction(f, seed=(11, 1))).coeffs)
    assert got == {(2, 1): 1, (4, 2): 1}


def test_domain_errors():
    with pytest.raises(DomainError):
        ParallelepipedSpec(SlopePair(2, 4))
    with pytest.raises(DomainError):
        parallelepiped_by_recursion(ParallelepipedSpec(SlopePair(2, 3), "down", False))
    with pytest.raises(DomainError):
        CarlitzPolynomial(SlopePair(2, 3), gf=carlitz_short(SlopePair(2, 3)).gf).coefficient_map()
