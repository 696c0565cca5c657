import numpy as np
import pytest

from lattice_stairs.errors import DomainError, ExpansionDirectionError
from lattice_stairs.genfun import (GFTerm, LaurentWindow, RationalGF, gf_add,
                                   gf_expand, gf_expand_grid, gf_from_json,
                                   gf_interval, gf_mul, gf_scale,
                                   gf_substitute, gf_to_json, gf_to_text,
                                   generic_direction)


def expand_dict(f, window, d=(7, 3)):
    return dict(gf_expand(f, window, d).coeffs)


def test_gf_interval_examples():
    f = gf_interval((1, 0), 2)
    assert expand_dict(f, (0, 3, 0, 0)) == {(0, 0): 1, (1, 0): 1, (2, 0): 1}
    f = gf_interval((0, -1), 1)
    assert expand_dict(f, (0, 0, -2, 1)) == {(0, 0): 1, (0, -1): 1}
    f = gf_interval((2, 3), 3)
    assert expand_dict(f, (0, 8, 0, 12)) == {(0, 0): 1, (2, 3): 1, (4, 6): 1, (6, 9): 1}
    with pytest.raises(DomainError):
        gf_interval((0, 0), 2)


def test_gf_add_mul_scale():
    f = gf_interval((1, 0), 1)
    zero = RationalGF.zero()
    assert gf_add(f, zero).terms == f.terms
    square = gf_mul(gf_interval((1, 0), 1), gf_interval((0, 1), 1))
    assert expand_dict(square, (0, 2, 0, 2)) == \
        {(0, 0): 1, (1, 0): 1, (0, 1): 1, (1, 1): 1}
    shifted = gf_scale(square, 1, (3, 4))
    assert expand_dict(shifted, (3, 5, 4, 6)) == \
        {(3, 4): 1, (4, 4): 1, (3, 5): 1, (4, 5): 1}


def test_gf_substitute():
    f = gf_interval((1, 0), 2)
    assert gf_substitute(f, ((1, 0), (0, 1))).terms == f.terms
    # antidiagonal point reflection on exponents
    g = gf_substitute(f, ((0, -1), (-1, 0)))
    assert expand_dict(g, (-1, 0, -3, 0)) == {(0, 0): 1, (0, -1): 1, (0, -2): 1}
    shear = gf_substitute(f, ((1, 0), (2, 1)))
    assert expand_dict(shear, (0, 3, 0, 6)) == {(0, 0): 1, (1, 2): 1, (2, 4): 1}
    with pytest.raises(DomainError):
        gf_substitute(f, ((1, 1), (1, 1)))


def test_expand_geometric_series():
    f = RationalGF((GFTerm(1, (0, 0), (), ((1, 0),)),))
    assert expand_dict(f, (0, 3, 0, 0), (1, 0)) == {(n, 0): 1 for n in range(4)}


def test_expand_two_denominators_is_cone():
    f = RationalGF((GFTerm(1, (0, 0), (), ((1, 0), (1, 1))),))
    got = expand_dict(f, (0, 4, 0, 4), (3, 1))
    want = {(x, y): 1 for x in range(5) for y in range(5) if y <= x}
    assert got == want


def test_expand_direction_errors():
    f = RationalGF((GFTerm(1, (0, 0), (), ((1, -1),)),))
    with pytest.raises(ExpansionDirectionError):
        gf_expand(f, (0, 2, -2, 2), (1, 1))
    d = generic_direction(f, seed=(1, 1))
    assert d[0] * 1 + d[1] * (-1) != 0
    with pytest.raises(ExpansionDirectionError):
        gf_expand(f, (0, 2, 0, 2), (0, 0))


def test_expand_negative_direction_side():
    # 1/(1-x^{-e1}) expanded along -e1 is the plain series on that side;
    # expanded along +e1 it is -x/(1-x) = -x - x^2 - ...
    f = RationalGF((GFTerm(1, (0, 0), (), ((-1, 0),)),))
    got = expand_dict(f, (-3, 3, 0, 0), (-1, 0))
    assert got == {(0, 0): 1, (-1, 0): 1, (-2, 0): 1, (-3, 0): 1}
    got = expand_dict(f, (-3, 3, 0, 0), (1, 0))
    assert got == {(1, 0): -1, (2, 0): -1, (3, 0): -1}


def test_ring_laws_on_expansions():
    f = gf_mul(gf_interval((1, 0), 2), gf_interval((0, 1), 1))
    g = gf_interval((1, 1), 3)
    win = (0, 8, 0, 8)
    fe = gf_expand_grid(f, win, (5, 3))
    ge = gf_expand_grid(g, win, (5, 3))
    se = gf_expand_grid(gf_add(f, g), win, (5, 3))
    assert np.array_equal(se, fe + ge)
    # product expands to the convolution; pad the window so truncation
    # cannot clip contributing exponents
    pe = gf_expand_grid(gf_mul(f, g), (0, 6, 0, 6), (5, 3))
    conv = np.zeros((7, 7), dtype=np.int64)
    for x in range(7):
        for y in range(7):
            for i in range(x + 1):
                for j in range(y + 1):
                    conv[x, y] += fe[i, j] * ge[x - i, y - j]
    assert np.array_equal(pe, conv)


def test_substitution_functoriality():
    f = gf_mul(gf_interval((1, 0), 3), gf_interval((0, 1), 2))
    m = ((1, 0), (1, 1))  # unimodular shear
    fe = expand_dict(f, (0, 3, 0, 2))
    pushed = {(x, x + y): c for (x, y), c in fe.items()}
    ge = expand_dict(gf_substitute(f, m), (0, 3, 0, 6))
    assert ge == pushed


_vecs = st.tuples(st.integers(-3, 3), st.integers(-3, 3)).filter(lambda v: v != (0, 0))
_unimodular = st.sampled_from([
    ((1, 0), (0, 1)), ((0, 1), (1, 0)), ((1, 0), (2, 1)), ((1, -1), (0, 1)),
    ((0, -1), (-1, 0)), ((-1, 0), (0, -1)), ((1, 2), (0, 1)),
])


@st.composite
def _interval_products(draw):
    f = gf_interval(draw(_vecs), draw(st.integers(0, 3)))
    for _ in range(draw(st.integers(0, 2))):
        f = gf_mul(f, gf_interval(draw(_vecs), draw(st.integers(0, 3))))
    return gf_scale(f, draw(st.integers(-2, 2).filter(bool)),
                    (draw(st.integers(-3, 3)), draw(st.integers(-3, 3))))


@given(_interval_products(), _unimodular)
def test_substitution_pushforward_random(f, m):
    fe = expand_dict(f, (-40, 40, -40, 40), generic_direction(f, seed=(9, 5)))
    g = gf_substitute(f, m)
    ge = expand_dict(g, (-40, 40, -40, 40), generic_direction(g, seed=(9, 5)))
    pushed = {(m[0][0] * x + m[0][1] * y, m[1][0] * x + m[1][1] * y): c
              for (x, y), c in fe.items()}
    assert ge == pushed


def test_serialization_roundtrip():
    f = gf_add(gf_scale(gf_interval((2, -1), 3), -2, (1, 7)),
               RationalGF((GFTerm(5, (0, -2), ((1, 1),), ((3, 1),), ((1, 2),)),)))
    assert gf_from_json(gf_to_json(f)) == f
    text = gf_to_text(f)
    assert "x^(1,7)" in text and "(1 + x^(1,2))" in text
    assert gf_to_text(RationalGF.zero()) == "0"


def test_plus_factors_expand_positively():
    f = RationalGF((GFTerm(1, (0, 0), (), (), ((1, 0), (2, 0))),))
    assert expand_dict(f, (0, 3, 0, 0)) == \
        {(0, 0): 1, (1, 0): 1, (2, 0): 1, (3, 0): 1}


def test_zero_numerator_annihilates():
    f = RationalGF((GFTerm(3, (0, 0), ((0, 0),), ((1, 0),)),))
    assert expand_dict(f, (0, 3, 0, 0), (1, 0)) == {}


def test_laurent_window_equality_on_intersection():
    a = LaurentWindow({(0, 0): 1, (5, 5): 1}, (0, 5, 0, 5))
    b = LaurentWindow({(0, 0): 1, (-1, 0): 7}, (-1, 3, 0, 3))
    assert a == b  # they agree on [0,3]x[0,3]
    c = LaurentWindow({(1, 1): 1}, (0, 3, 0, 3))
    assert a != c


def test_bigint_path_matches_int64():
    # stack enough parallel denominators that the bound check trips
    term = GFTerm(1, (0, 0), (), tuple([(1, 0)] * 11 + [(0, 1)] * 10))
    f = RationalGF((term,))
    win = (0, 40, 0, 40)
    got = gf_expand_grid(f, win, (3, 2))
    # binomial-coefficient oracle: coeff at (x, y) = C(x+10, 10) * C(y+9, 9)
    from math import comb
    want = np.array([[comb(x + 10, 10) * comb(y + 9, 9) for y in range(41)]
                     for x in range(41)], dtype=object)
    assert (got == want).all()
