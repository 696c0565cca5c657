from fractions import Fraction
from math import gcd

import pytest

from lattice_stairs.errors import DomainError
from lattice_stairs.numeric import SlopePair
from lattice_stairs.sequences import beatty
from lattice_stairs.staircase import (LineSpec, PointWindow, column_counts,
                                      in_halfplane, line_lattice_point,
                                      pipe_membership, pipe_window, reflect,
                                      render, staircase_by_recursion,
                                      staircase_window, translate_equivalent)


def test_in_halfplane_examples():
    ls = LineSpec(SlopePair(5, 2))
    assert in_halfplane(ls, (0, 0))
    assert not in_halfplane(ls, (1, 1))  # 2/5 - 1 < 0
    assert in_halfplane(LineSpec(SlopePair(5, 2), 0, -1), (1, 1))


def test_pipe_membership_examples():
    ls = LineSpec(SlopePair(5, 2))
    assert pipe_membership(ls, (2, 0)) == (True, False)  # 4/5 < 1 but 4/5 >= 2/5
    assert pipe_membership(ls, (0, 0)) == (True, True)
    # (1, 0) under slope 8/3: the line value is 8/3, which fails both
    # 8/3 < 1 and 8/3 < 8/3; column 1 of that staircase is {(1,1), (1,2)}
    steep = LineSpec(SlopePair(3, 8))
    assert pipe_membership(steep, (1, 0)) == (False, False)
    assert pipe_membership(steep, (1, 1)) == (False, True)
    assert pipe_membership(steep, (1, 2)) == (True, True)


def test_staircase_window_flat():
    w = staircase_window(LineSpec(SlopePair(5, 2)), 0, 4, "staircase")
    assert w.points == frozenset((n, (2 * n) // 5) for n in range(5))


def test_corner_window_steep():
    w = staircase_window(LineSpec(SlopePair(3, 8)), 0, 2, "corners")
    assert w.points == frozenset({(0, 0), (1, 2), (2, 5)})


def test_on_line_points_are_members():
    ls = LineSpec(SlopePair(5, 2))
    w = staircase_window(ls, 5, 5, "staircase")
    assert (5, 2) in w.points


def test_column_counts_match_step_sequence():
    assert column_counts(LineSpec(SlopePair(3, 8)), 1, 3, "staircase") == [2, 3, 3]
    assert column_counts(LineSpec(SlopePair(5, 2)), 0, 4, "staircase") == [1, 1, 1, 1, 1]
    # corner counts of a flat staircase are its 0,1 step values
    assert column_counts(LineSpec(SlopePair(5, 2)), 1, 5, "corners") == [0, 0, 1, 0, 1]
    for a, b in ((3, 8), (5, 2), (7, 4), (4, 7)):
        if gcd(a, b) != 1:
            continue
        which = "staircase" if a <= b else "corners"
        got = column_counts(LineSpec(SlopePair(a, b)), -a, 2 * a, which)
        want = [beatty(SlopePair(a, b), n) for n in range(-a, 2 * a + 1)]
        assert got == want


def test_reflect_diagonal():
    # mirroring swaps the slope parameters and the side of the line;
    # compare on interior columns fully covered by the source window
    w = staircase_window(LineSpec(SlopePair(3, 8)), -6, 6, "staircase")
    mirrored = reflect(w, "diagonal")
    target = staircase_window(LineSpec(SlopePair(8, 3), 0, -1), -10, 10, "staircase")
    inner = {p for p in mirrored.points if -10 <= p[0] <= 10}
    assert inner == set(target.points)


def test_reflect_origin():
    w = staircase_window(LineSpec(SlopePair(3, 8)), -6, 6, "staircase")
    got = reflect(w, "origin")
    target = staircase_window(LineSpec(SlopePair(3, 8), 0, -1), -6, 6, "staircase")
    assert got.points == target.points
    assert reflect(got, "origin").points == w.points


def test_staircase_by_recursion_examples():
    s, c = staircase_by_recursion(SlopePair(5, 13), 0, 5)
    ls = LineSpec(SlopePair(5, 13))
    assert s.points == staircase_window(ls, 0, 5, "staircase").points
    assert c.points == staircase_window(ls, 0, 5, "corners").points

    s, c = staircase_by_recursion(SlopePair(4, 1), 0, 3)
    assert s.points == frozenset({(0, 0), (1, 0), (2, 0), (3, 0)})
    assert c.points == frozenset({(0, 0)})

    s, c = staircase_by_recursion(SlopePair(2, 3), -4, 6)
    ls = LineSpec(SlopePair(2, 3))
    assert s.points == staircase_window(ls, -4, 6, "staircase").points
    assert c.points == staircase_window(ls, -4, 6, "corners").points


def test_recursion_oracle_sweep_small():
    for a in range(1, 20):
        for b in range(1, 20):
            if gcd(a, b) != 1:
                continue
            ls = LineSpec(SlopePair(a, b))
            s, c = staircase_by_recursion(SlopePair(a, b), -a, 2 * a)
            assert s.points == staircase_window(ls, -a, 2 * a, "staircase").points
            assert c.points == staircase_window(ls, -a, 2 * a, "corners").points


def test_line_lattice_point():
    assert line_lattice_point(LineSpec(SlopePair(5, 2))) == (0, 0)
    p = line_lattice_point(LineSpec(SlopePair(5, 2), Fraction(1, 5)))
    assert p is not None
    x, y = p
    assert 2 * x - 5 * y == -1
    assert line_lattice_point(LineSpec(SlopePair(5, 2), Fraction(1, 7))) is None


def test_pipe_inclusions_flat_vs_steep():
    vp, hp = pipe_window(LineSpec(SlopePair(5, 2)), -5, 5)
    assert hp.points <= vp.points
    vp, hp = pipe_window(LineSpec(SlopePair(2, 5)), -5, 5)
    assert vp.points <= hp.points


def test_translate_equivalent():
    a = PointWindow(frozenset({(0, 0), (1, 1)}), (0, 1))
    b = PointWindow(frozenset({(5, 3), (6, 4)}), (5, 6))
    assert translate_equivalent(a, b, min_overlap_cols=2)
    c = PointWindow(frozenset({(5, 3), (6, 5)}), (5, 6))
    assert not translate_equivalent(a, c, min_overlap_cols=2)
    # a one-column overlap is always satisfiable here
    assert translate_equivalent(a, c, min_overlap_cols=1)


def test_window_validation_and_rendering():
    with pytest.raises(DomainError):
        staircase_window(LineSpec(SlopePair(2, 1)), 3, 1)
    ls = LineSpec(SlopePair(5, 2))
    s = staircase_window(ls, 0, 4, "staircase")
    c = staircase_window(ls, 0, 4, "corners")
    text = render(s, c, "S_{5,2} window [0,4]")
    lines = text.split("\n")
    assert lines[0] == "S_{5,2} window [0,4]"
    assert lines[1] == "...O#"
    assert lines[2] == "O##.."
    assert s.y_range == (0, 1)
