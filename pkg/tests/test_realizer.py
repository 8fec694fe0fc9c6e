"""Construction families and the realize dispatch, verified by recomputation."""

import pytest

from ehrhart.classifier import Verdict, enumerate_candidates
from ehrhart.engine import delta_from_box
from ehrhart.errors import NotRealizableError, OutOfScopeError, ParameterError
from ehrhart.intlinalg import determinant
from ehrhart.realizer import (
    construct_lemma_first,
    construct_lemma_second,
    construct_section2,
    construct_section3_two,
    construct_segment,
    construct_triangle_111,
    realize,
)


@pytest.mark.parametrize(
    "d,expected_pos", [(3, 2), (5, 3), (7, 4)]
)
def test_section2_family(d, expected_pos):
    s = construct_section2(d)
    entries = delta_from_box(s).entries
    expected = tuple(1 if i in (0, expected_pos) else 0 for i in range(d + 1))
    assert entries == expected
    assert abs(determinant(s.lifted_matrix())) == 2


def test_section2_rejects_even_dimension():
    with pytest.raises(ParameterError):
        construct_section2(4)


@pytest.mark.parametrize("d", [3, 5])
def test_section3_two_family(d):
    s = construct_section3_two(d)
    entries = delta_from_box(s).entries
    expected = tuple(2 if i == (d + 1) // 2 else (1 if i == 0 else 0) for i in range(d + 1))
    assert entries == expected
    assert abs(determinant(s.lifted_matrix())) == 3


def test_section3_two_rejects_d1():
    with pytest.raises(ParameterError):
        construct_section3_two(1)


def test_segments():
    assert delta_from_box(construct_segment(2)).entries == (1, 1)
    assert delta_from_box(construct_segment(3)).entries == (1, 2)
    with pytest.raises(ParameterError):
        construct_segment(4)


def test_segment_lifted_three_times():
    s = construct_segment(2)
    for _ in range(3):
        s = s.pyramid()
    assert delta_from_box(s).entries == (1, 1, 0, 0, 0)


def test_triangle_111():
    s = construct_triangle_111()
    assert delta_from_box(s).entries == (1, 1, 1)
    assert abs(determinant(s.lifted_matrix())) == 3
    lifted = s.pyramid().pyramid().pyramid()
    assert delta_from_box(lifted).entries == (1, 1, 1, 0, 0, 0)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_lemma_first_family(k):
    s = construct_lemma_first(k)
    d = 3 * k + 2
    entries = delta_from_box(s).entries
    expected = tuple(1 if i in (0, k + 1, 2 * k + 2) else 0 for i in range(d + 1))
    assert entries == expected
    assert abs(determinant(s.lifted_matrix())) == 3


def test_lemma_first_rejects_k0():
    with pytest.raises(ParameterError):
        construct_lemma_first(0)


@pytest.mark.parametrize("k,ell", [(0, 1), (0, 2), (1, 1), (1, 2), (2, 1)])
def test_lemma_second_family(k, ell):
    s = construct_lemma_second(k, ell)
    d = 3 * k + 2 + 2 * ell
    entries = delta_from_box(s).entries
    expected = tuple(
        1 if i in (0, k + ell + 1, 2 * k + ell + 2) else 0 for i in range(d + 1)
    )
    assert entries == expected
    assert abs(determinant(s.lifted_matrix())) == 3


def test_lemma_second_rejects_ell0():
    with pytest.raises(ParameterError):
        construct_lemma_second(1, 0)


def test_realize_section2_lifted():
    s, plan = realize((1, 0, 1, 0, 0, 0))
    assert plan.family == "section2" and plan.lifts == 2
    assert s.dim == 5


def test_realize_two_ones_candidate():
    s, plan = realize((1, 0, 0, 1, 0, 1, 0, 0, 0, 0))
    assert plan.family == "lemma_second"
    assert plan.parameters == {"k": 1, "ell": 1}
    assert s.dim == 9


def test_realize_segment_volume3():
    s, plan = realize((1, 2, 0, 0))
    assert plan.family == "segment"
    assert delta_from_box(s).entries == (1, 2, 0, 0)


def test_realize_rejects_no_candidate():
    with pytest.raises(NotRealizableError):
        realize((1, 1, 0, 0, 1))


def test_realize_rejects_out_of_scope():
    with pytest.raises(OutOfScopeError):
        realize((1, 1, 1, 1))


@pytest.mark.parametrize("d", range(3, 9))
def test_realize_round_trip_all_yes_candidates(d):
    for cand, dec in enumerate_candidates(d, 3):
        if dec.verdict is not Verdict.YES:
            continue
        s, plan = realize(cand)
        assert s.dim == d and s.ambient_dim == d
        assert delta_from_box(s).entries == cand
        assert abs(determinant(s.lifted_matrix())) == sum(cand)
        # Coordinates stay in {0,1,2} for every family except the volume-3
        # segment base, which is conv{0,3} on the line.
        allowed = (0, 1, 2, 3) if plan.family == "segment" else (0, 1, 2)
        assert all(c in allowed for v in s.vertices for c in v)
