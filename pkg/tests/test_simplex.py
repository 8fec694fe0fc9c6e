"""Simplex validation, membership, pyramid lifting, and file round trips."""

import json

import pytest

from ehrhart.engine import delta_from_box
from ehrhart.errors import DegenerateSimplexError, DimensionError
from ehrhart.intlinalg import determinant
from ehrhart.realizer import construct_lemma_second, construct_section2
from ehrhart.simplex import dump_simplex, load_simplex, new_simplex, unit_simplex


def section2_d3():
    return new_simplex([[0, 0, 0], [1, 1, 0], [0, 1, 1], [1, 0, 1]])


def test_new_simplex_unit_triangle():
    s = new_simplex([[0, 0], [1, 0], [0, 1]])
    assert s.dim == 2 and s.ambient_dim == 2


def test_new_simplex_collinear_reports_index():
    with pytest.raises(DegenerateSimplexError) as exc:
        new_simplex([[0, 0], [1, 1], [2, 2]])
    assert exc.value.index == 2


def test_new_simplex_section2_vertices():
    assert section2_d3().dim == 3


def test_contains_vertex_closed_but_not_strict():
    s = new_simplex([[0, 0], [1, 0], [0, 1]])
    assert s.contains((0, 0), 1, strict=False)
    assert not s.contains((0, 0), 1, strict=True)


def test_contains_interior_point_of_double_dilate():
    # (1,1,1) is the degree-2 parallelepiped point, hence interior to 2P.
    assert section2_d3().contains((1, 1, 1), 2, strict=True)


def test_contains_dimension_mismatch():
    with pytest.raises(DimensionError):
        section2_d3().contains((0, 0), 1)


def test_contains_every_vertex():
    for s in (unit_simplex(3), section2_d3()):
        for v in s.vertices:
            assert s.contains(v, 1, strict=False)
            assert not s.contains(v, 1, strict=True)


def test_pyramid_over_unit_segment():
    p = new_simplex([[0], [1]]).pyramid()
    assert delta_from_box(p).entries == (1, 0, 0)


def test_pyramid_over_volume2_segment():
    p = new_simplex([[0], [2]]).pyramid()
    assert delta_from_box(p).entries == (1, 1, 0)


def test_pyramid_over_triangle_111():
    p = new_simplex([[0, 0], [2, 1], [1, 2]]).pyramid()
    assert delta_from_box(p).entries == (1, 1, 1, 0)


def test_pyramid_preserves_normalized_volume():
    s = section2_d3()
    assert abs(determinant(s.pyramid().lifted_matrix())) == abs(determinant(s.lifted_matrix()))


def test_lifted_matrix_unit_triangle():
    m = unit_simplex(2).lifted_matrix()
    assert m.to_lists() == [[0, 0, 1], [1, 0, 1], [0, 1, 1]]
    assert abs(determinant(m)) == 1


def test_lifted_matrix_section2_d3():
    assert abs(determinant(section2_d3().lifted_matrix())) == 2


def test_lifted_matrix_lemma_second_first_step():
    assert abs(determinant(construct_lemma_second(0, 1).lifted_matrix())) == 3


def test_lifted_matrix_rejects_non_full_dimensional():
    s = new_simplex([[0, 0], [1, 0]])
    with pytest.raises(DimensionError):
        s.lifted_matrix()


def test_polytope_file_round_trip(tmp_path):
    s = construct_section2(5)
    path = tmp_path / "p.json"
    dump_simplex(s, str(path), plan="section2(d=5)")
    loaded = load_simplex(str(path))
    assert loaded == s
    assert json.loads(path.read_text())["plan"] == "section2(d=5)"


def test_polytope_file_round_trips_big_integers(tmp_path):
    big = 2**80 + 7
    s = new_simplex([[0], [big]])
    path = tmp_path / "big.json"
    dump_simplex(s, str(path))
    assert load_simplex(str(path)).vertices[1][0] == big
    assert "e" not in path.read_text().split('"vertices"')[1]


def test_load_rejects_malformed(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"ambient_dim": 2, "vertices": [[1, 0], [1]]}')
    with pytest.raises(DimensionError):
        load_simplex(str(path))


def test_load_rejects_collinear(tmp_path):
    path = tmp_path / "collinear.json"
    path.write_text('{"ambient_dim": 2, "vertices": [[0, 0], [1, 1], [2, 2]]}')
    with pytest.raises(DegenerateSimplexError):
        load_simplex(str(path))
