"""Smoke tests for the python bindings: the worked A2 example end to end."""

from fractions import Fraction

import pytest

import stringcubes as sc


def test_cartan_matrices():
    assert sc.cartan_matrix("A", 2) == [[2, -1], [-1, 2]]
    assert sc.cartan_matrix("G", 2) == [[2, -1], [-3, 2]]
    with pytest.raises(ValueError):
        sc.cartan_matrix("D", 2)


def test_reduced_words_and_dimensions():
    assert sc.is_reduced("A", 2, [1, 2, 1])
    assert not sc.is_reduced("A", 2, [1, 1])
    assert sc.is_reduced_for_longest("A", 2, [1, 2, 1])
    assert sc.num_positive_roots("B", 3) == 9
    assert sc.weyl_dim("A", 2, [1, 1]) == 8
    assert sc.weyl_dim("A", 2, [2, 2]) == 27
    assert sc.weyl_dim("G", 2, [1, 0]) == 14


def test_condition_p_certificate():
    cert = sc.check_p("A", 2, [1, 2, 1], [0, 1, 1])
    assert cert["pass"] is False
    assert cert["witness"]["k"] == 1
    assert cert["witness"]["x"] == [0, 1]
    assert cert["witness"]["value"] == -1
    assert sc.check_p("A", 2, [1, 2, 1], [1, 1, 1])["pass"] is True
    assert sc.direct_p_oracle("A", 2, [1, 2, 1], [0, 1, 1]) is False


def test_twisted_cube_vertices_and_fractions():
    verts = sc.twisted_cube_vertex_fractions("A", 2, [1, 2, 1], [0, 1, 1])
    assert (Fraction(0), Fraction(0), Fraction(1, 2)) in verts
    assert len(verts) == 8


def test_cartier_table():
    table = sc.cartier("A", 2, [1, 2, 1], [0, 1, 1])
    assert table["-+-"] == [-1, 0, 1]
    assert table["---"] == [1, 2, 1]
    assert table["+++"] == [0, 0, 0]


def test_string_polytope_counts_and_membership():
    assert len(sc.delta_lattice_points("A", 2, [1, 2, 1], [0, 1, 1], dilate=1)) == 8
    assert len(sc.delta_lattice_points("A", 2, [1, 2, 1], [0, 1, 1], dilate=2)) == 27
    outside = sc.in_delta("A", 2, [1, 2, 1], [0, 1, 1], [0, 0, Fraction(1, 2)])
    assert outside["inside"] is False
    inside = sc.in_delta("A", 2, [1, 2, 1], [0, 1, 1], [0, 1, 1])
    assert inside["inside"] is True


def test_resolution_pipeline():
    assert sc.m_of_lambda("A", 2, [1, 2, 1], [1, 1]) == [0, 1, 1]
    assert sc.construct_m("A", 2, [1, 2, 1], [1, 1]) == [2, 1, 1]
    report = sc.verify_resolution("A", 2, [1, 2, 1], [1, 1], [2, 1, 1])
    assert report["all_pass"] is True
    assert all(check["pass"] for check in report["checks"].values())
    middle = sc.verify_resolution("A", 2, [1, 2, 1], [1, 1], [1, 1, 1])
    assert middle["checks"]["conditionP"]["pass"] is True
    assert middle["checks"]["simple"]["pass"] is False


def test_delta_equals_p_requires_condition_p():
    assert sc.delta_equals_p("A", 2, [1, 2, 1], [2, 1, 1])["equal"] is True
    with pytest.raises(ValueError):
        sc.delta_equals_p("A", 2, [1, 2, 1], [0, 1, 1])


def test_generic_polytope_operations():
    square = [([1, 0], "1"), ([-1, 0], "0"), ([0, 1], "1"), ([0, -1], "0")]
    assert sc.polytope_vertices(2, square) == [
        ["0", "0"], ["0", "1"], ["1", "0"], ["1", "1"]]
    assert sc.polytope_is_lattice(2, square)
    assert sc.polytope_is_simple(2, square)
    assert sc.polytope_is_smooth(2, square)
    assert len(sc.polytope_lattice_points(2, square)) == 4
    assert sc.as_fraction(sc.polytope_volume(2, square)) == 1

    cube = [([1, 0, 0], "1"), ([-1, 0, 0], "0"), ([0, 1, 0], "1"),
            ([0, -1, 0], "0"), ([0, 0, 1], "1"), ([0, 0, -1], "0")]
    off = sc.export_off("A", 2, [1, 2, 1], [2, 1, 1])
    assert off.startswith("OFF\n")
    assert sc.polytope_volume(3, cube) == "1"


def test_containment():
    report = sc.containment_check("A", 2, [1, 2, 1], [0, 1, 1], [2, 1, 1])
    assert report["pass"] is True
    reverse = sc.containment_check("A", 2, [1, 2, 1], [2, 1, 1], [0, 1, 1], max_dilate=2)
    assert reverse["pass"] is False
