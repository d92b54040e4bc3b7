"""Smoke tests for the python bindings; the exhaustive suites live in C++."""

import pytest

import conormal


def group_strs(poset):
    return [str(g) for g in conormal.homology(poset)]


def test_closed_manifold():
    closed = conormal.closed_manifold()
    assert closed.n == 0 and closed.d == 0
    assert group_strs(closed) == ["Z"]
    report = conormal.ktheory(closed)
    assert report.k0_rank == 1 and report.k1_rank == 0
    assert report.verdict == "NO_BOUNDARY"


def test_boundary_components():
    for p in (1, 2, 5):
        poset = conormal.boundary_components(p)
        groups = conormal.homology(poset)
        assert groups[0].free_rank == 0
        assert groups[1].free_rank == p - 1
        report = conormal.ktheory(poset)
        assert report.k1_rank == p - 1
        assert report.verdict == "RATIONALLY_UNOBSTRUCTED"


def test_square_is_obstructed():
    square = conormal.hypercube(2)
    assert group_strs(square) == ["0", "0", "Z"]
    assert conormal.betti_numbers(square) == [0, 0, 1]
    report = conormal.ktheory(square)
    assert report.k0_rank == 1
    assert report.verdict == "OBSTRUCTED"
    assert report.codim_le_3 and report.even_torsion_free
    assert report.product_rule is True


def test_parse_serialize_round_trip():
    simplex = conormal.simplex(2)
    text = conormal.serialize(simplex)
    again = conormal.parse(text)
    assert conormal.serialize(again) == text
    assert conormal.validate(again) == []


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        conormal.parse("not a poset file\n")


def test_product_and_crosscheck():
    poset = conormal.product(conormal.interval(), conormal.simplex(2))
    result = conormal.crosscheck(poset)
    assert result.passed
    assert all(ok for (_, _, _, ok) in result.lines)


def test_smith_normal_form():
    u, diag, v = conormal.smith_normal_form([[2, 4], [6, 8]])
    assert diag == [2, 4]
    assert len(u) == 2 and len(v) == 2


def test_contraction_sign():
    assert conormal.contraction_sign(1, [1, 3]) == 1
    assert conormal.contraction_sign(3, [1, 3]) == -1
    assert conormal.contraction_sign(4, [2, 4, 7]) == -1
