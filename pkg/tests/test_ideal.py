import pytest

from diffmix.ideal import (SigmaIdealPresentation, bounded_ideal_membership, colon_membership,
                           j_family, terms_up_to)
from diffmix.poly import DiffPoly, Term, parse
from diffmix.quadratic import ContractError
from diffmix.witness import make_A


def test_presentation_dedupes_and_sorts():
    a, b = parse("y0*y1"), parse("y0^2")
    pres = SigmaIdealPresentation([a, b, a, DiffPoly.zero()])
    assert pres.generators == (b, a)


def test_shifted_respects_max_index():
    pres = SigmaIdealPresentation([make_A(1)])
    shifted = pres.shifted(8)
    assert [j for _, j, _ in shifted] == [0, 1, 2, 3, 4]
    assert all(g.max_index <= 8 for _, _, g in shifted)


def test_terms_up_to():
    assert terms_up_to(0, 5) == [Term()]
    assert len(terms_up_to(2, 3)) == 10


def test_term_multiple_of_generator():
    res = bounded_ideal_membership(parse("y5*y0^2"), j_family(8), 8, 1)
    assert res.found
    assert res.expand() == parse("y5*y0^2")
    (g, j, t, c), = res.combination
    assert (g, j, t, c) == (parse("y0^2"), 0, Term({5: 1}), 1)


def test_multiple_of_A1():
    p = make_A(1) * parse("y7")
    res = bounded_ideal_membership(p, SigmaIdealPresentation([make_A(1)]), 8, 1)
    assert res.found and res.expand() == p


@pytest.mark.parametrize("max_index,extra", [(0, 0), (4, 1), (10, 2)])
def test_y0_never_in_J(max_index, extra):
    res = bounded_ideal_membership(parse("y0"), j_family(max_index), max_index, extra)
    assert not res.found and res.status == "not-found-within-bounds"


def test_shifted_generator_combination():
    p = make_A(1).shift(3) - make_A(1).shift(1).scale(2)
    res = bounded_ideal_membership(p, SigmaIdealPresentation([make_A(1)]), 10, 0)
    assert res.found
    assert sorted((j, c) for _, j, _, c in res.combination) == [(1, -2), (3, 1)]


def test_out_of_bounds_query_not_found():
    res = bounded_ideal_membership(make_A(1).shift(20), SigmaIdealPresentation([make_A(1)]), 10, 0)
    assert not res.found


def test_contract_errors():
    with pytest.raises(ContractError):
        bounded_ideal_membership(DiffPoly.zero(), j_family(2), 4, 0)
    with pytest.raises(ContractError):
        bounded_ideal_membership(parse("y0^2"), SigmaIdealPresentation([parse("y0^2 + y1")]), 4, 0)


def test_colon_examples():
    J = j_family(6)
    assert colon_membership(parse("y1"), parse("y0"), J, 6, 1).found
    assert not colon_membership(DiffPoly.constant(1), parse("y0"), J, 6, 1).found
    assert colon_membership(parse("y0"), parse("y0"), J, 6, 1).found


def test_nonhomogeneous_query_solved_per_degree():
    p = parse("y0*y3 + y1^2*y2")
    res = bounded_ideal_membership(p, j_family(4), 4, 1)
    assert res.found and res.expand() == p
    assert not bounded_ideal_membership(p + parse("y2"), j_family(4), 4, 1).found
