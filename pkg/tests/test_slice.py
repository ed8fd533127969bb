import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from diffmix.checks import random_slice_element
from diffmix.poly import DiffPoly, parse
from diffmix.quadratic import ContractError
from diffmix.slice import Degree2Slice, degree2_slice_membership, max_eord
from diffmix.witness import make_A

from oracles import slice_oracle


def test_shifted_generator_is_member():
    cert = degree2_slice_membership(make_A(1).shift(3), 1)
    assert cert.member and cert.coefficients == {(1, 3): 1}
    assert make_A(1).shift(3) == parse("y3*y4 + y5*y7")


def test_A2_refuted_by_eord_bound():
    cert = degree2_slice_membership(make_A(2), 1)
    assert not cert.member
    assert cert.reason == {"kind": "eord-exceeds-bound", "monomial": "y5*y9",
                           "eord": 4, "bound": 2}


def test_lonely_monomial_pairing_violation():
    q = parse("y0*y1")
    cert = degree2_slice_membership(q, 1)
    assert cert.reason["kind"] == "pairing-violation"
    assert cert.reason["partner"] == "y2*y4"
    assert cert.reason["partner_coefficient"] == "0"
    assert slice_oracle(q, 1) is None


@pytest.mark.parametrize("text,kind", [
    ("y0^2", "not-a-witness-monomial"),
    ("y0*y3", "eord-exceeds-bound"),
    ("y4*y7", "eord-exceeds-bound"),
    ("y0*y2", "not-a-witness-monomial"),
    ("y0*y17", "eord-exceeds-bound"),
    ("y0*y1 + 2*y2*y4", "pairing-violation"),
])
def test_refutation_kinds(text, kind):
    assert degree2_slice_membership(parse(text), 1).reason["kind"] == kind


def test_non_power_eord_within_bound():
    assert degree2_slice_membership(parse("y0*y3"), 2).reason["kind"] == "not-a-witness-monomial"


def test_contract_errors():
    for bad in ("0", "y0", "y0*y1*y2"):
        with pytest.raises(ContractError):
            degree2_slice_membership(parse(bad), 1)
    with pytest.raises(ContractError):
        degree2_slice_membership(make_A(1), 0)


def test_disjoint_basis_supports():
    s = Degree2Slice.build(6, 64)
    assert len(s) == 6 * 65
    bound = max_eord(6)
    assert max(t.eord for t in s.index) == bound


@settings(max_examples=100)
@given(st.integers(0, 2**32))
def test_members_reconstruct(seed):
    q, lam = random_slice_element(random.Random(seed), 3, 12)
    cert = degree2_slice_membership(q, 3)
    assert cert.member and cert.coefficients == lam
    assert cert.reconstruct() == q


@settings(max_examples=100)
@given(st.integers(0, 2**32), st.sampled_from(["drop", "bump", "alien"]))
def test_perturbed_queries_agree_with_linear_solve(seed, how):
    rng = random.Random(seed)
    q, _ = random_slice_element(rng, 3, 12)
    t, c = rng.choice(q.terms())
    if how == "drop":
        q = q - DiffPoly({t: c})
    elif how == "bump":
        q = q + DiffPoly({t: Fraction(1, 3)})
    else:
        q = q + parse(f"y{rng.randint(0, 20)}*y{rng.randint(0, 20)}")
    if not q:
        return
    cert = degree2_slice_membership(q, 3)
    assert cert.member == (slice_oracle(q, 3) is not None)
