from diffmix.ideal import MembershipResult
from diffmix.poly import DiffPoly, Term, parse
from diffmix.shuffle import (ProductWitness, ShuffleBounds, ShuffleState, default_witnesses,
                             lemma34_verify, run_shuffle, shuffle_step)
from diffmix.witness import make_A

A1 = make_A(1)
ONE = DiffPoly.constant(1)


def state(m=1, max_index=40, extra=1):
    return ShuffleState.for_witnesses(m, ShuffleBounds(max_index, extra))


def test_stage_zero_is_S():
    assert state(2).generators == (make_A(1), make_A(2))


def test_term_witness_emits_shifted_multiple():
    nxt = shuffle_step(state(), [ProductWitness(A1, parse("y0"))])
    assert A1 * parse("y1") in nxt.generators
    assert nxt.log == ((A1, parse("y0"), A1 * parse("y1")),)


def test_identity_witness_keeps_generator():
    nxt = shuffle_step(state(), [ProductWitness(A1, ONE)])
    assert nxt.generators == (A1,)


def test_unverifiable_witness_is_rejected():
    bad = ProductWitness(parse("y0"), parse("y1"))
    nxt = shuffle_step(state(max_index=6), [bad])
    assert len(nxt.rejected) == 1 and nxt.rejected[0][:2] == (parse("y0"), parse("y1"))
    assert nxt.generators == (A1,)


def test_forged_proof_rejected():
    fake = MembershipResult(True, ((parse("y0^2"), 0, Term(), 1),))
    nxt = shuffle_step(state(), [ProductWitness(parse("y0"), parse("y0"), fake)])
    assert nxt.rejected and "not a current generator" in nxt.rejected[0][2]


def test_witness_without_proof_checked_by_slice():
    w = ProductWitness(A1.shift(2), ONE)
    nxt = shuffle_step(state(), [w])
    assert A1.shift(2) in nxt.generators and not nxt.rejected


def test_bounds_filter_outputs():
    nxt = shuffle_step(state(max_index=5), [ProductWitness(A1, parse("y5"))])
    assert nxt.filtered == 1 and nxt.generators == (A1,)


def test_default_enumeration_stage0():
    ws = default_witnesses(state(max_index=6))
    assert len(ws) == 1 + 7
    assert {str(w.b) for w in ws} == {"1"} | {f"y{k}" for k in range(7)}


def test_stages_nested_and_low_degree_free():
    stages = run_shuffle(state(max_index=12), 2)
    for a, b in zip(stages, stages[1:]):
        assert set(a.generators) <= set(b.generators)
    assert all(g.min_degree >= 2 for st in stages for g in st.generators)


def test_lemma34_runs():
    for m, mi in ((1, 40), (2, 60)):
        rep = lemma34_verify(m, 2, mi)
        assert rep.ok, rep.violations[:3]
        assert rep.details["quadratics_checked"] == m


def test_factorable_quadratic_generators_yield_new_quadratics():
    # a split generator y0*y1 produces y0*y2 and y1*y1, so the factor path is live
    st0 = ShuffleState.initial([parse("y0*y1")], ShuffleBounds(6, 0))
    nxt = shuffle_step(st0, default_witnesses(st0))
    assert parse("y0*y2") in nxt.generators and parse("y1^2") in nxt.generators
