"""Bounded shuffling toward the mixed difference ideal generated by a set.

Stage 0 is the generating set S; stage n+1 adds ``a * shift(b, 1)`` for
every product ``a * b`` certified to lie in the difference ideal of stage n.
The union over all stages is the smallest mixed difference ideal containing
S.  Factorizations ``a * b`` cannot be enumerated in general, so each step
consumes explicit :class:`ProductWitness` values and every emitted element
carries the certificate that admitted it.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction

from .ideal import MembershipResult, SigmaIdealPresentation, bounded_ideal_membership, terms_up_to
from .poly import DiffPoly, Term
from .quadratic import factor_quadratic
from .slice import degree2_slice_membership
from .witness import ScanReport, make_A


@dataclass(frozen=True)
class ShuffleBounds:
    max_index: int = 40
    extra_degree: int = 1


@dataclass(frozen=True)
class ProductWitness:
    """A factorization ``a * b``; ``proof`` optionally certifies ``a * b`` in the current ideal."""

    a: DiffPoly
    b: DiffPoly
    proof: MembershipResult | None = None


@dataclass(frozen=True)
class ShuffleState:
    stage: int
    generators: tuple[DiffPoly, ...]
    bounds: ShuffleBounds
    m: int | None = None
    log: tuple[tuple[DiffPoly, DiffPoly, DiffPoly], ...] = ()
    rejected: tuple[tuple[DiffPoly, DiffPoly, str], ...] = ()
    filtered: int = 0

    @classmethod
    def initial(cls, generators, bounds: ShuffleBounds, m: int | None = None) -> ShuffleState:
        pres = SigmaIdealPresentation(generators)
        return cls(0, pres.generators, bounds, m)

    @classmethod
    def for_witnesses(cls, m: int, bounds: ShuffleBounds) -> ShuffleState:
        return cls.initial([make_A(i) for i in range(1, m + 1)], bounds, m)

    def presentation(self) -> SigmaIdealPresentation:
        return SigmaIdealPresentation(self.generators)

    def snapshot(self) -> list[str]:
        return [str(g) for g in self.generators]


def _certify(state: ShuffleState, w: ProductWitness, gens: set[DiffPoly]) -> str | None:
    """Return None if ``w.a * w.b`` is certified in the stage ideal, else a reason."""
    prod = w.a * w.b
    if not prod:
        return "zero product"
    if w.proof is not None:
        if not w.proof.found:
            return "proof marks the product as not found"
        if any(g not in gens for g, _, _, _ in w.proof.combination):
            return "proof uses a polynomial that is not a current generator"
        if w.proof.expand() != prod:
            return "proof does not expand to the product"
        return None
    if state.m is not None and prod.is_homogeneous(2):
        if degree2_slice_membership(prod, state.m).member:
            return None
    b = state.bounds
    if bounded_ideal_membership(prod, state.presentation(), b.max_index, b.extra_degree).found:
        return None
    return "product not found in the stage ideal within bounds"


def shuffle_step(state: ShuffleState, witnesses) -> ShuffleState:
    """Advance one stage: keep every generator and add ``a * shift(b, 1)`` per accepted witness."""
    gens = set(state.generators)
    new = set(gens)
    log = []
    rejected = []
    filtered = 0
    for w in witnesses:
        why = _certify(state, w, gens)
        if why is not None:
            rejected.append((w.a, w.b, why))
            continue
        out = w.a * w.b.shift(1)
        if out.max_index > state.bounds.max_index:
            filtered += 1
            continue
        log.append((w.a, w.b, out))
        new.add(out)
    return ShuffleState(
        state.stage + 1,
        SigmaIdealPresentation(new).generators,
        state.bounds,
        state.m,
        tuple(log),
        tuple(rejected),
        filtered,
    )


def _trivial_proof(g: DiffPoly, t: Term) -> MembershipResult:
    return MembershipResult(True, ((g, 0, t, Fraction(1)),), 1)


def default_witnesses(state: ShuffleState) -> list[ProductWitness]:
    """Identity witnesses (g, 1), term multiples (g, t), and linear splits of quadratics.

    ``t`` ranges over terms of degree 1..extra_degree with variables at most
    ``max_index``.  A degree-2 generator that splits over Q as ``f1 * f2``
    contributes both orders of the split.
    """
    b = state.bounds
    mults = [t for e in range(1, b.extra_degree + 1) for t in terms_up_to(e, b.max_index)]
    one = DiffPoly.constant(1)
    out = []
    for g in state.generators:
        out.append(ProductWitness(g, one, _trivial_proof(g, Term())))
        for t in mults:
            out.append(ProductWitness(g, DiffPoly({t: 1}), _trivial_proof(g, t)))
        if g.is_homogeneous(2):
            fac = factor_quadratic(g)
            if fac.kind == "rational":
                f1, f2 = fac.factors
                proof = _trivial_proof(g, Term())
                out.append(ProductWitness(f1, f2, proof))
                out.append(ProductWitness(f2, f1, proof))
    return out


def run_shuffle(state: ShuffleState, iters: int) -> list[ShuffleState]:
    stages = [state]
    for _ in range(iters):
        state = shuffle_step(state, default_witnesses(state))
        stages.append(state)
    return stages


def lemma34_verify(m: int, n_iter: int, max_index: int = 40, extra_degree: int = 1) -> ScanReport:
    """Shuffle the witness generators and check every quadratic produced.

    Every degree-2 homogeneous generator at every stage must lie in the
    degree-2 part of [A(1), ..., A(m)]; no stage may contain a term of
    degree below 2; stages must be nested.
    """
    if n_iter < 1:
        raise ValueError("n_iter must be at least 1")
    t0 = time.perf_counter()
    bounds = ShuffleBounds(max_index, extra_degree)
    stages = run_shuffle(ShuffleState.for_witnesses(m, bounds), n_iter)
    violations = []
    seen: set[DiffPoly] = set()
    for st in stages:
        for g in st.generators:
            if g.min_degree < 2:
                violations.append(("low-degree-term", st.stage, str(g)))
            if g.is_homogeneous(2) and g not in seen:
                seen.add(g)
                cert = degree2_slice_membership(g, m)
                if not cert.member:
                    violations.append(("quadratic-outside-W", st.stage, str(g), cert.reason))
        for w_a, w_b, why in st.rejected:
            violations.append(("rejected-witness", st.stage, str(w_a), str(w_b), why))
    for prev, nxt in zip(stages, stages[1:]):
        if not set(prev.generators) <= set(nxt.generators):
            violations.append(("stage-not-nested", prev.stage, nxt.stage))
    rep = ScanReport(
        "lemma34",
        {"m": m, "n_iter": n_iter, "max_index": max_index, "extra_degree": extra_degree},
        violations,
        details={
            "stage_sizes": [len(st.generators) for st in stages],
            "quadratics_checked": len(seen),
            "quadratics": sorted(str(g) for g in seen),
            "filtered_by_bounds": [st.filtered for st in stages],
            "accepted_witnesses": [len(st.log) for st in stages],
        },
    )
    rep.elapsed_ms = (time.perf_counter() - t0) * 1000
    return rep
