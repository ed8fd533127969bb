"""Finitely generated difference ideals and bounded membership search.

As an ordinary ideal, the difference ideal [G] is generated by all shifts of
the elements of G.  :func:`bounded_ideal_membership` looks for an explicit
combination ``sum c * t * shift(g, j)`` inside user-given bounds; a miss is
reported as "not found within bounds", never as a proof of non-membership.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Iterable

from .linalg import ExactSpan
from .poly import DiffPoly, Term
from .quadratic import ContractError


@dataclass(frozen=True)
class SigmaIdealPresentation:
    """Generators of a difference ideal, deduplicated and canonically sorted."""

    generators: tuple[DiffPoly, ...]

    def __init__(self, generators: Iterable[DiffPoly]):
        gens = {g for g in generators if g}
        object.__setattr__(self, "generators", tuple(sorted(gens, key=DiffPoly.sort_key)))

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def shifted(self, max_index: int) -> list[tuple[int, int, DiffPoly]]:
        """All ``(g_pos, j, shift(g, j))`` whose variables stay <= max_index."""
        out = []
        for pos, g in enumerate(self.generators):
            for j in range(max(0, max_index - g.max_index) + 1):
                if g.max_index + j > max_index:
                    break
                out.append((pos, j, g.shift(j)))
        return out


def j_family(max_offset: int) -> SigmaIdealPresentation:
    """Truncation ``[y0^2, y0*y1, ..., y0*y_max_offset]`` of the ideal of
    polynomials whose terms all have degree at least 2."""
    return SigmaIdealPresentation(DiffPoly.monomial(0, k) for k in range(max_offset + 1))


def terms_up_to(degree: int, max_index: int) -> list[Term]:
    """All terms of exact ``degree`` in y0..y_max_index, canonically ordered."""
    if degree == 0:
        return [Term()]
    return [Term.from_indices(*c)
            for c in combinations_with_replacement(range(max_index + 1), degree)]


@dataclass(frozen=True)
class MembershipResult:
    """``combination`` entries are ``(generator, shift, multiplier term, coefficient)``."""

    found: bool
    combination: tuple[tuple[DiffPoly, int, Term, Fraction], ...] = ()
    columns: int = 0

    @property
    def status(self) -> str:
        return "member" if self.found else "not-found-within-bounds"

    def expand(self) -> DiffPoly:
        total = DiffPoly.zero()
        for g, j, t, c in self.combination:
            total = total + (g.shift(j) * t).scale(c)
        return total


def bounded_ideal_membership(
    p: DiffPoly,
    ideal: SigmaIdealPresentation,
    max_index: int,
    extra_degree: int,
) -> MembershipResult:
    """Search for ``p`` in the span of ``t * shift(g, j)`` within bounds.

    ``j`` keeps every variable of the shifted generator <= ``max_index`` and
    ``t`` runs over terms of degree <= ``extra_degree`` in the same variables.
    The generators must be homogeneous, so each homogeneous component of
    ``p`` is solved separately.
    """
    if not p:
        raise ContractError("zero polynomial")
    for g in ideal:
        if not g.is_homogeneous():
            raise ContractError(f"generator {g} is not homogeneous")
    if p.max_index > max_index:
        return MembershipResult(False)
    shifted = ideal.shifted(max_index)
    combination = []
    columns = 0
    for d, part in p.homogeneous_components().items():
        span = ExactSpan(order=Term.sort_key)
        for pos, j, gj in shifted:
            e = d - gj.degree
            if e < 0 or e > extra_degree:
                continue
            for t in terms_up_to(e, max_index):
                col = gj * t
                span.add((pos, j, t), dict(col.terms()))
                columns += 1
        combo = span.express(dict(part.terms()))
        if combo is None:
            return MembershipResult(False, columns=columns)
        for (pos, j, t), c in sorted(combo.items(), key=lambda kv: (kv[0][0], kv[0][1], kv[0][2].sort_key())):
            combination.append((ideal.generators[pos], j, t, c))
    res = MembershipResult(True, tuple(combination), columns)
    if res.expand() != p:
        raise AssertionError("membership combination does not reconstruct the query")
    return res


def colon_membership(
    a: DiffPoly,
    s: DiffPoly,
    ideal: SigmaIdealPresentation,
    max_index: int,
    extra_degree: int,
) -> MembershipResult:
    """Probe ``a`` in the colon ideal ``[G] : s`` by testing ``a * s`` in [G]."""
    return bounded_ideal_membership(a * s, ideal, max_index, extra_degree)
