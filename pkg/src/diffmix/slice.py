"""Exact membership in the degree-2 part of [A(1), ..., A(m)].

The degree-2 homogeneous elements of that ideal are exactly the rational
combinations of the shifts ``shift(A(i), j)``.  Those shifts have pairwise
disjoint two-term supports, and each monomial ``y_a * y_b`` determines the
only shift it can belong to (its effective order fixes the witness index,
its smallest variable fixes the shift).  Membership therefore reduces to
checking that every monomial is a witness monomial within range and that
partner monomials carry equal coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .poly import DiffPoly, Term
from .quadratic import ContractError
from .witness import make_A, u_term, witness_index


@dataclass(frozen=True)
class SliceCertificate:
    """Verdict for one query.

    Members carry ``coefficients`` keyed by ``(i, j)`` meaning
    ``shift(A(i), j)``; non-members carry a ``reason`` dict.
    """

    query: DiffPoly
    m: int
    member: bool
    coefficients: dict[tuple[int, int], Fraction] = field(default_factory=dict)
    reason: dict[str, Any] | None = None

    @property
    def verdict(self) -> str:
        return "member" if self.member else "non-member"

    def reconstruct(self) -> DiffPoly:
        total = DiffPoly.zero()
        for (i, j), c in self.coefficients.items():
            total = total + make_A(i).shift(j).scale(c)
        return total

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "query": str(self.query),
            "m": self.m,
            "verdict": self.verdict,
        }
        if self.member:
            out["coefficients"] = [
                {"i": i, "j": j, "lambda": str(c)}
                for (i, j), c in sorted(self.coefficients.items())
            ]
        else:
            out["reason"] = self.reason
        return out


def max_eord(m: int) -> int:
    """Largest effective order of a term of A(1), ..., A(m)."""
    return 2 ** (2 * m - 1)


def basis_slot(t: Term, m: int) -> tuple[int, int, Term] | dict[str, Any]:
    """Locate ``t`` inside some ``shift(A(i), j)`` with ``i <= m``.

    Returns ``(i, j, partner)`` or a reason dict describing why ``t`` is alien.
    """
    e = t.eord
    loc = witness_index(t)
    if loc is None:
        kind = "eord-exceeds-bound" if e > max_eord(m) else "not-a-witness-monomial"
        return {"kind": kind, "monomial": str(t), "eord": e, "bound": max_eord(m)}
    n, j = loc
    if e > max_eord(m):
        return {"kind": "eord-exceeds-bound", "monomial": str(t), "eord": e,
                "bound": max_eord(m)}
    i = n // 2 + 1
    partner = u_term(n + 1 if n % 2 == 0 else n - 1).shift(j)
    return i, j, partner


def degree2_slice_membership(q: DiffPoly, m: int) -> SliceCertificate:
    """Decide whether the quadratic form ``q`` lies in [A(1), ..., A(m)]."""
    if m < 1:
        raise ContractError("m must be positive")
    if not q:
        raise ContractError("zero polynomial")
    if not q.is_homogeneous(2):
        raise ContractError(f"expected a homogeneous quadratic, got {q}")
    coefficients: dict[tuple[int, int], Fraction] = {}
    for t, c in q.terms():
        slot = basis_slot(t, m)
        if isinstance(slot, dict):
            return SliceCertificate(q, m, False, reason=slot)
        i, j, partner = slot
        pc = q.coefficient(partner)
        if pc != c:
            return SliceCertificate(q, m, False, reason={
                "kind": "pairing-violation",
                "monomial": str(t),
                "coefficient": str(c),
                "partner": str(partner),
                "partner_coefficient": str(pc),
                "generator": [i, j],
            })
        coefficients[(i, j)] = c
    cert = SliceCertificate(q, m, True, coefficients)
    if cert.reconstruct() != q:
        raise AssertionError(f"slice certificate for {q} does not reconstruct it")
    return cert


@dataclass(frozen=True)
class Degree2Slice:
    """Index of the basis monomials of ``shift(A(i), j)``, ``i <= m``, ``j <= max_shift``."""

    m: int
    max_shift: int
    index: dict[Term, tuple[int, int, Term]]

    @classmethod
    def build(cls, m: int, max_shift: int) -> Degree2Slice:
        index: dict[Term, tuple[int, int, Term]] = {}
        for i in range(1, m + 1):
            a, b = make_A(i).support()
            for j in range(max_shift + 1):
                sa, sb = a.shift(j), b.shift(j)
                for t, partner in ((sa, sb), (sb, sa)):
                    if t in index:
                        raise AssertionError(
                            f"{t} lies in both A({index[t][0]}) shift {index[t][1]} "
                            f"and A({i}) shift {j}")
                    index[t] = (i, j, partner)
        bound = max_eord(m)
        for t in index:
            if not 1 <= t.eord <= bound or t.eord & (t.eord - 1):
                raise AssertionError(f"basis monomial {t} has Eord {t.eord}")
        return cls(m, max_shift, index)

    def __len__(self) -> int:
        return len(self.index) // 2
