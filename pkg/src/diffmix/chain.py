"""Certificates that <A(1)> < <A(1), A(2)> < ... is strictly ascending.

For each m the certificate records the measured largest effective order of
a term among A(1)..A(m), the effective orders of the two terms of A(m+1),
and the exact degree-2 slice verdict refuting A(m+1) in [A(1), ..., A(m)].
Since A(m+1) is a quadratic form, membership in the mixed ideal would force
membership in that slice, so a non-member verdict separates the two ideals.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .quadratic import ContractError
from .slice import SliceCertificate, degree2_slice_membership
from .witness import A_fits, make_A


@dataclass(frozen=True)
class ChainCertificate:
    m: int
    generators: tuple[str, ...]
    max_eord_bound: int
    separator: str
    separator_eords: tuple[int, int]
    slice: SliceCertificate

    @property
    def strict(self) -> bool:
        return (min(self.separator_eords) > self.max_eord_bound
                and not self.slice.member)

    def to_dict(self) -> dict[str, Any]:
        return {
            "m": self.m,
            "generators": list(self.generators),
            "max_eord_bound": self.max_eord_bound,
            "expected_bound": 2 ** (2 * self.m - 1),
            "separator": self.separator,
            "separator_eords": list(self.separator_eords),
            "slice": self.slice.to_dict(),
            "strict": self.strict,
        }


def chain_certificate(m: int) -> ChainCertificate:
    gens = [make_A(i) for i in range(1, m + 1)]
    bound = max(t.eord for g in gens for t in g.support())
    sep = make_A(m + 1)
    eords = tuple(sorted(t.eord for t in sep.support()))
    return ChainCertificate(
        m,
        tuple(str(g) for g in gens),
        bound,
        str(sep),
        eords,
        degree2_slice_membership(sep, m),
    )


def acc_chain_experiment(m_max: int) -> list[ChainCertificate]:
    if m_max < 1:
        raise ContractError("m_max must be at least 1")
    if not A_fits(m_max + 1):
        raise ContractError(f"A({m_max + 1}) does not fit the 64-bit index width")
    return [chain_certificate(m) for m in range(1, m_max + 1)]
