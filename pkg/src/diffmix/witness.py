"""The witness family u(n), A(n) and exhaustive scans over its combinatorics.

``u(n) = y_{n+2^n-1} * y_{n+2^(n+1)-1}`` has effective order ``2^n`` and
``A(n) = u(2n-2) + u(2n-1)``.  The scans below certify, within explicit
bounds, the facts about powers of two that make the chain of mixed ideals
generated by the A(n) strictly ascending.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import permutations, product
from typing import Any, Iterable

from .poly import MAX_INDEX, DiffPoly, IndexOverflowError, Term


@dataclass
class ScanReport:
    """Outcome of an exhaustive scan; ``violations`` empty means verified."""

    name: str
    params: dict[str, Any]
    violations: list[tuple] = field(default_factory=list)
    elapsed_ms: float = 0.0
    details: dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "params": dict(self.params),
            "violations": [list(map(_jsonable, v)) for v in self.violations],
            "details": {k: _jsonable(v) for k, v in self.details.items()},
        }


def _jsonable(v):
    if isinstance(v, (DiffPoly, Term)):
        return str(v)
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    return v


def u_indices(n: int) -> tuple[int, int]:
    if n < 0:
        raise ValueError(f"u is indexed from 0, got {n}")
    hi = n + 2 ** (n + 1) - 1
    if hi > MAX_INDEX:
        raise IndexOverflowError(f"u({n}) needs variable index {hi}")
    return n + 2**n - 1, hi


def u_term(n: int) -> Term:
    a, b = u_indices(n)
    t = Term.from_indices(a, b)
    if t.eord != 2**n:
        raise AssertionError(f"u({n}) has effective order {t.eord}, not {2**n}")
    return t


def make_u(n: int) -> DiffPoly:
    return DiffPoly({u_term(n): 1})


def _A_closed_form(n: int) -> DiffPoly:
    # y_{2n-3+2^(2n-2)} y_{2n-3+2^(2n-1)} + y_{2n-2+2^(2n-1)} y_{2n-2+2^(2n)}
    i1 = 2 * n - 3 + 2 ** (2 * n - 2)
    j1 = 2 * n - 3 + 2 ** (2 * n - 1)
    i2 = 2 * n - 2 + 2 ** (2 * n - 1)
    j2 = 2 * n - 2 + 2 ** (2 * n)
    if j2 > MAX_INDEX:
        raise IndexOverflowError(f"A({n}) needs variable index {j2}")
    return DiffPoly.monomial(i1, j1) + DiffPoly.monomial(i2, j2)


def make_A(n: int) -> DiffPoly:
    if n < 1:
        raise ValueError(f"A is indexed from 1, got {n}")
    p = make_u(2 * n - 2) + make_u(2 * n - 1)
    closed = _A_closed_form(n)
    if p != closed:
        raise AssertionError(f"A({n}): u-form {p} disagrees with closed form {closed}")
    return p


def A_fits(n: int) -> bool:
    """Whether A(n) is constructible within the index width."""
    return n >= 1 and 2 * n - 2 + 2 ** (2 * n) <= MAX_INDEX


def witness_index(t: Term) -> tuple[int, int] | None:
    """Return ``(n, j)`` with ``t == shift(u(n), j)``, or None."""
    if t.degree != 2 or len(t.variables) != 2:
        return None
    a, b = t.variables
    e = b - a
    if e & (e - 1):
        return None
    n = e.bit_length() - 1
    j = a - (n + 2**n - 1)
    if j < 0:
        return None
    return n, j


def _timed(fn):
    def wrapper(*args, **kwargs):
        t0 = time.perf_counter()
        rep = fn(*args, **kwargs)
        rep.elapsed_ms = (time.perf_counter() - t0) * 1000
        return rep

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


def _four_tuples(values: range | list, distinct: bool) -> Iterable[tuple]:
    if distinct:
        return permutations(values, 4)
    return product(values, repeat=4)


@_timed
def remark32_scan(max_exp: int, *, distinct: bool = True) -> ScanReport:
    """Check three sum/difference inequalities between powers of two.

    For all 4-tuples ``(a, b, c, d)`` in ``[0, max_exp]`` (pairwise distinct
    unless ``distinct=False``) records each tuple where one of

        2^b - 2^a == 2^d - 2^c,  2^b - 2^a == 2^d + 2^c,  2^a + 2^b == 2^d + 2^c

    holds.  Violations are reported as ``(relation, a, b, c, d)``.
    """
    if max_exp < 3:
        raise ValueError("max_exp must be at least 3")
    pw = [2**k for k in range(max_exp + 1)]
    violations = []
    checked = 0
    for a, b, c, d in _four_tuples(range(max_exp + 1), distinct):
        checked += 1
        A, B, C, D = pw[a], pw[b], pw[c], pw[d]
        if B - A == D - C:
            violations.append(("diff=diff", a, b, c, d))
        if B - A == D + C:
            violations.append(("diff=sum", a, b, c, d))
        if A + B == D + C:
            violations.append(("sum=sum", a, b, c, d))
    violations.sort(key=lambda v: (v[1:], v[0]))
    return ScanReport(
        "remark32",
        {"max_exp": max_exp, "distinct": distinct},
        violations,
        details={"tuples_checked": checked},
    )


@_timed
def eord_distinctness_scan(n_max: int, *, distinct: bool = True) -> ScanReport:
    """Measure Eord of u(0..n_max) and check they separate sums and differences.

    The effective orders are computed from the constructed terms, not from
    the closed form ``2^n``; agreement with ``2^n`` is itself checked.
    """
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    eords = [make_u(n).support()[0].eord for n in range(n_max + 1)]
    violations: list[tuple] = []
    for n, e in enumerate(eords):
        if e != 2**n:
            violations.append(("eord!=2^n", n, e))
    seen: dict[int, int] = {}
    for n, e in enumerate(eords):
        if e in seen:
            violations.append(("repeated-eord", seen[e], n, e))
        seen.setdefault(e, n)
    for i, j, k, l in _four_tuples(range(n_max + 1), distinct):
        ei, ej, ek, el = eords[i], eords[j], eords[k], eords[l]
        if ei - ej == ek - el:
            violations.append(("diff=diff", i, j, k, l))
        if ei + ej == ek + el:
            violations.append(("sum=sum", i, j, k, l))
        if ei - ej == ek + el:
            violations.append(("diff=sum", i, j, k, l))
    violations.sort(key=lambda v: (str(v[0]), v[1:]))
    return ScanReport(
        "eords",
        {"n_max": n_max, "distinct": distinct},
        violations,
        details={"eords": eords},
    )


@_timed
def monomial_injectivity_scan(
    k_max: int,
    j_max: int,
    *,
    extra: Iterable[tuple[Any, DiffPoly]] = (),
) -> ScanReport:
    """Check that ``(k, j) -> shift(u(k), j)`` hits pairwise distinct monomials.

    ``extra`` injects additional labelled single-term polynomials into the
    enumeration; tests use it to confirm collisions are reported.
    """
    owner: dict[Term, Any] = {}
    violations = []
    entries: list[tuple[Any, Term]] = []
    for k in range(k_max + 1):
        base = u_term(k)
        for j in range(j_max + 1):
            entries.append(((k, j), base.shift(j)))
    for label, p in extra:
        (t,) = p.support()
        entries.append((label, t))
    for label, t in entries:
        if t in owner:
            violations.append((owner[t], label, str(t)))
        else:
            owner[t] = label
    violations.sort(key=lambda v: (str(v[0]), str(v[1])))
    return ScanReport(
        "injectivity",
        {"k_max": k_max, "j_max": j_max},
        violations,
        details={"terms": len(entries), "distinct": len(owner)},
    )
