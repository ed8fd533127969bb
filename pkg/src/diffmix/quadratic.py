"""Quadratic forms in the y_k: Gram matrices, rank, and factorization.

A nonzero quadratic form over a field of characteristic 0 is a product of
two linear forms over the algebraic closure iff its Gram matrix has rank at
most 2.  :func:`factor_quadratic` certifies irreducibility by exact rank and
otherwise recovers the factors, either over Q or over Q(sqrt(D)).
:func:`finite_field_factor_oracle` is an independent brute-force check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import isqrt

from .linalg import bareiss_rank, bareiss_rank_mod_p
from .poly import DiffPoly, Term


class ContractError(ValueError):
    """Input outside an operation's documented domain."""


def _require_quadratic(q: DiffPoly) -> None:
    if not q:
        raise ContractError("zero polynomial")
    if not q.is_homogeneous(2):
        raise ContractError(f"expected a homogeneous quadratic, got {q}")


@dataclass(frozen=True)
class GramMatrix:
    support: tuple[int, ...]
    entries: tuple[tuple[Fraction, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.support)

    def rank(self) -> int:
        return bareiss_rank(self.entries)


def gram_matrix(q: DiffPoly) -> GramMatrix:
    """Symmetric matrix G with q = sum G[a][b] y_a y_b over the support."""
    _require_quadratic(q)
    support = tuple(q.variables())
    pos = {v: i for i, v in enumerate(support)}
    n = len(support)
    g = [[Fraction(0)] * n for _ in range(n)]
    for t, c in q.terms():
        a, b = t.indices
        i, j = pos[a], pos[b]
        if i == j:
            g[i][i] += c
        else:
            g[i][j] += c / 2
            g[j][i] += c / 2
    return GramMatrix(support, tuple(tuple(r) for r in g))


@dataclass(frozen=True)
class QuadraticFactorization:
    """Result of :func:`factor_quadratic`.

    ``kind`` is ``"rational"`` (``factors`` multiply to the input),
    ``"quadratic-extension"`` (splits only over Q(sqrt(discriminant)))
    or ``"irreducible"`` (rank >= 3).
    """

    rank: int
    kind: str
    factors: tuple[DiffPoly, DiffPoly] | None = None
    discriminant: Fraction | None = None

    @property
    def irreducible(self) -> bool:
        return self.kind == "irreducible"


def _linear(coeffs: dict[int, Fraction]) -> DiffPoly:
    return DiffPoly({Term({k: 1}): c for k, c in coeffs.items()})


def _split_off(q: dict[tuple[int, int], Fraction]) -> tuple[list[tuple[Fraction, dict[int, Fraction]]], int]:
    """Lagrange reduction: q = sum d_i * L_i^2 with rational d_i and linear L_i.

    ``q`` maps sorted index pairs ``(a, b)`` (a <= b) to coefficients.
    """
    q = {k: v for k, v in q.items() if v}
    squares: list[tuple[Fraction, dict[int, Fraction]]] = []
    while q:
        diag = sorted(a for (a, b) in q if a == b)
        if diag:
            x = diag[0]
            a = q[(x, x)]
            # L = x + sum (b_k / 2a) y_k
            lin = {x: Fraction(1)}
            for (i, j), c in q.items():
                if i == x and j != x:
                    lin[j] = c / (2 * a)
                elif j == x and i != x:
                    lin[i] = c / (2 * a)
            squares.append((a, lin))
            q = _sub_scaled_product(q, a, lin, lin)
            continue
        (x, z) = min(q)
        b = q[(x, z)]
        # q = b*x*z + x*P + z*Q + R  ==  b*(x + Q/b)*(z + P/b) + R - P*Q/b
        P: dict[int, Fraction] = {}
        Q: dict[int, Fraction] = {}
        for (i, j), c in q.items():
            if (i, j) == (x, z):
                continue
            if x in (i, j):
                P[j if i == x else i] = c
            elif z in (i, j):
                Q[j if i == z else i] = c
        X = {x: Fraction(1), **{k: c / b for k, c in Q.items()}}
        Z = {z: Fraction(1), **{k: c / b for k, c in P.items()}}
        # b*X*Z = (b/4)(X+Z)^2 - (b/4)(X-Z)^2
        plus = _lin_comb(X, Z, 1)
        minus = _lin_comb(X, Z, -1)
        squares.append((b / 4, plus))
        squares.append((-b / 4, minus))
        q = _sub_scaled_product(q, b, X, Z)
    return squares, len(squares)


def _lin_comb(u: dict, v: dict, s: int) -> dict[int, Fraction]:
    out = dict(u)
    for k, c in v.items():
        out[k] = out.get(k, 0) + s * c
    return {k: c for k, c in out.items() if c}


def _sub_scaled_product(q: dict, c: Fraction, u: dict, v: dict) -> dict:
    out = dict(q)
    for i, a in u.items():
        for j, b in v.items():
            key = (i, j) if i <= j else (j, i)
            out[key] = out.get(key, 0) - c * a * b
    return {k: x for k, x in out.items() if x}


def _rational_sqrt(r: Fraction) -> Fraction | None:
    if r < 0:
        return None
    n, d = r.numerator, r.denominator
    sn, sd = isqrt(n), isqrt(d)
    if sn * sn == n and sd * sd == d:
        return Fraction(sn, sd)
    return None


def _squarefree_part(r: Fraction) -> int:
    # Q(sqrt(r)) == Q(sqrt(squarefree(num*den)))
    n = r.numerator * r.denominator
    sign = -1 if n < 0 else 1
    n = abs(n)
    out, p = 1, 2
    while p * p <= n:
        while n % (p * p) == 0:
            n //= p * p
        if n % p == 0:
            out *= p
            n //= p
        p += 1
    return sign * out * n


def _normalize_pair(f: DiffPoly, g: DiffPoly) -> tuple[DiffPoly, DiffPoly]:
    # order by lowest-index variable; make the second factor monic there
    f, g = sorted((f, g), key=lambda p: p.sort_key())
    lead = g.terms()[0][1]
    return f.scale(lead), g.scale(1 / lead)


def factor_quadratic(q: DiffPoly) -> QuadraticFactorization:
    """Decide whether ``q`` splits into two linear forms.

    Rank >= 3 of the Gram matrix proves no split over any extension of Q.
    """
    gram = gram_matrix(q)
    rank = gram.rank()
    if rank >= 3:
        return QuadraticFactorization(rank, "irreducible")
    coeffs = {tuple(t.indices): c for t, c in q.terms()}
    squares, count = _split_off(coeffs)
    if count != rank:
        raise AssertionError(f"Lagrange reduction gave {count} squares, Gram rank {rank}")
    if rank == 1:
        (d, lin), = squares
        f, g = _linear(lin).scale(d), _linear(lin)
    else:
        (d1, l1), (d2, l2) = squares
        r = -d2 / d1
        s = _rational_sqrt(r)
        if s is None:
            return QuadraticFactorization(rank, "quadratic-extension",
                                          discriminant=Fraction(_squarefree_part(r)))
        L1, L2 = _linear(l1), _linear(l2)
        f, g = (L1 + L2.scale(s)).scale(d1), L1 - L2.scale(s)
    if f * g != q:
        raise AssertionError(f"recovered factors of {q} do not multiply back")
    return QuadraticFactorization(rank, "rational", _normalize_pair(f, g))


def _mod_p(c: Fraction, p: int) -> int:
    if c.denominator % p == 0:
        raise ContractError(f"denominator of {c} is not invertible mod {p}")
    return c.numerator * pow(c.denominator, -1, p) % p


def reduce_mod_p(q: DiffPoly, p: int) -> dict[tuple[int, ...], int]:
    """Coefficients of ``q`` in F_p keyed by index tuples, zeros dropped."""
    out = {}
    for t, c in q.terms():
        v = _mod_p(c, p)
        if v:
            out[t.indices] = v
    return out


ORACLE_MAX_SUPPORT = 6


def finite_field_factor_oracle(q: DiffPoly, p: int) -> tuple[dict[int, int], dict[int, int]] | None:
    """Search F_p exhaustively for linear forms L, M with L*M == q mod p.

    Every variable of L or M must occur in q, so L ranges over all nonzero
    forms on q's support, normalized to leading coefficient 1 (scalars move
    into M).  For a given L the equations for the diagonal and the leading
    variable's row pin M down uniquely, so each candidate L is tested against
    the one M it admits; the full product is then compared with q.

    Returns ``(L, M)`` as ``{index: coefficient}`` maps, or None.
    """
    if not q.is_homogeneous(2):
        raise ContractError(f"expected a homogeneous quadratic, got {q}")
    support = q.variables()
    if len(support) > ORACLE_MAX_SUPPORT:
        raise ContractError(f"support of size {len(support)} exceeds {ORACLE_MAX_SUPPORT}")
    target = reduce_mod_p(q, p)
    n = len(support)
    pairs = [(i, j) for i in range(n) for j in range(i, n)]
    tgt = [target.get((support[i], support[j]), 0) for i, j in pairs]
    if not any(tgt):
        return None
    for lead in range(n):
        for tail in product(range(p), repeat=n - lead - 1):
            L = [0] * lead + [1] + list(tail)
            # q_{lead,lead} = m_lead;  q_{lead,j} = m_j + l_j m_lead  (j != lead)
            m_lead = tgt[pairs.index((lead, lead))]
            M = [0] * n
            M[lead] = m_lead
            for j in range(n):
                if j == lead:
                    continue
                key = (lead, j) if lead < j else (j, lead)
                M[j] = (tgt[pairs.index(key)] - L[j] * m_lead) % p
            ok = True
            for (i, j), want in zip(pairs, tgt):
                got = (L[i] * M[i]) % p if i == j else (L[i] * M[j] + L[j] * M[i]) % p
                if got != want:
                    ok = False
                    break
            if ok:
                return ({support[k]: L[k] for k in range(n) if L[k]},
                        {support[k]: M[k] for k in range(n) if M[k]})
    return None


def splits_mod_p(q: DiffPoly, p: int) -> bool:
    """Rank criterion for ``q mod p`` to split over F_p, for odd primes p.

    Rank 1 always splits; rank 2 splits iff minus the determinant of a
    nondegenerate 2x2 diagonalization is a square mod p.
    """
    if p == 2:
        raise ContractError("the Gram criterion needs odd characteristic")
    gram = gram_matrix(q)
    n = gram.dim
    g = [[_mod_p(x, p) for x in row] for row in gram.entries]
    r = bareiss_rank_mod_p(g, p)
    if r == 0:
        return False
    if r == 1:
        return True
    if r >= 3:
        return False
    # diagonalize by congruence over F_p
    d = []
    a = [row[:] for row in g]
    for _ in range(2):
        idx = next((i for i in range(n) if a[i][i]), None)
        if idx is None:
            i, j = next((i, j) for i in range(n) for j in range(n) if a[i][j])
            # replace e_i by e_i + e_j, making the diagonal nonzero
            for k in range(n):
                a[i][k] = (a[i][k] + a[j][k]) % p
            for k in range(n):
                a[k][i] = (a[k][i] + a[k][j]) % p
            idx = i
        piv = a[idx][idx]
        d.append(piv)
        inv = pow(piv, -1, p)
        col = [a[k][idx] for k in range(n)]
        for k in range(n):
            for l in range(n):
                a[k][l] = (a[k][l] - col[k] * col[l] * inv) % p
    disc = (-d[0] * d[1]) % p
    return disc == 0 or pow(disc, (p - 1) // 2, p) == 1
