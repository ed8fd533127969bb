"""Seeded randomized checks shared by the CLI and the acceptance suite."""

from __future__ import annotations

import random
import time
from fractions import Fraction
from itertools import product
from math import gcd, lcm

from .ideal import bounded_ideal_membership, j_family
from .poly import DiffPoly, Term
from .quadratic import factor_quadratic, finite_field_factor_oracle, reduce_mod_p, splits_mod_p
from .witness import ScanReport, make_A


def _rand_fraction(rng: random.Random, num: int, dens=(1, 2, 3, 4, 5, 6, 7, 8, 9)) -> Fraction:
    n = 0
    while n == 0:
        n = rng.randint(-num, num)
    return Fraction(n, rng.choice(dens))


def random_slice_element(rng: random.Random, m_max: int, max_shift: int,
                         max_terms: int = 6) -> tuple[DiffPoly, dict[tuple[int, int], Fraction]]:
    """A nonzero combination of distinct ``shift(A(i), j)`` with ``i <= m_max``."""
    slots = [(i, j) for i in range(1, m_max + 1) for j in range(max_shift + 1)]
    chosen = rng.sample(slots, rng.randint(1, min(max_terms, len(slots))))
    lam = {s: _rand_fraction(rng, 9) for s in chosen}
    q = DiffPoly.zero()
    for (i, j), c in lam.items():
        q = q + make_A(i).shift(j).scale(c)
    return q, lam


def irreducibility_sweep(samples: int, m_max: int, max_shift: int, seed: int) -> ScanReport:
    """Gram rank of random slice elements; any rank below 3 is a violation."""
    t0 = time.perf_counter()
    rng = random.Random(seed)
    violations = []
    ranks: dict[int, int] = {}
    for k in range(samples):
        q, lam = random_slice_element(rng, m_max, max_shift)
        fac = factor_quadratic(q)
        ranks[fac.rank] = ranks.get(fac.rank, 0) + 1
        if fac.rank < 3:
            violations.append(("low-rank", k, str(q), fac.rank))
    rep = ScanReport("irreducible",
                     {"samples": samples, "m": m_max, "shifts": max_shift, "seed": seed},
                     violations,
                     details={"rank_histogram": {str(r): n for r, n in sorted(ranks.items())},
                              "min_rank": min(ranks) if ranks else None})
    rep.elapsed_ms = (time.perf_counter() - t0) * 1000
    return rep


def _primitive(f: DiffPoly) -> tuple[Fraction, DiffPoly]:
    """Split a linear form as ``content * primitive integer form``."""
    coefs = [c for _, c in f.terms()]
    den = lcm(*(c.denominator for c in coefs))
    ints = [int(c * den) for c in coefs]
    g = 0
    for x in ints:
        g = gcd(g, x)
    content = Fraction(g, den)
    return content, f.scale(1 / content)


def _reduced_product_matches(q: DiffPoly, factors: tuple[DiffPoly, DiffPoly], p: int) -> bool:
    c1, f1 = _primitive(factors[0])
    c2, f2 = _primitive(factors[1])
    c = c1 * c2
    if c.denominator % p == 0:
        return False
    prod = (f1 * f2).scale(c)
    return reduce_mod_p(prod, p) == reduce_mod_p(q, p) and bool(reduce_mod_p(f1, p)) \
        and bool(reduce_mod_p(f2, p))


def _random_quadratic(rng: random.Random, max_vars: int) -> DiffPoly:
    nvars = rng.randint(1, max_vars)
    idx = sorted(rng.sample(range(24), nvars))
    dens = (1, 2, 4, 7, 8)
    if rng.random() < 0.4:
        def lin():
            return DiffPoly({Term({i: 1}): _rand_fraction(rng, 6, dens)
                             for i in rng.sample(idx, rng.randint(1, nvars))})
        q = lin() * lin()
    else:
        q = DiffPoly.zero()
        for a in range(nvars):
            for b in range(a, nvars):
                if rng.random() < 0.6:
                    q = q + DiffPoly.monomial(idx[a], idx[b], coef=_rand_fraction(rng, 9, dens))
    return q if q else DiffPoly.monomial(idx[0], idx[-1])


def factor_oracle_agreement(samples: int, seed: int, primes=(3, 5), max_vars: int = 5,
                            f2_vars: int = 4) -> ScanReport:
    """Cross-check :func:`factor_quadratic` against the finite-field oracle.

    Over F_2 every quadratic in ``f2_vars`` variables is tried: a rational
    factorization must reduce to one the oracle also finds.  Splits that
    exist only mod 2 are counted, not flagged, since the Gram criterion
    does not apply in characteristic 2.  For odd primes the oracle must
    additionally agree with the mod-p Gram criterion.
    """
    t0 = time.perf_counter()
    violations = []
    counts = {"f2_total": 0, "f2_rational": 0, "f2_only_mod_2": 0,
              "random_total": 0, "random_rational": 0, "zero_mod_p": 0,
              "split_mod_p_only": 0}
    pairs = [(a, b) for a in range(f2_vars) for b in range(a, f2_vars)]
    for bits in product((0, 1), repeat=len(pairs)):
        if not any(bits):
            continue
        q = DiffPoly({Term.from_indices(a, b): 1 for (a, b), x in zip(pairs, bits) if x})
        counts["f2_total"] += 1
        fac = factor_quadratic(q)
        found = finite_field_factor_oracle(q, 2)
        if fac.kind == "rational":
            counts["f2_rational"] += 1
            if found is None or not _reduced_product_matches(q, fac.factors, 2):
                violations.append(("f2-rational-not-found", str(q)))
        elif found is not None:
            counts["f2_only_mod_2"] += 1
    rng = random.Random(seed)
    for k in range(samples):
        q = _random_quadratic(rng, max_vars)
        counts["random_total"] += 1
        fac = factor_quadratic(q)
        if fac.kind == "rational":
            counts["random_rational"] += 1
        for p in primes:
            if not reduce_mod_p(q, p):
                counts["zero_mod_p"] += 1
                continue
            found = finite_field_factor_oracle(q, p) is not None
            if found != splits_mod_p(q, p):
                violations.append(("oracle-vs-gram-mod-p", k, p, str(q), found))
            if fac.kind == "rational":
                if not found or not _reduced_product_matches(q, fac.factors, p):
                    violations.append(("rational-not-found-mod-p", k, p, str(q)))
            elif found:
                counts["split_mod_p_only"] += 1
    rep = ScanReport("factor-oracle",
                     {"samples": samples, "seed": seed, "primes": list(primes),
                      "max_vars": max_vars, "f2_vars": f2_vars},
                     violations, details=counts)
    rep.elapsed_ms = (time.perf_counter() - t0) * 1000
    return rep


def _random_poly(rng: random.Random, degrees, max_index: int, nterms: int) -> DiffPoly:
    out = {}
    for _ in range(nterms):
        d = rng.choice(degrees)
        t = Term.from_indices(*(rng.randint(0, max_index) for _ in range(d)))
        out[t] = _rand_fraction(rng, 9)
    return DiffPoly(out)


def j_example_check(samples: int, seed: int, max_index: int = 6) -> ScanReport:
    """Bounded membership in the ideal of polynomials with all terms of degree >= 2.

    Members are random polynomials with term degrees 2..4; non-members get
    at least one term of degree 0 or 1.  Members must be found with a
    certificate; non-members must never be found.
    """
    t0 = time.perf_counter()
    rng = random.Random(seed)
    fam = j_family(max_index)
    violations = []
    y0y5 = DiffPoly.monomial(0, 5)
    if not bounded_ideal_membership(y0y5, j_family(8), 8, 1).found:
        violations.append(("y0*y5-not-found",))
    for mi, ed in ((1, 0), (8, 1), (12, 2)):
        if bounded_ideal_membership(DiffPoly.var(0), j_family(mi), mi, ed).found:
            violations.append(("y0-found", mi, ed))
    for k in range(samples):
        p = _random_poly(rng, (2, 3, 4), max_index, rng.randint(1, 4))
        if p.min_degree < 2 or not bounded_ideal_membership(p, fam, max_index, 2).found:
            violations.append(("member-not-found", k, str(p)))
    for k in range(samples):
        p = _random_poly(rng, (2, 3, 4), max_index, rng.randint(0, 3))
        p = p + _random_poly(rng, (0, 1), max_index, 1)
        if p.min_degree >= 2:
            violations.append(("sampler-made-member", k, str(p)))
        elif bounded_ideal_membership(p, fam, max_index, 2).found:
            violations.append(("non-member-found", k, str(p)))
    rep = ScanReport("j-example", {"samples": samples, "seed": seed, "max_index": max_index},
                     violations)
    rep.elapsed_ms = (time.perf_counter() - t0) * 1000
    return rep
