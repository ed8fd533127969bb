"""Exact linear algebra over Q: sparse span membership and integer rank."""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Any, Hashable, Sequence


class ExactSpan:
    """Incrementally built span of sparse rational vectors.

    Vectors are dicts ``key -> Fraction``; keys must be mutually orderable
    through ``order`` (a key function).  Every stored row remembers how it
    was combined from the labelled input vectors, so :meth:`express`
    returns an explicit combination.
    """

    def __init__(self, order=lambda k: k):
        self._order = order
        # pivot key -> (row, combination); all keys of row order <= pivot
        self._pivots: dict[Hashable, tuple[dict, dict]] = {}

    def __len__(self) -> int:
        return len(self._pivots)

    def _reduce(self, vec: dict, combo: dict) -> tuple[dict, dict]:
        vec = dict(vec)
        combo = dict(combo)
        done: set = set()
        while True:
            live = [k for k in vec if k in self._pivots and k not in done]
            if not live:
                return vec, combo
            k = max(live, key=self._order)
            row, rcombo = self._pivots[k]
            f = vec[k] / row[k]
            for key, v in row.items():
                s = vec.get(key, 0) - f * v
                if s:
                    vec[key] = s
                else:
                    vec.pop(key, None)
            for lab, v in rcombo.items():
                s = combo.get(lab, 0) - f * v
                if s:
                    combo[lab] = s
                else:
                    combo.pop(lab, None)
            done.add(k)

    def add(self, label: Any, vec: dict) -> bool:
        """Insert a labelled vector; return False if it was already in the span."""
        rest, combo = self._reduce(vec, {label: Fraction(1)})
        if not rest:
            return False
        k = max(rest, key=self._order)
        self._pivots[k] = (rest, combo)
        return True

    def express(self, target: dict) -> dict | None:
        """Coefficients ``{label: c}`` with ``sum c * vec[label] == target``, or None."""
        rest, combo = self._reduce(target, {})
        if rest:
            return None
        return {lab: -c for lab, c in combo.items()}


def _clear_denominators(rows: Sequence[Sequence[Fraction]]) -> list[list[int]]:
    out = []
    for r in rows:
        m = lcm(*(Fraction(x).denominator for x in r)) if r else 1
        out.append([int(Fraction(x) * m) for x in r])
    return out


def bareiss_rank(matrix: Sequence[Sequence[Fraction | int]]) -> int:
    """Rank by fraction-free (Bareiss) elimination.

    Rows are scaled to integers first; all intermediate entries stay
    integral because each division by the previous pivot is exact.
    """
    a = _clear_denominators(matrix)
    if not a:
        return 0
    nrows, ncols = len(a), len(a[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        piv = next((r for r in range(rank, nrows) if a[r][col]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        p = a[rank][col]
        for r in range(rank + 1, nrows):
            arc = a[r][col]
            row_r, row_p = a[r], a[rank]
            for c in range(col + 1, ncols):
                num = p * row_r[c] - arc * row_p[c]
                assert num % prev == 0
                row_r[c] = num // prev
            row_r[col] = 0
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


def bareiss_rank_mod_p(matrix: Sequence[Sequence[int]], p: int) -> int:
    """Rank over the prime field F_p (entries already reduced to integers)."""
    a = [[x % p for x in row] for row in matrix]
    if not a:
        return 0
    nrows, ncols = len(a), len(a[0])
    rank = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, nrows) if a[r][col]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        inv = pow(a[rank][col], -1, p)
        for r in range(nrows):
            if r != rank and a[r][col]:
                f = a[r][col] * inv % p
                a[r] = [(x - f * y) % p for x, y in zip(a[r], a[rank])]
        rank += 1
    return rank
