"""Sparse difference polynomials in one difference indeterminate over Q.

The variables are the transforms y0, y1, y2, ... of a single indeterminate y;
the translation sends y_k to y_{k+1} and fixes every rational coefficient.

A :class:`Term` is a power product stored as a sorted tuple of
``(index, exponent)`` pairs, and a :class:`DiffPoly` maps terms to nonzero
``Fraction`` coefficients.  Both are immutable and hashable.

Example::

    >>> p = parse("y0*y1 + y2*y4")
    >>> str(p.shift(1))
    'y1*y2 + y3*y5'
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping

# Variable indices and exponents must fit an unsigned 64-bit word.
MAX_INDEX = 2**64 - 1


class IndexOverflowError(OverflowError):
    """A variable index or exponent left the supported 64-bit range."""


def _check_index(k: int) -> int:
    if k < 0:
        raise ValueError(f"negative variable index {k}")
    if k > MAX_INDEX:
        raise IndexOverflowError(f"variable index {k} exceeds {MAX_INDEX}")
    return k


class Term:
    """A power product ``y_{i1}^{k1} ... y_{im}^{km}`` with ``i1 < ... < im``.

    The empty product is the constant term 1.
    """

    __slots__ = ("_items", "_hash")

    def __init__(self, exponents: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        if isinstance(exponents, Mapping):
            exponents = exponents.items()
        acc: dict[int, int] = {}
        for idx, e in exponents:
            _check_index(idx)
            if e < 0:
                raise ValueError(f"negative exponent {e} on y{idx}")
            if e:
                acc[idx] = acc.get(idx, 0) + e
        for idx, e in acc.items():
            if e > MAX_INDEX:
                raise IndexOverflowError(f"exponent {e} on y{idx} exceeds {MAX_INDEX}")
        self._items = tuple(sorted(acc.items()))
        self._hash = hash(self._items)

    @classmethod
    def _raw(cls, items: tuple[tuple[int, int], ...]) -> Term:
        # items must already be canonical
        t = object.__new__(cls)
        t._items = items
        t._hash = hash(items)
        return t

    @classmethod
    def from_indices(cls, *indices: int) -> Term:
        """Build a term from variable indices listed with multiplicity.

        ``Term.from_indices(0, 0, 3)`` is ``y0^2*y3``.
        """
        items: list[tuple[int, int]] = []
        for i in sorted(indices):
            if items and items[-1][0] == i:
                items[-1] = (i, items[-1][1] + 1)
            else:
                items.append((i, 1))
        if items:
            _check_index(items[0][0])
            _check_index(items[-1][0])
        return cls._raw(tuple(items))

    @property
    def items(self) -> tuple[tuple[int, int], ...]:
        return self._items

    @property
    def degree(self) -> int:
        return sum(e for _, e in self._items)

    @property
    def variables(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self._items)

    @property
    def indices(self) -> tuple[int, ...]:
        """Variable indices with multiplicity, in increasing order."""
        return tuple(i for i, e in self._items for _ in range(e))

    @property
    def order(self) -> int:
        """Largest variable index (0 for the constant term)."""
        return self._items[-1][0] if self._items else 0

    @property
    def eord(self) -> int:
        if not self._items:
            return 0
        return self._items[-1][0] - self._items[0][0]

    def is_one(self) -> bool:
        return not self._items

    def shift(self, k: int) -> Term:
        if k < 0:
            raise ValueError("shift amount must be nonnegative")
        if not k or not self._items:
            return self
        if self._items[-1][0] + k > MAX_INDEX:
            raise IndexOverflowError(
                f"shifting y{self._items[-1][0]} by {k} exceeds {MAX_INDEX}")
        return Term._raw(tuple((i + k, e) for i, e in self._items))

    def __mul__(self, other: Term) -> Term:
        if not isinstance(other, Term):
            return NotImplemented
        if not self._items:
            return other
        if not other._items:
            return self
        return Term(self._items + other._items)

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        """Graded order, ties broken lexicographically on :attr:`indices`."""
        return (self.degree, self.indices)

    def __lt__(self, other: Term) -> bool:
        return self.sort_key() < other.sort_key()

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Term) and self._items == other._items

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        if not self._items:
            return "1"
        return "*".join(f"y{i}" if e == 1 else f"y{i}^{e}" for i, e in self._items)

    def __repr__(self) -> str:
        return f"Term({str(self)!r})"


ONE = Term()


def degree(t: Term) -> int:
    return t.degree


def eord(t: Term) -> int:
    """Effective order: largest minus smallest variable index (0 for constants)."""
    return t.eord


_FRACTION_ONE = Fraction(1)


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if c == 1 and type(c) is int:
        return _FRACTION_ONE
    if isinstance(c, (int, str)):
        return Fraction(c)
    raise TypeError(f"coefficients must be exact rationals, got {type(c).__name__}")


class DiffPoly:
    """A finite sum of terms with nonzero rational coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Term, object] | Iterable[tuple[Term, object]] = ()):
        if isinstance(terms, (dict, Mapping)):
            terms = terms.items()
        acc: dict[Term, Fraction] = {}
        for t, c in terms:
            if not isinstance(t, Term):
                raise TypeError(f"expected Term, got {type(t).__name__}")
            c = _as_fraction(c)
            if not c:
                continue
            if t in acc:
                c += acc[t]
                if not c:
                    del acc[t]
                    continue
            acc[t] = c
        self._terms = acc
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[Term, Fraction]) -> DiffPoly:
        p = object.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls) -> DiffPoly:
        return cls._raw({})

    @classmethod
    def constant(cls, c) -> DiffPoly:
        return cls({ONE: c})

    @classmethod
    def var(cls, k: int) -> DiffPoly:
        return cls._raw({Term({k: 1}): Fraction(1)})

    @classmethod
    def monomial(cls, *indices: int, coef=1) -> DiffPoly:
        c = _as_fraction(coef)
        return cls._raw({Term.from_indices(*indices): c} if c else {})

    # -- inspection ---------------------------------------------------------

    def terms(self) -> list[tuple[Term, Fraction]]:
        """(term, coefficient) pairs in canonical order."""
        return sorted(self._terms.items(), key=lambda tc: tc[0].sort_key())

    def support(self) -> list[Term]:
        return sorted(self._terms, key=Term.sort_key)

    def coefficient(self, t: Term) -> Fraction:
        return self._terms.get(t, Fraction(0))

    def __contains__(self, t: Term) -> bool:
        return t in self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[Term]:
        return iter(self.support())

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((t.degree for t in self._terms), default=-1)

    @property
    def min_degree(self) -> int:
        return min((t.degree for t in self._terms), default=-1)

    def is_homogeneous(self, d: int | None = None) -> bool:
        degs = {t.degree for t in self._terms}
        if d is None:
            return len(degs) <= 1
        return degs <= {d}

    def variables(self) -> list[int]:
        return sorted({i for t in self._terms for i in t.variables})

    @property
    def max_index(self) -> int:
        return max((t.order for t in self._terms), default=0)

    def homogeneous_components(self) -> dict[int, DiffPoly]:
        out: dict[int, dict[Term, Fraction]] = {}
        for t, c in self._terms.items():
            out.setdefault(t.degree, {})[t] = c
        return {d: DiffPoly._raw(ts) for d, ts in sorted(out.items())}

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> DiffPoly:
        if isinstance(other, DiffPoly):
            return other
        if isinstance(other, Term):
            return DiffPoly._raw({other: Fraction(1)})
        if isinstance(other, (int, Fraction)):
            return DiffPoly.constant(other)
        return NotImplemented

    def __add__(self, other) -> DiffPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self._terms)
        for t, c in other._terms.items():
            if t in acc:
                c += acc[t]
                if not c:
                    del acc[t]
                    continue
            acc[t] = c
        return DiffPoly._raw(acc)

    __radd__ = __add__

    def __neg__(self) -> DiffPoly:
        return DiffPoly._raw({t: -c for t, c in self._terms.items()})

    def __sub__(self, other) -> DiffPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> DiffPoly:
        return (-self) + other

    def __mul__(self, other) -> DiffPoly:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc: dict[Term, Fraction] = {}
        for t1, c1 in self._terms.items():
            for t2, c2 in other._terms.items():
                t = t1 * t2
                c = c1 * c2
                if t in acc:
                    c += acc[t]
                    if not c:
                        del acc[t]
                        continue
                acc[t] = c
        return DiffPoly._raw(acc)

    __rmul__ = __mul__

    def scale(self, c) -> DiffPoly:
        c = _as_fraction(c)
        if not c:
            return DiffPoly.zero()
        return DiffPoly._raw({t: c * v for t, v in self._terms.items()})

    def shift(self, k: int) -> DiffPoly:
        """Apply the translation ``k`` times (y_i -> y_{i+k})."""
        if k == 0:
            return self
        return DiffPoly._raw({t.shift(k): c for t, c in self._terms.items()})

    # -- identity -----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, DiffPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == DiffPoly.constant(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def sort_key(self):
        return tuple((t.sort_key(), c) for t, c in self.terms())

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"DiffPoly({format_poly(self)!r})"


def shift(p: DiffPoly, k: int) -> DiffPoly:
    return p.shift(k)


def add(p: DiffPoly, q: DiffPoly) -> DiffPoly:
    return p + q


def mul(p: DiffPoly, q: DiffPoly) -> DiffPoly:
    return p * q


def scale(c, p: DiffPoly) -> DiffPoly:
    return p.scale(c)


def _format_coef(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_poly(p: DiffPoly) -> str:
    """Render ``p`` in the text grammar, terms in graded-lex order."""
    if not p:
        return "0"
    out = []
    for n, (t, c) in enumerate(p.terms()):
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if t.is_one():
            body = _format_coef(a)
        elif a == 1:
            body = str(t)
        else:
            body = f"{_format_coef(a)}*{t}"
        if n == 0:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


class ParseError(ValueError):
    """Malformed polynomial text; ``offset`` is the byte position of the problem."""

    def __init__(self, message: str, offset: int, expected: str | None = None):
        self.offset = offset
        self.expected = expected
        detail = f" (expected {expected})" if expected else ""
        super().__init__(f"{message} at offset {offset}{detail}")


class _Parser:
    def __init__(self, text: str):
        try:
            text.encode("ascii")
        except UnicodeEncodeError as exc:
            raise ParseError("non-ASCII character", exc.start) from None
        self.s = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.s) and self.s[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.s[self.pos] if self.pos < len(self.s) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            raise ParseError(self._found(), self.pos, repr(ch))
        self.pos += 1

    def _found(self) -> str:
        if self.pos >= len(self.s):
            return "unexpected end of input"
        return f"unexpected {self.s[self.pos]!r}"

    def integer(self, what: str) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.s) and self.s[self.pos] in "0123456789":
            self.pos += 1
        if start == self.pos:
            raise ParseError(self._found(), self.pos, what)
        return int(self.s[start:self.pos])

    def poly(self) -> DiffPoly:
        acc: dict[Term, Fraction] = {}
        sign = 1
        if self.peek() in "+-" and self.peek():
            sign = -1 if self.s[self.pos] == "-" else 1
            self.pos += 1
        while True:
            t, c = self.term()
            acc[t] = acc.get(t, 0) + sign * c
            ch = self.peek()
            if not ch:
                break
            if ch not in "+-":
                raise ParseError(self._found(), self.pos, "'+', '-' or end of input")
            sign = -1 if ch == "-" else 1
            self.pos += 1
        return DiffPoly(acc)

    def term(self) -> tuple[Term, Fraction]:
        ch = self.peek()
        if ch.isdigit():
            coef = Fraction(self.integer("coefficient"))
            if self.peek() == "/":
                self.pos += 1
                at = self.pos
                den = self.integer("denominator")
                if den == 0:
                    raise ParseError("zero denominator", at)
                coef /= den
            if self.peek() != "*":
                return ONE, coef
            self.pos += 1
            return self.factors(), coef
        if ch == "y":
            return self.factors(), Fraction(1)
        raise ParseError(self._found(), self.pos, "coefficient or 'y'")

    def factors(self) -> Term:
        pairs = [self.factor()]
        while self.peek() == "*":
            self.pos += 1
            pairs.append(self.factor())
        return Term(pairs)

    def factor(self) -> tuple[int, int]:
        self.expect("y")
        if self.peek() == "-":
            raise ParseError("negative variable index", self.pos)
        idx = self.integer("variable index")
        if idx > MAX_INDEX:
            raise IndexOverflowError(f"variable index {idx} exceeds {MAX_INDEX}")
        exp = 1
        if self.peek() == "^":
            self.pos += 1
            exp = self.integer("exponent")
        return idx, exp


def parse(text: str) -> DiffPoly:
    """Parse the polynomial grammar, e.g. ``"3/2*y1^2 - y0"``."""
    return _Parser(text).poly()
