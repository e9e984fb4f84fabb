"""Linear combinations of normal words over exact rationals.

Polynomials are the elements of the free L-algebra on x1..xn: finite maps
from normal words to nonzero Fractions.  All coefficient arithmetic is
exact; zero tests are therefore decisions, not approximations.  Values are
immutable and all operations are pure, so concurrent use is safe.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .terms import (
    PREC,
    Context,
    LWord,
    Op,
    count_holes,
    format_lword,
    is_normal,
    l_prec,
    l_succ,
    max_generator_index,
    normalize,
    substitute,
)


class AlphabetMismatchError(ValueError):
    """Operands live over different alphabet sizes."""


def _accumulate(acc: dict, word: LWord, value: Fraction) -> None:
    prev = acc.get(word)
    if prev is None:
        if value:
            acc[word] = value
        return
    total = prev + value
    if total:
        acc[word] = total
    else:
        del acc[word]


class Polynomial:
    """Finite rational combination of normal words over x1..xn.

    Zero coefficients are never stored; the empty combination is the zero
    polynomial.  Iteration and formatting run in descending monomial order
    so that output is reproducible bit for bit.
    """

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Mapping[LWord, Fraction] | Iterable[tuple[LWord, Fraction]] = ()):
        if n < 1:
            raise ValueError("alphabet size must be at least 1")
        pairs = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[LWord, Fraction] = {}
        for word, coeff in pairs:
            if count_holes(word):
                raise ValueError(f"polynomial words may not contain holes: {word}")
            if not is_normal(word):
                raise ValueError(f"polynomial words must be normal: {word}")
            if max_generator_index(word) > n:
                raise AlphabetMismatchError(f"word {word} uses generators beyond x{n}")
            _accumulate(acc, word, Fraction(coeff))
        self.n = n
        self._terms = acc

    @classmethod
    def _raw(cls, n: int, terms: dict[LWord, Fraction]) -> "Polynomial":
        # Internal fast path: caller guarantees normal hole-free words within
        # the alphabet and no zero coefficients.
        p = object.__new__(cls)
        p.n = n
        p._terms = terms
        return p

    @classmethod
    def zero(cls, n: int) -> "Polynomial":
        if n < 1:
            raise ValueError("alphabet size must be at least 1")
        return cls._raw(n, {})

    @classmethod
    def monomial(cls, word: LWord, coeff=1, *, n: int | None = None) -> "Polynomial":
        if n is None:
            n = max(1, max_generator_index(word))
        return cls(n, [(word, Fraction(coeff))])

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def terms(self) -> list[tuple[LWord, Fraction]]:
        """Term list in descending monomial order."""
        return sorted(self._terms.items(), key=lambda kv: kv[0], reverse=True)

    def coefficient(self, word: LWord) -> Fraction:
        return self._terms.get(word, Fraction(0))

    def degrees(self) -> set[int]:
        return {w.degree for w in self._terms}

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    __hash__ = None

    def __add__(self, other: "Polynomial") -> "Polynomial":
        _require_same_alphabet(self, other)
        acc = dict(self._terms)
        for word, coeff in other._terms.items():
            _accumulate(acc, word, coeff)
        return Polynomial._raw(self.n, acc)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        _require_same_alphabet(self, other)
        acc = dict(self._terms)
        for word, coeff in other._terms.items():
            _accumulate(acc, word, -coeff)
        return Polynomial._raw(self.n, acc)

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(self.n, {w: -c for w, c in self._terms.items()})

    def __mul__(self, scalar) -> "Polynomial":
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        a = Fraction(scalar)
        if not a:
            return Polynomial.zero(self.n)
        return Polynomial._raw(self.n, {w: a * c for w, c in self._terms.items()})

    __rmul__ = __mul__

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, (word, coeff) in enumerate(self.terms()):
            sign = "-" if coeff < 0 else "+"
            magnitude = -coeff if coeff < 0 else coeff
            body = format_lword(word) if magnitude == 1 else f"{magnitude}*{format_lword(word)}"
            if i == 0:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"Polynomial(n={self.n}, {str(self)!r})"

    def to_json_dict(self) -> dict:
        """JSON form: terms sorted descending, coefficients as 'p/q' strings."""
        return {
            "n": self.n,
            "terms": [
                {"coeff": str(coeff), "word": format_lword(word)}
                for word, coeff in self.terms()
            ],
        }


def _require_same_alphabet(p: Polynomial, q: Polynomial) -> None:
    if p.n != q.n:
        raise AlphabetMismatchError(f"alphabet sizes differ: {p.n} vs {q.n}")


def mul(p: Polynomial, op: Op, q: Polynomial) -> Polynomial:
    """Bilinear extension of the basis products to polynomials."""
    _require_same_alphabet(p, q)
    prod = l_prec if op is PREC else l_succ
    acc: dict[LWord, Fraction] = {}
    for u, a in p._terms.items():
        for v, b in q._terms.items():
            _accumulate(acc, prod(u, v), a * b)
    return Polynomial._raw(p.n, acc)


def leading(p: Polynomial) -> tuple[LWord, Fraction]:
    """The greatest word of p under the monomial order, with its coefficient."""
    if p.is_zero:
        raise ValueError("the zero polynomial has no leading word")
    word = max(p._terms)
    return word, p._terms[word]


def apply_context(c: Context, p: Polynomial) -> Polynomial:
    """Substitute every word of p into the hole of c and re-normalize."""
    if max_generator_index(c.word) > p.n:
        raise AlphabetMismatchError(f"context {c.word} uses generators beyond x{p.n}")
    acc: dict[LWord, Fraction] = {}
    for u, a in p._terms.items():
        _accumulate(acc, normalize(substitute(c, u)), a)
    return Polynomial._raw(p.n, acc)
