"""Words of the free L-algebra on a finite ordered alphabet.

An L-algebra carries two bilinear products, written ``<`` and ``>`` in text
form, subject to the entanglement identity (x > y) < z = x > (y < z).  The
free L-algebra on x1..xn has a basis of *normal* words: binary trees in
which the left factor of a ``<`` node is never itself ``>``-topped.  This
module provides the word type, the basis products, the monomial order used
by the rewrite engine, hole contexts, and plain-text parsing/formatting.

The expression grammar is::

    word      := generator | "(" word op word ")"
    op        := "<" | ">"
    generator := "x" digits

with insignificant whitespace and every application fully parenthesized.
Formatting is the exact inverse of parsing (single spaces around operators).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from functools import lru_cache


class Op(IntEnum):
    """The two binary operations; PREC ranks above SUCC in the monomial order."""

    SUCC = 1
    PREC = 2

    @property
    def symbol(self) -> str:
        return "<" if self is Op.PREC else ">"


SUCC = Op.SUCC
PREC = Op.PREC

_HOLE_INDEX = 0


class ParseError(ValueError):
    """Malformed expression text; carries the offending character offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at offset {position})")
        self.position = position


class LWord:
    """An immutable binary tree over the alphabet; leaves are generators.

    Words are interned: structurally identical words are always the same
    object, so equality and hashing are identity based and O(1).  Use the
    module factories ``generator``, ``hole`` and ``node`` (or the products
    ``l_succ``/``l_prec``) to build words; never call the class directly.

    The comparison operators implement the monomial order on normal words:
    degree decides first, composite words of equal degree compare by top
    operation (PREC above SUCC) and then by left and right subterm, and
    generators compare by index.
    """

    __slots__ = ("op", "left", "right", "index", "degree")

    def __init__(self, op, left, right, index, degree):
        self.op = op
        self.left = left
        self.right = right
        self.index = index
        self.degree = degree

    @property
    def is_leaf(self) -> bool:
        return self.op is None

    @property
    def is_hole(self) -> bool:
        return self.index == _HOLE_INDEX

    def __lt__(self, other: "LWord") -> bool:
        return compare(self, other) < 0

    def __le__(self, other: "LWord") -> bool:
        return compare(self, other) <= 0

    def __gt__(self, other: "LWord") -> bool:
        return compare(self, other) > 0

    def __ge__(self, other: "LWord") -> bool:
        return compare(self, other) >= 0

    def __str__(self) -> str:
        return format_lword(self)

    def __repr__(self) -> str:
        return f"LWord({format_lword(self)!r})"

    # Interning makes copies pointless; pickling goes back through the
    # factories so identities survive a round trip.
    def __copy__(self):
        return self

    def __deepcopy__(self, memo):
        return self

    def __reduce__(self):
        if self.op is None:
            return (_leaf, (self.index,))
        return (node, (self.op, self.left, self.right))


_LEAF_CACHE: dict[int, LWord] = {}
_NODE_CACHE: dict[tuple[Op, LWord, LWord], LWord] = {}


def _leaf(index: int) -> LWord:
    w = _LEAF_CACHE.get(index)
    if w is None:
        w = LWord(None, None, None, index, 1)
        _LEAF_CACHE[index] = w
    return w


def generator(index: int) -> LWord:
    """The degree-1 word x<index>; indexes are 1-based."""
    if not isinstance(index, int) or index < 1:
        raise ValueError(f"generator index must be a positive integer, got {index!r}")
    return _leaf(index)


def hole() -> LWord:
    """The distinguished hole leaf used by contexts, printed ``*``."""
    return _leaf(_HOLE_INDEX)


def node(op: Op, left: LWord, right: LWord) -> LWord:
    """Raw tree constructor; does not re-express anything in the basis."""
    key = (op, left, right)
    w = _NODE_CACHE.get(key)
    if w is None:
        w = LWord(op, left, right, None, left.degree + right.degree)
        _NODE_CACHE[key] = w
    return w


def compare(u: LWord, v: LWord) -> int:
    """Monomial order on normal words: -1, 0 or 1.

    Weight comparison is lexicographic in (degree, top operation, left
    subterm, right subterm) with PREC above SUCC; two generators compare by
    index.  A generator never ties a composite word on degree, so the two
    weight shapes never collide.
    """
    if u is v:
        return 0
    if u.degree != v.degree:
        return -1 if u.degree < v.degree else 1
    if u.op is None:
        return -1 if u.index < v.index else 1
    if u.op is not v.op:
        return -1 if u.op < v.op else 1
    c = compare(u.left, v.left)
    if c:
        return c
    return compare(u.right, v.right)


def is_normal(u: LWord) -> bool:
    """True when the word lies in the normal-word basis.

    Leaves are normal, u > v is normal when both factors are, and u < v
    additionally requires the left factor not to be SUCC-topped.  Hole
    leaves are treated like generators.
    """
    if u.op is None:
        return True
    if not (is_normal(u.left) and is_normal(u.right)):
        return False
    return u.op is SUCC or u.left.op is not SUCC


def l_succ(u: LWord, v: LWord) -> LWord:
    """Product u > v of normal words; always lands in the basis."""
    return node(SUCC, u, v)


def l_prec(u: LWord, v: LWord) -> LWord:
    """Product u < v of normal words, re-expressed in the basis.

    A SUCC-topped left factor entangles: (u1 > u2) < v = u1 > (u2 < v),
    recursively, so the result is again a normal word of degree |u| + |v|.
    """
    if u.op is SUCC:
        return node(SUCC, u.left, l_prec(u.right, v))
    return node(PREC, u, v)


def normalize(u: LWord) -> LWord:
    """Re-express an arbitrary word in the normal-word basis, bottom up.

    Children are normalized first because the basis products require normal
    arguments.  Idempotent and degree preserving.
    """
    if u.op is None:
        return u
    left = normalize(u.left)
    right = normalize(u.right)
    return l_succ(left, right) if u.op is SUCC else l_prec(left, right)


def count_holes(u: LWord) -> int:
    if u.op is None:
        return 1 if u.index == _HOLE_INDEX else 0
    return count_holes(u.left) + count_holes(u.right)


def max_generator_index(u: LWord) -> int:
    """Largest generator index occurring in the word (0 for a bare hole)."""
    if u.op is None:
        return u.index
    return max(max_generator_index(u.left), max_generator_index(u.right))


@dataclass(frozen=True)
class Context:
    """A word over the alphabet plus exactly one hole leaf."""

    word: LWord

    def __post_init__(self):
        if count_holes(self.word) != 1:
            raise ValueError("a context must contain exactly one hole")


def substitute(c: Context, u: LWord) -> LWord:
    """Splice u into the hole of c.  The result need not be normal."""
    return _splice(c.word, u)


def _splice(w: LWord, u: LWord) -> LWord:
    if w.op is None:
        return u if w.index == _HOLE_INDEX else w
    if count_holes(w.left):
        return node(w.op, _splice(w.left, u), w.right)
    return node(w.op, w.left, _splice(w.right, u))


@lru_cache(maxsize=None)
def _count_pair(m: int, n: int) -> tuple[int, int]:
    # (all normal words, normal words not SUCC-topped) of degree m.
    if m == 1:
        return (n, n)
    succ_topped = 0
    prec_topped = 0
    for i in range(1, m):
        ai, bi = _count_pair(i, n)
        aj = _count_pair(m - i, n)[0]
        succ_topped += ai * aj
        prec_topped += bi * aj
    b = prec_topped
    return (succ_topped + b, b)


def count_normal_lwords(m: int, n: int) -> int:
    """Number of normal words of degree m over n generators, by recursion.

    Splits on the top operation: SUCC-topped words are arbitrary pairs,
    PREC-topped words need a non-SUCC-topped left factor.
    """
    if m < 1 or n < 1:
        raise ValueError("degree and alphabet size must be at least 1")
    return _count_pair(m, n)[0]


_TOKEN_SINGLE = {"(": "(", ")": ")", "<": "op", ">": "op"}


def _tokenize(text: str) -> list[tuple[str, object, int]]:
    tokens = []
    i = 0
    length = len(text)
    while i < length:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _TOKEN_SINGLE:
            kind = _TOKEN_SINGLE[ch]
            tokens.append((kind, ch, i))
            i += 1
            continue
        if ch == "x":
            j = i + 1
            while j < length and text[j].isdigit():
                j += 1
            if j == i + 1:
                raise ParseError("expected digits after 'x'", i)
            tokens.append(("gen", int(text[i + 1 : j]), i))
            i = j
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    return tokens


def parse_lword(text: str, n: int | None = None) -> LWord:
    """Parse expression text into a word.

    When ``n`` is given, generator indexes outside [1, n] are rejected.
    Raises ParseError with the character offset on any malformed input.
    """
    tokens = _tokenize(text)
    pos = 0

    def error_at(message, fallback=None):
        offset = tokens[pos][2] if pos < len(tokens) else (fallback if fallback is not None else len(text))
        raise ParseError(message, offset)

    def parse_word():
        nonlocal pos
        if pos >= len(tokens):
            error_at("unexpected end of input")
        kind, value, offset = tokens[pos]
        if kind == "gen":
            pos += 1
            if value < 1:
                raise ParseError("generator index must be at least 1", offset)
            if n is not None and value > n:
                raise ParseError(f"generator index {value} exceeds alphabet size {n}", offset)
            return _leaf(value)
        if kind == "(":
            pos += 1
            left = parse_word()
            if pos >= len(tokens) or tokens[pos][0] != "op":
                error_at("expected operator '<' or '>'")
            op = PREC if tokens[pos][1] == "<" else SUCC
            pos += 1
            right = parse_word()
            if pos >= len(tokens) or tokens[pos][0] != ")":
                error_at("expected ')'")
            pos += 1
            return node(op, left, right)
        error_at("expected a generator or '('")

    word = parse_word()
    if pos != len(tokens):
        raise ParseError("trailing input after expression", tokens[pos][2])
    return word


def format_lword(u: LWord) -> str:
    """Canonical text form: fully parenthesized, single spaces around ops."""
    if u.op is None:
        return "*" if u.index == _HOLE_INDEX else f"x{u.index}"
    return f"({format_lword(u.left)} {u.op.symbol} {format_lword(u.right)})"
