"""Brute-force cross-checks: exhaustive enumeration and exact rank computation.

This module recomputes the dimension of each graded component of the
dendriform quotient without the rewrite engine: it enumerates all normal
words of a degree, spans the degree piece of the relation ideal by
instantiating the defining relations inside every single-hole context, and
subtracts the exact rank of that row space.  Everything is exact rational
arithmetic; ranks are certainties, not estimates.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product

from .poly import Polynomial, apply_context
from .rewrite import RuleId, rule_polynomial
from .terms import PREC, SUCC, Context, LWord, generator, hole, node

_BASE_RULES = (RuleId.F1, RuleId.F2)


@lru_cache(maxsize=None)
def _normal_words(m: int, n: int) -> tuple[LWord, ...]:
    if m == 1:
        return tuple(generator(i) for i in range(1, n + 1))
    words = []
    for i in range(1, m):
        lefts = _normal_words(i, n)
        rights = _normal_words(m - i, n)
        words.extend(node(SUCC, u, v) for u in lefts for v in rights)
        words.extend(node(PREC, u, v) for u in _nonsucc_words(i, n) for v in rights)
    return tuple(words)


@lru_cache(maxsize=None)
def _nonsucc_words(m: int, n: int) -> tuple[LWord, ...]:
    if m == 1:
        return tuple(generator(i) for i in range(1, n + 1))
    return tuple(
        node(PREC, u, v)
        for i in range(1, m)
        for u in _nonsucc_words(i, n)
        for v in _normal_words(m - i, n)
    )


class EnumerationIndex:
    """All normal words of one degree, strictly descending, with positions."""

    __slots__ = ("degree", "n", "words", "position")

    def __init__(self, degree: int, n: int, words: tuple[LWord, ...]):
        self.degree = degree
        self.n = n
        self.words = words
        self.position = {w: i for i, w in enumerate(words)}

    def __repr__(self) -> str:
        return f"EnumerationIndex(degree={self.degree}, n={self.n}, {len(self.words)} words)"


@lru_cache(maxsize=None)
def enumerate_normal_lwords(m: int, n: int) -> EnumerationIndex:
    """Exhaustive duplicate-free index of the degree-m normal words."""
    if m < 1 or n < 1:
        raise ValueError("degree and alphabet size must be at least 1")
    return EnumerationIndex(m, n, tuple(sorted(_normal_words(m, n), reverse=True)))


@lru_cache(maxsize=None)
def enumerate_dd_words(m: int, n: int) -> tuple[LWord, ...]:
    """All normal DD-words of degree m, descending under the monomial order."""
    if m < 1 or n < 1:
        raise ValueError("degree and alphabet size must be at least 1")
    return tuple(sorted(_dd_words(m, n), reverse=True))


@lru_cache(maxsize=None)
def _dd_words(m: int, n: int) -> tuple[LWord, ...]:
    leaves = tuple(generator(i) for i in range(1, n + 1))
    if m == 1:
        return leaves
    words = []
    tails = _dd_words(m - 1, n)
    for x in leaves:
        words.extend(node(PREC, x, w) for w in tails)
        words.extend(node(SUCC, x, w) for w in tails)
    for i in range(1, m - 1):
        firsts = _dd_words(i, n)
        seconds = _dd_words(m - 1 - i, n)
        for x in leaves:
            words.extend(node(SUCC, node(SUCC, x, w1), w2) for w1 in firsts for w2 in seconds)
    return tuple(words)


@lru_cache(maxsize=None)
def _all_trees(m: int, n: int) -> tuple[LWord, ...]:
    if m == 1:
        return tuple(generator(i) for i in range(1, n + 1))
    return tuple(
        node(op, u, v)
        for i in range(1, m)
        for op in (PREC, SUCC)
        for u in _all_trees(i, n)
        for v in _all_trees(m - i, n)
    )


@lru_cache(maxsize=None)
def _context_words(h: int, n: int) -> tuple[LWord, ...]:
    if h == 1:
        return (hole(),)
    words = []
    for i in range(1, h):
        for op in (PREC, SUCC):
            words.extend(node(op, c, w) for c in _context_words(i, n) for w in _all_trees(h - i, n))
            words.extend(node(op, w, c) for w in _all_trees(i, n) for c in _context_words(h - i, n))
    return tuple(words)


@lru_cache(maxsize=None)
def enumerate_contexts(h: int, n: int) -> tuple[Context, ...]:
    """Every single-hole word with h leaves (the hole counts as a leaf).

    Contexts are arbitrary trees, not just normal ones; substitution results
    are re-normalized downstream, and the larger family makes ideal-span
    arguments direct.
    """
    if h < 1 or n < 1:
        raise ValueError("context degree and alphabet size must be at least 1")
    return tuple(Context(w) for w in _context_words(h, n))


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


class RelationMatrix:
    """Degree-homogeneous rows spanning the degree-m piece of the ideal.

    One row per (rule, bindings, context) triple; every row is the
    coordinate vector, over the normal-word index, of the context-embedded
    rule instance.
    """

    __slots__ = ("degree", "n", "include_f3", "index", "rows", "_pivots")

    def __init__(self, degree, n, include_f3, index, rows):
        self.degree = degree
        self.n = n
        self.include_f3 = include_f3
        self.index = index
        self.rows = rows
        self._pivots = None

    @property
    def pivots(self) -> dict[int, dict[int, Fraction]]:
        if self._pivots is None:
            self._pivots = row_echelon(self.rows)
        return self._pivots

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def __repr__(self) -> str:
        return (
            f"RelationMatrix(degree={self.degree}, n={self.n}, rows={len(self.rows)},"
            f" cols={len(self.index.words)})"
        )


def build_relation_matrix(m: int, n: int, include_f3: bool = False) -> RelationMatrix:
    """Rows of the degree-m relation module over the normal-word index.

    Bindings run over all normal words with total degree d, contexts over
    all single-hole words with m - d + 1 leaves, for every d the rule
    admits.  F3 rows are consequences of the F1/F2 rows and are included
    only on request (their presence never changes the rank).
    """
    if m < 3:
        raise ValueError("there are no relations below degree 3")
    index = enumerate_normal_lwords(m, n)
    rules = _BASE_RULES + ((RuleId.F3,) if include_f3 else ())
    rows = []
    for rule in rules:
        arity = rule.arity
        for inst_degree in range(arity, m + 1):
            contexts = enumerate_contexts(m - inst_degree + 1, n)
            for degrees in _compositions(inst_degree, arity):
                pools = [_normal_words(d, n) for d in degrees]
                for bindings in product(*pools):
                    relation = rule_polynomial(rule, bindings, n=n)
                    for c in contexts:
                        embedded = apply_context(c, relation)
                        rows.append({index.position[w]: a for w, a in embedded._terms.items()})
    return RelationMatrix(m, n, include_f3, index, tuple(rows))


def row_echelon(rows) -> dict[int, dict[int, Fraction]]:
    """Sparse Gaussian elimination; pivot rows keyed by leading column.

    Columns follow the descending word index, so the leading column of a
    row is its greatest monomial.  Pivot rows are scaled to a unit leading
    coefficient.  Exact, deterministic, no pivoting heuristics.
    """
    pivots: dict[int, dict[int, Fraction]] = {}
    for row in rows:
        r = reduce_vector(row, pivots)
        if r:
            lead = min(r)
            inv = 1 / r[lead]
            pivots[lead] = {c: v * inv for c, v in r.items()}
    return pivots


def reduce_vector(vec, pivots) -> dict[int, Fraction]:
    """Remainder of a sparse vector after elimination against pivot rows."""
    r = {c: v for c, v in vec.items() if v}
    while r:
        lead = min(r)
        piv = pivots.get(lead)
        if piv is None:
            break
        factor = r[lead]
        for c, v in piv.items():
            nv = r.get(c, 0) - factor * v
            if nv:
                r[c] = nv
            elif c in r:
                del r[c]
    return r


def coordinates(p: Polynomial, index: EnumerationIndex) -> dict[int, Fraction]:
    """Sparse coordinate vector of a degree-homogeneous polynomial."""
    vec = {}
    for w, a in p._terms.items():
        pos = index.position.get(w)
        if pos is None:
            raise ValueError(f"word {w} is not in the degree-{index.degree} index")
        vec[pos] = a
    return vec


def vector_in_row_space(matrix: RelationMatrix, vec) -> bool:
    return not reduce_vector(vec, matrix.pivots)


def quotient_dim(m: int, n: int, include_f3: bool = False) -> int:
    """Dimension of the degree-m component of the quotient algebra.

    Word count minus relation rank; below degree 3 there are no relations
    and the normal words are already a basis.
    """
    if m < 1 or n < 1:
        raise ValueError("degree and alphabet size must be at least 1")
    n_words = len(enumerate_normal_lwords(m, n).words)
    if m < 3:
        return n_words
    return n_words - build_relation_matrix(m, n, include_f3).rank
