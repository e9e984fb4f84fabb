"""Rewriting of normal words onto the dendriform basis.

Three rules, each oriented so the left side is the rule's greatest word
under the monomial order:

    F1:   (x < y) < z        ->  x < (y < z) + x < (y > z)
    F2:   (x < y) > z        ->  x > (y > z) - (x > y) > z
    F3:   ((x > y) > z) > v  ->  (x > y) > (z > v) - (x > (y < z)) > v

A normal word containing no occurrence of a left-side shape is a normal
DD-word; those words form a basis of the free dendriform algebra, and
``normal_form`` rewrites any polynomial onto it.  Every rewrite step
replaces one word by a combination of strictly smaller words (checked at
each step), so reduction terminates; confluence is verified exhaustively
at bounded degree by the companion basis-check module.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .poly import Polynomial, _accumulate
from .terms import (
    PREC,
    SUCC,
    Context,
    LWord,
    compare,
    hole,
    is_normal,
    l_prec,
    l_succ,
    max_generator_index,
    node,
    normalize,
)


class RuleId(Enum):
    F1 = "F1"
    F2 = "F2"
    F3 = "F3"

    @property
    def arity(self) -> int:
        return 4 if self is RuleId.F3 else 3


# A rewrite target never lies on the dendriform basis and vice versa;
# ``is_dd_normal`` is the redex-free predicate in closed form.
def is_dd_normal(u: LWord) -> bool:
    """Whether a normal word already lies on the dendriform basis.

    Basis words are: a generator; x < w or x > w with x a generator; or
    (x > w1) > w2 with x a generator and w1, w2 basis words.
    """
    if u.op is None:
        return True
    if u.op is PREC:
        return u.left.op is None and is_dd_normal(u.right)
    if u.left.op is None:
        return is_dd_normal(u.right)
    left = u.left
    return (
        left.op is SUCC
        and left.left.op is None
        and is_dd_normal(left.right)
        and is_dd_normal(u.right)
    )


@dataclass(frozen=True)
class Redex:
    """One rewritable occurrence: rule, root-relative path, matched subterms."""

    rule: RuleId
    path: tuple[str, ...]  # "L"/"R" steps from the root
    bindings: tuple[LWord, ...]


class StaleRedexError(ValueError):
    """The word does not carry the claimed redex at the claimed path."""


def match_rule_at(u: LWord):
    """Rule and bindings whose left side matches at the root of u, or None."""
    if u.op is PREC:
        left = u.left
        if left.op is PREC:
            return RuleId.F1, (left.left, left.right, u.right)
        return None
    if u.op is SUCC:
        left = u.left
        if left.op is PREC:
            return RuleId.F2, (left.left, left.right, u.right)
        if left.op is SUCC and left.left.op is SUCC:
            inner = left.left
            return RuleId.F3, (inner.left, inner.right, left.right, u.right)
    return None


def find_redexes(u: LWord) -> list[Redex]:
    """All redexes of a normal word, in preorder (root, then left, then right)."""
    out: list[Redex] = []
    _collect_redexes(u, (), out)
    return out


def _collect_redexes(u: LWord, path: tuple[str, ...], out: list[Redex]) -> None:
    matched = match_rule_at(u)
    if matched is not None:
        out.append(Redex(matched[0], path, matched[1]))
    if u.op is not None:
        _collect_redexes(u.left, path + ("L",), out)
        _collect_redexes(u.right, path + ("R",), out)


def first_redex(u: LWord) -> Redex | None:
    """The preorder-first redex of u, or None when u is DD-normal."""
    matched = match_rule_at(u)
    if matched is not None:
        return Redex(matched[0], (), matched[1])
    if u.op is None:
        return None
    r = first_redex(u.left)
    if r is not None:
        return Redex(r.rule, ("L",) + r.path, r.bindings)
    r = first_redex(u.right)
    if r is not None:
        return Redex(r.rule, ("R",) + r.path, r.bindings)
    return None


def subterm_at(u: LWord, path: tuple[str, ...]) -> LWord:
    for step in path:
        if u.op is None:
            raise StaleRedexError(f"path {''.join(path)!r} leaves the word")
        u = u.left if step == "L" else u.right
    return u


def context_at(u: LWord, path: tuple[str, ...]) -> Context:
    """The context obtained by carving out the subterm at the given path."""
    return Context(_replace_at(u, path, hole(), 0))


def _replace_at(u: LWord, path: tuple[str, ...], w: LWord, i: int) -> LWord:
    if i == len(path):
        return w
    if u.op is None:
        raise StaleRedexError(f"path {''.join(path)!r} leaves the word")
    if path[i] == "L":
        return node(u.op, _replace_at(u.left, path, w, i + 1), u.right)
    return node(u.op, u.left, _replace_at(u.right, path, w, i + 1))


_ONE = Fraction(1)
_TAIL_CACHE: dict[tuple[RuleId, tuple[LWord, ...]], tuple[LWord, dict[LWord, Fraction]]] = {}


def _rule_parts(rule: RuleId, bindings: tuple[LWord, ...]):
    """Left-side word and oriented right side at concrete normal bindings.

    Products are evaluated through the basis products, so every term is a
    single normal word.
    """
    cached = _TAIL_CACHE.get((rule, bindings))
    if cached is not None:
        return cached
    if rule is RuleId.F1:
        x, y, z = bindings
        lead = l_prec(l_prec(x, y), z)
        tail = {}
        _accumulate(tail, l_prec(x, l_prec(y, z)), _ONE)
        _accumulate(tail, l_prec(x, l_succ(y, z)), _ONE)
    elif rule is RuleId.F2:
        x, y, z = bindings
        lead = l_succ(l_prec(x, y), z)
        tail = {}
        _accumulate(tail, l_succ(x, l_succ(y, z)), _ONE)
        _accumulate(tail, l_succ(l_succ(x, y), z), -_ONE)
    else:
        x, y, z, v = bindings
        lead = l_succ(l_succ(l_succ(x, y), z), v)
        tail = {}
        _accumulate(tail, l_succ(l_succ(x, y), l_succ(z, v)), _ONE)
        _accumulate(tail, l_succ(l_succ(x, l_prec(y, z)), v), -_ONE)
    result = (lead, tail)
    _TAIL_CACHE[(rule, bindings)] = result
    return result


def rule_polynomial(rule: RuleId, bindings, *, n: int | None = None) -> Polynomial:
    """The rule relation at concrete bindings: left side minus right side.

    Instances rewrite to zero; they generate the ideal presenting the free
    dendriform algebra.  The alphabet size defaults to the largest index
    appearing in the bindings.
    """
    bindings = tuple(bindings)
    if len(bindings) != rule.arity:
        raise ValueError(f"{rule.name} takes {rule.arity} bindings, got {len(bindings)}")
    for b in bindings:
        if not is_normal(b):
            raise ValueError(f"rule bindings must be normal words: {b}")
    lead, tail = _rule_parts(rule, bindings)
    terms = {lead: _ONE}
    for w, c in tail.items():
        _accumulate(terms, w, -c)
    if n is None:
        n = max(1, max(max_generator_index(b) for b in bindings))
    return Polynomial._raw(n, terms)


def _step_terms(u: LWord, redex: Redex) -> dict[LWord, Fraction]:
    target = subterm_at(u, redex.path)
    matched = match_rule_at(target)
    if matched is None or matched[0] is not redex.rule or matched[1] != redex.bindings:
        raise StaleRedexError(f"no {redex.rule.name} redex with those bindings at path {''.join(redex.path)!r}")
    tail = _rule_parts(redex.rule, redex.bindings)[1]
    out: dict[LWord, Fraction] = {}
    for w, c in tail.items():
        replaced = normalize(_replace_at(u, redex.path, w, 0))
        assert compare(replaced, u) < 0, "rewrite step failed to descend"
        _accumulate(out, replaced, c)
    return out


def rewrite_step(u: LWord, redex: Redex, *, n: int | None = None) -> Polynomial:
    """Rewrite one occurrence: u minus the context-embedded rule instance.

    Every word of the result is strictly smaller than u, which is asserted
    per produced term.
    """
    terms = _step_terms(u, redex)
    if n is None:
        n = max(1, max_generator_index(u))
    return Polynomial._raw(n, dict(terms))


_NF_CACHE: dict[LWord, dict[LWord, Fraction]] = {}


def _nf_word(u: LWord) -> dict[LWord, Fraction]:
    res = _NF_CACHE.get(u)
    if res is not None:
        return res
    redex = first_redex(u)
    if redex is None:
        res = {u: _ONE}
    else:
        acc: dict[LWord, Fraction] = {}
        for w, c in _step_terms(u, redex).items():
            for w2, c2 in _nf_word(w).items():
                _accumulate(acc, w2, c * c2)
        res = acc
    _NF_CACHE[u] = res
    return res


# The canonical form of a polynomial is a combination of normal DD-words,
# so the alias names the contract of ``normal_form``.
DDNormalForm = Polynomial


def normal_form(p: Polynomial) -> Polynomial:
    """Canonical form of p modulo the three rules.

    Each word is reduced at its preorder-first redex until redex free, with
    per-word results shared across the whole polynomial; the extension to
    polynomials is linear.  The result is strategy independent (verified
    exhaustively at desk scale by the basis checks) and preserves the
    degree decomposition.
    """
    acc: dict[LWord, Fraction] = {}
    for u, a in p._terms.items():
        for w, c in _nf_word(u).items():
            _accumulate(acc, w, a * c)
    return Polynomial._raw(p.n, acc)


def max_reducible_word(p: Polynomial) -> LWord | None:
    """Greatest word of p carrying a redex.

    Under a greatest-first strategy this is the first word rewritten, and
    every later rewrite happens strictly below it, so it bounds the whole
    reduction trace of p.
    """
    best = None
    for w in p._terms:
        if first_redex(w) is not None and (best is None or compare(w, best) > 0):
            best = w
    return best
