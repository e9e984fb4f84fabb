"""Bounded-degree verification that the rewrite rules form a complete basis.

Two obstruction families are checked.  Right-multiplication compositions
multiply a SUCC-leading rule instance by an arbitrary normal word on the
right and must reduce to zero with every intermediate word at or below the
product's leading word.  Inclusion compositions arise wherever one word
carries two redexes: both one-step reducts must share a normal form, with
every intermediate word strictly below the ambiguity.  Checks run over
concrete words exhaustively up to a degree bound; failures are collected
in reports, never thrown, so a single miss cannot mask others.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import product

from .oracle import _compositions, _normal_words, enumerate_normal_lwords
from .poly import Polynomial, leading, mul
from .rewrite import (
    Redex,
    RuleId,
    find_redexes,
    max_reducible_word,
    normal_form,
    rewrite_step,
    rule_polynomial,
)
from .terms import PREC, SUCC, LWord, compare, generator, max_generator_index, node

RIGHT_MULT_RULES = (RuleId.F2, RuleId.F3)


@dataclass(frozen=True)
class CompositionReport:
    """Outcome of one composition check.

    ``ambiguity_word`` is the bound word: the overlap word for an inclusion
    pair, the leading word of the right product for a right-multiplication.
    ``max_intermediate`` is the greatest word rewritten while reducing the
    composition (None when it was already reduced); ``ok`` requires a zero
    residual and the intermediate bound (strict for inclusions, non-strict
    for right multiplications).
    """

    kind: str  # "inclusion" or "right_mult"
    rules: tuple[RuleId, ...]
    ambiguity_word: LWord
    residual: Polynomial
    ok: bool
    max_intermediate: LWord | None
    paths: tuple[str, ...] = ()

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind,
            "rules": [r.name for r in self.rules],
            "ambiguity": str(self.ambiguity_word),
            "paths": list(self.paths),
            "ok": self.ok,
            "max_intermediate": None if self.max_intermediate is None else str(self.max_intermediate),
            "residual": self.residual.to_json_dict(),
        }


def _report_sort_key(report: CompositionReport):
    return (
        report.ambiguity_word,
        report.kind,
        tuple(r.name for r in report.rules),
        report.paths,
    )


def check_right_mult(rule: RuleId, bindings, v: LWord, *, n: int | None = None) -> CompositionReport:
    """Reduce (rule instance) < v and report the residual.

    Only F2 and F3 have SUCC-topped leading words, so only they admit this
    composition; F1 is rejected.
    """
    if rule not in RIGHT_MULT_RULES:
        raise ValueError(f"{rule.name} has no right-multiplication composition")
    bindings = tuple(bindings)
    if n is None:
        n = max(1, max_generator_index(v), *(max_generator_index(b) for b in bindings))
    relation = rule_polynomial(rule, bindings, n=n)
    composition = mul(relation, PREC, Polynomial.monomial(v, n=n))
    bound = leading(composition)[0]
    max_intermediate = max_reducible_word(composition)
    residual = normal_form(composition)
    ok = residual.is_zero and (
        max_intermediate is None or compare(max_intermediate, bound) <= 0
    )
    return CompositionReport(
        kind="right_mult",
        rules=(rule,),
        ambiguity_word=bound,
        residual=residual,
        ok=ok,
        max_intermediate=max_intermediate,
    )


def right_mult_sweep(max_total_degree: int, n: int) -> list[CompositionReport]:
    """Every right-multiplication composition with bindings plus right
    factor totalling at most the given degree."""
    reports = []
    for rule in RIGHT_MULT_RULES:
        slots = rule.arity + 1  # bindings plus the right factor
        for total in range(slots, max_total_degree + 1):
            for degrees in _compositions(total, slots):
                pools = [_normal_words(d, n) for d in degrees]
                for words in product(*pools):
                    reports.append(check_right_mult(rule, words[:-1], words[-1], n=n))
    reports.sort(key=_report_sort_key)
    return reports


def _check_pair(w: LWord, r1: Redex, r2: Redex, n: int) -> CompositionReport:
    difference = rewrite_step(w, r1, n=n) - rewrite_step(w, r2, n=n)
    max_intermediate = max_reducible_word(difference)
    residual = normal_form(difference)
    ok = residual.is_zero and (
        max_intermediate is None or compare(max_intermediate, w) < 0
    )
    return CompositionReport(
        kind="inclusion",
        rules=(r1.rule, r2.rule),
        ambiguity_word=w,
        residual=residual,
        ok=ok,
        max_intermediate=max_intermediate,
        paths=("".join(r1.path), "".join(r2.path)),
    )


def check_local_confluence(max_degree: int, n: int) -> list[CompositionReport]:
    """Check every redex pair of every normal word up to the degree bound.

    Each multiply-reducible word is an ambiguity; equal normal forms of the
    two one-step reducts certify the pair.  Reports come back sorted by
    ambiguity word.
    """
    if max_degree < 3:
        raise ValueError("redexes need degree at least 3")
    if n < 1:
        raise ValueError("alphabet size must be at least 1")
    reports = []
    for m in range(3, max_degree + 1):
        for w in enumerate_normal_lwords(m, n).words:
            redexes = find_redexes(w)
            if len(redexes) < 2:
                continue
            for i in range(len(redexes)):
                for j in range(i + 1, len(redexes)):
                    reports.append(_check_pair(w, redexes[i], redexes[j], n))
    reports.sort(key=_report_sort_key)
    return reports


def _cycled_generators(count: int, n: int) -> list[LWord]:
    return [generator((k % n) + 1) for k in range(count)]


def named_ambiguity_words(n: int) -> dict[str, LWord]:
    """The three hand-checked overlap shapes, instantiated on generators.

    With n >= 4, 5, 6 respectively the instances use pairwise distinct
    generators; smaller alphabets cycle.
    """
    if n < 1:
        raise ValueError("alphabet size must be at least 1")
    x, y, z, c = _cycled_generators(4, n)
    w1 = node(SUCC, node(PREC, node(PREC, x, y), z), c)
    a, b, c2, z2, v = _cycled_generators(5, n)
    w2 = node(SUCC, node(SUCC, node(SUCC, node(PREC, a, b), c2), z2), v)
    a, b, c3, d, z3, v3 = _cycled_generators(6, n)
    w3 = node(
        SUCC,
        node(SUCC, node(SUCC, node(SUCC, node(SUCC, a, b), c3), d), z3),
        v3,
    )
    return {
        "prec_prec_under_succ": w1,
        "prec_succ_chain": w2,
        "succ_chain_overlap": w3,
    }


def check_named_cases(n: int) -> list[CompositionReport]:
    """Check every redex pair of the three named overlap shapes."""
    reports = []
    for w in named_ambiguity_words(n).values():
        redexes = find_redexes(w)
        for i in range(len(redexes)):
            for j in range(i + 1, len(redexes)):
                reports.append(_check_pair(w, redexes[i], redexes[j], n))
    reports.sort(key=_report_sort_key)
    return reports


def classify_redex_pair(r1: Redex, r2: Redex) -> str:
    """Family of a redex pair: nested pairs by outer/inner rule, else disjoint."""
    p1, p2 = r1.path, r2.path
    if p1 == p2[: len(p1)]:
        outer, inner = r1, r2
    elif p2 == p1[: len(p2)]:
        outer, inner = r2, r1
    else:
        return "disjoint"
    return f"inclusion:{outer.rule.name}/{inner.rule.name}"


def coverage_audit(max_degree: int, n: int) -> dict[str, int]:
    """Census of ambiguity families reachable within the degree bound.

    Counts nested redex pairs by outer/inner rule over all normal words up
    to the bound (classification only, no reduction), plus the number of
    right-multiplication instances per SUCC-leading rule.
    """
    families: Counter[str] = Counter()
    for m in range(3, max_degree + 1):
        for w in enumerate_normal_lwords(m, n).words:
            redexes = find_redexes(w)
            for i in range(len(redexes)):
                for j in range(i + 1, len(redexes)):
                    families[classify_redex_pair(redexes[i], redexes[j])] += 1
    for rule in RIGHT_MULT_RULES:
        slots = rule.arity + 1
        count = 0
        for total in range(slots, max_degree + 1):
            for degrees in _compositions(total, slots):
                instances = 1
                for d in degrees:
                    instances *= len(_normal_words(d, n))
                count += instances
        if count:
            families[f"right_mult:{rule.name}"] = count
    return dict(families)
