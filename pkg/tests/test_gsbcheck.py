import pytest

from dendriform.gsbcheck import (
    CompositionReport,
    check_local_confluence,
    check_named_cases,
    check_right_mult,
    classify_redex_pair,
    coverage_audit,
    named_ambiguity_words,
    right_mult_sweep,
)
from dendriform.rewrite import RuleId, find_redexes
from dendriform.terms import compare, generator, l_prec, l_succ

x1, x2, x3, x4, x5 = (generator(i) for i in range(1, 6))


class TestRightMult:
    def test_rule2_by_generator(self):
        report = check_right_mult(RuleId.F2, (x1, x2, x3), x4)
        assert report.ok
        assert report.residual.is_zero
        assert report.kind == "right_mult"

    def test_rule3_by_generator(self):
        report = check_right_mult(RuleId.F3, (x1, x2, x3, x4), x5)
        assert report.ok and report.residual.is_zero

    def test_composite_right_factor(self):
        report = check_right_mult(RuleId.F2, (x1, x2, x3), l_prec(x2, x1))
        assert report.ok and report.residual.is_zero

    def test_rule1_rejected(self):
        with pytest.raises(ValueError):
            check_right_mult(RuleId.F1, (x1, x2, x3), x4)

    def test_intermediate_bound_is_nonstrict(self):
        report = check_right_mult(RuleId.F2, (x1, x2, x3), x4)
        assert report.max_intermediate is not None
        assert compare(report.max_intermediate, report.ambiguity_word) <= 0

    def test_sweep_all_trivial(self):
        reports = right_mult_sweep(6, 1)
        assert reports
        assert all(r.ok for r in reports)
        assert {r.rules[0] for r in reports} == {RuleId.F2, RuleId.F3}


class TestLocalConfluence:
    def test_degree_four_single_generator(self):
        reports = check_local_confluence(4, 1)
        assert reports and all(r.ok for r in reports)
        ambiguities = {str(r.ambiguity_word) for r in reports}
        assert "(((x1 < x1) < x1) < x1)" in ambiguities

    def test_degree_three_two_generators_is_vacuous(self):
        assert check_local_confluence(3, 2) == []

    def test_degree_five_single_generator(self):
        reports = check_local_confluence(5, 1)
        assert reports and all(r.ok for r in reports)
        ambiguities = {str(r.ambiguity_word) for r in reports}
        assert "((((x1 < x1) > x1) > x1) > x1)" in ambiguities

    def test_intermediates_stay_strictly_below_ambiguity(self):
        for report in check_local_confluence(5, 1):
            if report.max_intermediate is not None:
                assert compare(report.max_intermediate, report.ambiguity_word) == -1

    def test_reports_sorted_and_deterministic(self):
        a = check_local_confluence(5, 1)
        b = check_local_confluence(5, 1)
        assert [r.to_json_dict() for r in a] == [r.to_json_dict() for r in b]
        words = [r.ambiguity_word for r in a]
        assert words == sorted(words)

    def test_degree_bound_validation(self):
        with pytest.raises(ValueError):
            check_local_confluence(2, 1)


class TestNamedCases:
    def test_shapes(self):
        words = named_ambiguity_words(6)
        rendered = {name: str(w) for name, w in words.items()}
        assert rendered["prec_prec_under_succ"] == "(((x1 < x2) < x3) > x4)"
        assert rendered["prec_succ_chain"] == "((((x1 < x2) > x3) > x4) > x5)"
        assert rendered["succ_chain_overlap"] == "(((((x1 > x2) > x3) > x4) > x5) > x6)"

    def test_expected_redex_pairs(self):
        words = named_ambiguity_words(6)
        assert [r.rule for r in find_redexes(words["prec_prec_under_succ"])] == [RuleId.F2, RuleId.F1]
        assert [r.rule for r in find_redexes(words["prec_succ_chain"])] == [RuleId.F3, RuleId.F2]
        assert [r.rule for r in find_redexes(words["succ_chain_overlap"])] == [
            RuleId.F3,
            RuleId.F3,
            RuleId.F3,
        ]

    def test_all_named_cases_trivial(self):
        reports = check_named_cases(6)
        assert len(reports) == 5  # one pair, one pair, three pairs
        assert all(r.ok and r.residual.is_zero for r in reports)

    def test_small_alphabet_cycles(self):
        reports = check_named_cases(2)
        assert reports and all(r.ok for r in reports)


class TestCoverage:
    def test_audit_reaches_every_family(self):
        census = coverage_audit(6, 2)
        inclusion_families = {
            f"inclusion:{outer.name}/{inner.name}"
            for outer in RuleId
            for inner in RuleId
        }
        for family in inclusion_families:
            assert census.get(family, 0) > 0, family
        assert census.get("right_mult:F2", 0) > 0
        assert census.get("right_mult:F3", 0) > 0

    def test_classification(self):
        w = named_ambiguity_words(6)["prec_prec_under_succ"]
        r1, r2 = find_redexes(w)
        assert classify_redex_pair(r1, r2) == "inclusion:F2/F1"
        assert classify_redex_pair(r2, r1) == "inclusion:F2/F1"
        # disjoint pair
        big = l_succ(l_prec(l_prec(x1, x2), x3), l_prec(l_prec(x1, x2), x3))
        redexes = find_redexes(big)
        nested = [r for r in redexes if r.path and r.path[0] == "L"]
        right = [r for r in redexes if r.path and r.path[0] == "R"]
        assert classify_redex_pair(nested[0], right[0]) == "disjoint"


class TestReportSerialization:
    def test_json_dict(self):
        report = check_right_mult(RuleId.F2, (x1, x2, x3), x4)
        payload = report.to_json_dict()
        assert payload["kind"] == "right_mult"
        assert payload["rules"] == ["F2"]
        assert payload["ok"] is True
        assert payload["residual"]["terms"] == []
