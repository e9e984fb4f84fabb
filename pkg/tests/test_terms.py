import pytest
from hypothesis import given

from _strategies import normal_words, tree_words
from dendriform.oracle import enumerate_contexts, enumerate_normal_lwords
from dendriform.terms import (
    PREC,
    SUCC,
    Context,
    ParseError,
    compare,
    count_holes,
    count_normal_lwords,
    format_lword,
    generator,
    hole,
    is_normal,
    l_prec,
    l_succ,
    node,
    normalize,
    parse_lword,
    substitute,
)

x1, x2, x3, x4 = (generator(i) for i in range(1, 5))


class TestParse:
    def test_single_generator(self):
        assert parse_lword("x1") is x1

    def test_nested_tree(self):
        assert parse_lword("((x1 > x2) < x3)") is node(PREC, node(SUCC, x1, x2), x3)

    def test_whitespace_insignificant(self):
        assert parse_lword(" (x1<x2) ") is node(PREC, x1, x2)
        assert parse_lword("(  x1 >   x2)") is node(SUCC, x1, x2)

    def test_unbalanced_is_rejected(self):
        with pytest.raises(ParseError):
            parse_lword("(x1 > (x2 > x3")

    def test_trailing_garbage_is_rejected(self):
        with pytest.raises(ParseError):
            parse_lword("x1 x2")

    def test_index_out_of_range(self):
        with pytest.raises(ParseError):
            parse_lword("x3", 2)
        with pytest.raises(ParseError):
            parse_lword("x0")

    def test_error_carries_offset(self):
        with pytest.raises(ParseError) as exc:
            parse_lword("(x1 ? x2)")
        assert exc.value.position == 4

    @given(tree_words(n=3, max_leaves=6))
    def test_round_trip(self, w):
        assert parse_lword(format_lword(w), 3) is w


class TestDegreeAndNormality:
    def test_degree_counts_leaves(self):
        assert x1.degree == 1
        assert node(PREC, node(SUCC, x1, x2), x3).degree == 3
        assert node(SUCC, node(SUCC, node(SUCC, x1, x2), x3), x4).degree == 4

    def test_is_normal(self):
        assert is_normal(node(PREC, x1, x2))
        assert not is_normal(node(PREC, node(SUCC, x1, x2), x3))
        assert is_normal(node(SUCC, node(SUCC, x1, x2), x3))


class TestProducts:
    def test_succ_is_plain_pairing(self):
        assert l_succ(x1, x2) is node(SUCC, x1, x2)
        assert l_succ(l_prec(x1, x2), x3) is node(SUCC, node(PREC, x1, x2), x3)
        assert l_succ(l_succ(x1, x2), l_prec(x3, x4)) is node(
            SUCC, node(SUCC, x1, x2), node(PREC, x3, x4)
        )

    def test_prec_entangles_succ_topped_left(self):
        assert l_prec(x1, x2) is node(PREC, x1, x2)
        assert l_prec(l_succ(x1, x2), x3) is node(SUCC, x1, node(PREC, x2, x3))
        # one more unfolding of the recursion
        assert l_prec(l_succ(l_succ(x1, x2), x3), x4) is node(
            SUCC, node(SUCC, x1, x2), node(PREC, x3, x4)
        )

    @given(normal_words(n=2, max_degree=5), normal_words(n=2, max_degree=5))
    def test_products_stay_normal_and_add_degrees(self, u, v):
        for prod in (l_prec, l_succ):
            w = prod(u, v)
            assert is_normal(w)
            assert w.degree == u.degree + v.degree


class TestNormalize:
    def test_entanglement(self):
        assert normalize(node(PREC, node(SUCC, x1, x2), x3)) is node(
            SUCC, x1, node(PREC, x2, x3)
        )

    def test_fixed_point_on_normal_words(self):
        w = node(PREC, x1, x2)
        assert normalize(w) is w

    def test_two_unfoldings(self):
        w = node(PREC, node(PREC, node(SUCC, x1, x2), x3), x4)
        assert normalize(w) is node(SUCC, x1, node(PREC, node(PREC, x2, x3), x4))

    @given(tree_words(n=2, max_leaves=7))
    def test_idempotent_normal_and_degree_preserving(self, w):
        nw = normalize(w)
        assert is_normal(nw)
        assert nw.degree == w.degree
        assert normalize(nw) is nw


class TestOrder:
    def test_degree_decides_first(self):
        assert compare(x1, node(SUCC, x1, x2)) == -1

    def test_prec_above_succ(self):
        assert compare(node(PREC, x1, x2), node(SUCC, x1, x2)) == 1

    def test_generators_by_index(self):
        assert compare(x1, x2) == -1

    def test_strict_total_order_up_to_degree_four(self):
        # Sorting the full enumeration and checking all pairs against the
        # sort certifies totality, antisymmetry and transitivity at once.
        words = []
        for m in range(1, 5):
            words.extend(enumerate_normal_lwords(m, 2).words)
        ordered = sorted(words)
        for i in range(len(ordered)):
            assert compare(ordered[i], ordered[i]) == 0
            for j in range(i + 1, len(ordered)):
                assert compare(ordered[i], ordered[j]) == -1
                assert compare(ordered[j], ordered[i]) == 1

    def test_monomial_in_contexts(self):
        # u > v of equal degree must stay ordered after substitution into
        # any context, exhaustively at small degree.
        contexts = []
        for h in range(1, 4):
            contexts.extend(enumerate_contexts(h, 2))
        for m in range(1, 4):
            words = enumerate_normal_lwords(m, 2).words  # descending
            for i in range(len(words)):
                for j in range(i + 1, len(words)):
                    u, v = words[i], words[j]
                    for c in contexts:
                        cu = normalize(substitute(c, u))
                        cv = normalize(substitute(c, v))
                        assert compare(cu, cv) == 1


class TestContexts:
    def test_identity_context(self):
        assert substitute(Context(hole()), x1) is x1

    def test_splice(self):
        c = Context(node(PREC, hole(), x2))
        assert substitute(c, node(SUCC, x1, x3)) is node(PREC, node(SUCC, x1, x3), x2)

    def test_splice_deep(self):
        c = Context(node(SUCC, node(SUCC, x1, hole()), x2))
        w = node(PREC, x3, x4)
        assert substitute(c, w) is node(SUCC, node(SUCC, x1, w), x2)

    def test_exactly_one_hole_required(self):
        with pytest.raises(ValueError):
            Context(x1)
        with pytest.raises(ValueError):
            Context(node(PREC, hole(), hole()))
        assert count_holes(node(PREC, hole(), x1)) == 1


class TestCounting:
    @pytest.mark.parametrize("m,expected", [(1, 1), (2, 2), (3, 7), (4, 30), (5, 143)])
    def test_recursion_single_generator(self, m, expected):
        assert count_normal_lwords(m, 1) == expected

    @pytest.mark.parametrize("n", [1, 2])
    def test_recursion_matches_enumeration(self, n):
        for m in range(1, 6):
            assert count_normal_lwords(m, n) == len(enumerate_normal_lwords(m, n).words)

    def test_generator_validation(self):
        with pytest.raises(ValueError):
            generator(0)
        with pytest.raises(ValueError):
            count_normal_lwords(0, 1)
