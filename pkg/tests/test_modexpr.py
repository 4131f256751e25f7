import pytest

from quiverhom import corpus
from quiverhom.errors import ParseError
from quiverhom.modexpr import evaluate


class TestMultisetContext:
    def test_paths_and_simples(self, sec4):
        kind, m = evaluate("path(g) + 2*simple(1)", sec4)
        assert kind == "multiset"
        assert len(m) == 3

    def test_parenthesized_scaling(self, sec4):
        kind, m = evaluate("2*(path(g) + simple(1))", sec4)
        assert len(m) == 4

    def test_inj_not_formal(self, sec4):
        kind, value = evaluate("inj(1)", sec4)
        assert kind == "rep"  # auto-switches to the linear context

    def test_forced_multiset_with_inj_fails(self, sec4):
        with pytest.raises(ParseError):
            evaluate("inj(1)", sec4, context="multiset")

    def test_unknown_vertex(self, sec4):
        with pytest.raises(ParseError):
            evaluate("simple(9)", sec4)


class TestRepContext:
    def test_projective_sum(self, sec4):
        kind, parts = evaluate("proj(1) + 3*simple(2)", sec4)
        assert kind == "rep"
        total = sum(mult for _rep, mult in parts)
        assert total == 4

    def test_relations_algebra_defaults_to_rep(self, sec3):
        kind, parts = evaluate("simple(1)", sec3)
        assert kind == "rep"

    def test_rep_literal(self, sec3):
        text = "rep{ 1:1 2:1 ; a1 = [[2]] ; a2 = [[1]] }"
        kind, parts = evaluate(text, sec3)
        rep = parts[0][0]
        assert rep.dim_vector() == (1, 1)

    def test_rep_literal_checks_relations(self, sec3):
        # b1 must act like b2 scaled; an inconsistent literal is rejected
        text = "rep{ 1:1 2:1 ; a1 = [[1]] ; b1 = [[1]] }"
        with pytest.raises(Exception):
            evaluate(text, sec3)

    def test_rep_literal_shape_validation(self, sec3):
        with pytest.raises(ParseError):
            evaluate("rep{ 1:1 2:1 ; a1 = [[1, 2]] }", sec3)

    def test_generators(self, sec3, infinito):
        kind, parts = evaluate("M_param(2)", sec3, generators=corpus.GENERATORS)
        assert parts[0][0].dim_vector() == (1, 1)
        kind, parts = evaluate("M_alpha(1,2) + M_beta(1,2)", infinito,
                               generators=corpus.GENERATORS)
        assert parts[0][0].dim_vector() == (2, 7, 0, 0)
        assert parts[1][0].dim_vector() == (2, 7, 0, 0)

    def test_generator_on_wrong_algebra(self, sec4):
        with pytest.raises(ParseError):
            evaluate("M_alpha(1,2)", sec4, generators=corpus.GENERATORS)

    def test_unknown_atom(self, sec4):
        with pytest.raises(ParseError):
            evaluate("mystery(1)", sec4, context="rep")
