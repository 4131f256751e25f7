import pytest

from quiverhom import corpus
from quiverhom.algfile import format_algebra, parse_algebra_text, parse_split_text
from quiverhom.errors import ParseError


GOOD = """\
# a comment
vertices: 1 2
arrow: a 1 2
arrow: b 2 1
truncated: 2
"""


class TestParse:
    def test_basic_truncated(self):
        A = parse_algebra_text(GOOD)
        assert A.kind == "truncated" and A.dimension == 4

    def test_unknown_key_rejected_with_line(self):
        with pytest.raises(ParseError) as err:
            parse_algebra_text(GOOD + "plot: yes\n")
        assert "line 6" in err.value.message

    def test_missing_ideal_rejected(self):
        with pytest.raises(ParseError):
            parse_algebra_text("vertices: 1\narrow: a 1 1\n")

    def test_two_ideals_rejected(self):
        with pytest.raises(ParseError):
            parse_algebra_text(GOOD + "monomial: a.b\n")

    def test_bad_arrow_line(self):
        with pytest.raises(ParseError) as err:
            parse_algebra_text("vertices: 1\narrow: a 1\ntruncated: 2\n")
        assert "line 2" in err.value.message

    def test_relations_need_nilpotency(self):
        text = "vertices: 1\narrow: x 1 1\nrelations: x.x\n"
        with pytest.raises(ParseError):
            parse_algebra_text(text)

    def test_radical_power_token(self):
        text = "vertices: 1\narrow: x 1 1\nrelations: J^2\nnilpotency: 2\n"
        A = parse_algebra_text(text)
        assert A.kind == "relations" and A.dimension == 2
        assert A.ideal.radical_power_included

    def test_radical_power_mismatch(self):
        text = "vertices: 1\narrow: x 1 1\nrelations: J^2\nnilpotency: 3\n"
        with pytest.raises(ParseError):
            parse_algebra_text(text)

    def test_rational_coefficients(self):
        text = (
            "vertices: 1\narrow: x 1 1\narrow: y 1 1\n"
            "relations: x.x - 1/2*y.y, x.y, y.x\nnilpotency: 3\n"
        )
        A = parse_algebra_text(text)
        assert A.dimension == 4

    def test_field_line(self):
        A = parse_algebra_text(GOOD + "field: Fp 32003\n")
        assert A.field.char == 32003
        with pytest.raises(ParseError):
            parse_algebra_text(GOOD + "field: Fp 32004\n")

    def test_traversal_order_semantics(self):
        # "a.b" traverses a then b, i.e. kills the function-order product ba
        text = "vertices: 1 2\narrow: a 1 2\narrow: b 2 1\nmonomial: a.b\n"
        A = parse_algebra_text(text)
        assert A.path_is_zero(A.path("a.b"))
        assert not A.path_is_zero(A.path("b.a"))


class TestRoundTrip:
    @pytest.mark.parametrize("name", sorted(corpus.FILES))
    def test_corpus_round_trips(self, name):
        A = parse_algebra_text(corpus.FILES[name])
        text = format_algebra(A)
        B = parse_algebra_text(text)
        assert format_algebra(B) == text
        assert B.dimension == A.dimension
        assert B.quiver == A.quiver


class TestSplit:
    def test_parse(self):
        gamma, gamma_bar = parse_split_text(corpus.SPLITS["finito.split"])
        assert gamma == ["3"] and gamma_bar == ["1", "2"]

    def test_unknown_key(self):
        with pytest.raises(ParseError):
            parse_split_text("gamma: 1\nother: 2\n")

    def test_missing_part(self):
        with pytest.raises(ParseError):
            parse_split_text("gamma: 1\n")
