import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from radolab.model import Equation, Polynomial
from radolab.parser import ParseError, parse, pretty


def P(terms):
    return Polynomial.from_terms(terms)


class TestParse:
    def test_pythagorean(self):
        eq = parse("x^2 + y^2 = z^2")
        assert eq.poly == P({(("x", 2),): 1, (("y", 2),): 1, (("z", 2),): -1})

    def test_linear_zero_rhs(self):
        eq = parse("3x - 2y + z = 0")
        assert eq.poly == P({(("x", 1),): 3, (("y", 1),): -2, (("z", 1),): 1})

    def test_subscripted_product(self):
        eq = parse("x^4 - y^4 = z1*z2")
        assert eq.poly == P({(("x", 4),): 1, (("y", 4),): -1,
                             (("z1", 1), ("z2", 1)): -1})

    def test_implicit_multiplication(self):
        assert parse("3x + 2y = z").poly == parse("3*x + 2*y = z").poly
        assert parse("x y = z").poly == parse("x*y = z").poly

    def test_unary_minus_both_sides(self):
        eq = parse("-x + y = -z + w")
        assert eq.poly == parse("y + z = x + w").poly

    def test_sources_kept(self):
        eq = parse("x + y = z")
        assert eq.source_lhs == "x + y" and eq.source_rhs == "z"


class TestPretty:
    def test_schur(self):
        eq = Equation.from_polynomial(
            P({(("x", 1),): 1, (("y", 1),): 1, (("z", 1),): -1}))
        assert pretty(eq) == "x + y - z = 0"

    def test_quartic_product(self):
        eq = parse("x^4 - y^4 = z1*z2")
        assert pretty(eq) == "x^4 - y^4 - z1*z2 = 0"

    def test_coefficients_rendered(self):
        assert pretty(parse("3x - 2y + z = 0")) == "3*x - 2*y + z = 0"

    def test_zero_polynomial(self):
        assert pretty(parse("x = x")) == "0 = 0"
        assert parse("0 = 0").poly.is_zero()

    def test_constant_term(self):
        assert pretty(parse("x = y + 1")) == "x - y - 1 = 0"


class TestErrors:
    @pytest.mark.parametrize("text", [
        "", "   ", "x + y", "x = y = z", "x + = z", "x ^ = 2",
        "1.5x = y", "x^0 = y", "x^-2 = y", "x? = y", "= x",
        "x = ", "(x) = y",
    ])
    def test_malformed(self, text):
        with pytest.raises(ParseError):
            parse(text)

    def test_position_within_input(self):
        for text in ["x^0 = y", "x + = z", "x = y = z", "x = y @"]:
            with pytest.raises(ParseError) as info:
                parse(text)
            assert 0 <= info.value.position <= len(text)
            assert info.value.expected

    def test_exponent_error_position(self):
        with pytest.raises(ParseError) as info:
            parse("x^0 = y")
        assert info.value.position == 2


names_st = st.lists(st.sampled_from(["a", "b", "w", "x", "y", "z",
                                     "x1", "x2", "z1", "z2"]),
                    min_size=1, max_size=6, unique=True)


@st.composite
def equations(draw):
    names = draw(names_st)
    terms = {}
    for _ in range(draw(st.integers(1, 6))):
        degrees = []
        budget = 7
        key = []
        for v in names:
            if draw(st.booleans()):
                e = draw(st.integers(1, min(4, budget)))
                budget -= e
                key.append((v, e))
                if budget == 0:
                    break
        coeff = draw(st.integers(-99, 99).filter(bool))
        k = tuple(key)
        terms[k] = terms.get(k, 0) + coeff
    return Equation.from_polynomial(Polynomial.from_terms(terms))


@given(equations())
@settings(max_examples=300, deadline=None)
def test_round_trip(eq):
    assert parse(pretty(eq)).poly == eq.poly


@given(equations(), st.randoms(use_true_random=False))
@settings(max_examples=150, deadline=None)
def test_whitespace_insensitive(eq, rng):
    import re
    text = pretty(eq)
    tokens = re.findall(r"\d+|[A-Za-z][A-Za-z0-9]*|[-+*^=]", text)
    # inserting whitespace at token boundaries never changes the parse
    respaced = "".join(tok + " " * rng.randint(1, 3) for tok in tokens)
    assert parse(respaced).poly == eq.poly
    assert parse(" ".join(tokens)).poly == eq.poly


def test_lhs_rhs_symmetry():
    rng = random.Random(3)
    cases = ["x + y = z", "x^2 + y^2 = z^2", "3x - 2y = 5z", "x*y = 2z",
             "x^4 - y^4 = z1*z2"]
    for text in cases:
        lhs, rhs = text.split("=")
        assert parse(text).poly == parse(f"{rhs} = {lhs}").poly
    for _ in range(50):
        a = rng.randint(1, 9)
        b = rng.randint(1, 9)
        assert (parse(f"{a}x + {b}y = z").poly
                == parse(f"z = {a}x + {b}y").poly)
