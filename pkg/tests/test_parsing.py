import random

import pytest
from hypothesis import given, strategies as st

from gintools.ring import PolyRing
from gintools.parsing import (ParseError, parse_ideal, parse_polynomial,
                              render_monomial, render_poly, split_generators)

R3 = PolyRing(3)


def test_parse_quadric():
    f = parse_polynomial("x0*x2 - x1^2", R3)
    assert f.terms == (((0, 2, 0), R3.prime - 1), ((1, 0, 1), 1))


def test_parse_single_term_cubic():
    f = parse_polynomial("x0^2*x1", R3)
    assert f.terms == (((2, 1, 0), 1),)


def test_whitespace_insensitive():
    assert parse_polynomial("x0 * x2-x1 ^2", R3) == \
        parse_polynomial("x0*x2 - x1^2", R3)


def test_parentheses_and_coefficients():
    assert parse_polynomial("(x0 + x1)*(x0 - x1)", R3) == \
        parse_polynomial("x0^2 - x1^2", R3)
    assert parse_polynomial("2*x0*(3*x1 + x2)", R3) == \
        parse_polynomial("6*x0*x1 + 2*x0*x2", R3)


def test_unary_minus():
    assert parse_polynomial("-x0 + x1", R3) == \
        parse_polynomial("x1 - x0", R3)


def test_coefficients_reduced_mod_p():
    small = PolyRing(2, prime=7)
    assert parse_polynomial("10*x0", small) == parse_polynomial("3*x0", small)


def test_inhomogeneous_generator_rejected():
    with pytest.raises(ParseError, match="inhomogeneous"):
        parse_ideal("x0 + 1", nvars=3)


def test_unknown_variable_rejected():
    with pytest.raises(ParseError, match="unknown variable"):
        parse_polynomial("x5", R3)


def test_syntax_error_carries_position():
    with pytest.raises(ParseError) as info:
        parse_polynomial("x0 + @", R3)
    assert info.value.line == 1
    assert info.value.column == 6


def test_error_position_on_later_line():
    with pytest.raises(ParseError) as info:
        parse_ideal("x0*x1,\nx0 $ x1", nvars=3)
    assert info.value.line == 2


def test_trailing_garbage_rejected():
    with pytest.raises(ParseError):
        parse_polynomial("x0 x1", R3)


def test_missing_operand_rejected():
    with pytest.raises(ParseError):
        parse_polynomial("x0 + ", R3)
    with pytest.raises(ParseError):
        parse_polynomial("(x0 + x1", R3)


def test_split_generators_handles_lines_commas_comments():
    text = "x0*x1, x2^2\nx1^2  # a comment\n# full comment line\n"
    assert split_generators(text) == ["x0*x1", "x2^2", "x1^2"]


def test_ideal_variable_count_inferred():
    I = parse_ideal("x0*x3 - x1*x2")
    assert I.ring.nvars == 4


def test_zero_generators_dropped():
    I = parse_ideal("x0 - x0, x1", nvars=3)
    assert len(I.gens) == 1


# ---------------------------------------------------------------------------
# renderer round trip

def test_render_monomial_forms():
    assert render_monomial((2, 1, 0)) == "x0^2*x1"
    assert render_monomial((0, 0, 0)) == "1"


def test_render_balanced_signs():
    f = parse_polynomial("x0*x2 - x1^2", R3)
    assert render_poly(f) in ("x0*x2 - x1^2", "-x1^2 + x0*x2")
    assert parse_polynomial(render_poly(f), R3) == f


def test_render_zero():
    assert render_poly(R3.zero()) == "0"


@pytest.mark.parametrize("nvars,prime", [(2, 32003), (3, 32003), (4, 101), (5, 7)])
def test_roundtrip_thousand_random_polynomials(nvars, prime):
    ring = PolyRing(nvars, prime)
    rng = random.Random(nvars * 100000 + prime)
    for _ in range(1000):
        degree = rng.randint(0, 4)
        f = ring.random_form(degree, rng)
        assert parse_polynomial(render_poly(f), ring) == f


@given(st.integers(0, 10 ** 9), st.integers(1, 4))
def test_roundtrip_property(seed, degree):
    rng = random.Random(seed)
    f = R3.random_form(degree, rng)
    assert parse_polynomial(render_poly(f), R3) == f
