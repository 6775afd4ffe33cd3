import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import horner, taylor_by_derivatives
from conftest import permutational_polynomials, polynomials
from polytree import (
    IntPolynomial,
    NotPermutational,
    ParseError,
    compose,
    evaluate,
    is_permutational_2adic,
    parse_polynomial,
    profile,
    render,
    taylor_coefficients,
)
from polytree.polynomial import power


@pytest.mark.parametrize("text, coeffs", [
    ("2*x^2+x", [0, 1, 2]),
    ("x+1", [1, 1]),
    ("coeffs:1,3,2", [1, 3, 2]),
    ("-x^3+4", [4, 0, 0, -1]),
    ("  2 x ^ 2 - 3 *x -1 ", [-1, -3, 2]),
    ("x - x", [0]),
    ("5", [5]),
    ("coeffs: -1, 0, 0", [-1]),
    ("x^2 + x^2", [0, 0, 2]),
    ("123456789012345678901234567890*x", [0, 123456789012345678901234567890]),
])
def test_parse(text, coeffs):
    assert parse_polynomial(text).coefficients == tuple(coeffs)


@pytest.mark.parametrize("text, position", [
    ("", 0), ("x^", 2), ("2*", 2), ("x+", 2), ("x x", 2), ("*x", 0), ("coeffs:1,,2", None),
    ("y", 0),
])
def test_parse_errors(text, position):
    with pytest.raises(ParseError) as info:
        parse_polynomial(text)
    if position is not None:
        assert info.value.position == position


def test_normalization():
    assert IntPolynomial([3, 0, 0]).coefficients == (3,)
    assert IntPolynomial([]).coefficients == (0,)
    assert IntPolynomial([0, 0]).degree == 0


@pytest.mark.parametrize("coeffs, text", [
    ([1, 3, 2], "2*x^2 + 3*x + 1"),
    ([0], "0"),
    ([-1, -1], "-x - 1"),
    ([4, 0, 0, -1], "-x^3 + 4"),
    ([0, 1], "x"),
])
def test_render(coeffs, text):
    assert render(IntPolynomial(coeffs)) == text


@given(polynomials(6, 50))
def test_render_round_trip(f):
    assert parse_polynomial(render(f)) == f


@pytest.mark.parametrize("coeffs, x, value", [([1, 3, 2], 2, 15), ([1, 3, 2], 0, 1), ([0, 1, 2], 1, 3)])
def test_evaluate(coeffs, x, value):
    assert evaluate(IntPolynomial(coeffs), x) == value


@pytest.mark.parametrize("coeffs, x0, expected", [
    ([1, 3, 2], 1, [6, 7, 2]),
    ([1, 3, 2], 0, [1, 3, 2]),
    ([0, 0, 0, 1], 1, [1, 3, 3, 1]),
])
def test_taylor_examples(coeffs, x0, expected):
    assert taylor_coefficients(IntPolynomial(coeffs), x0) == expected


@given(polynomials(6, 8), st.integers(-5, 5))
def test_taylor_matches_derivatives(f, x0):
    assert taylor_coefficients(f, x0) == taylor_by_derivatives(list(f.coefficients), x0)


def test_taylor_correctness_exhaustive_points():
    fs = [IntPolynomial(c) for c in itertools.product(range(-2, 3), repeat=4)]
    for f in fs[::7]:
        for x0 in range(-5, 6):
            c = taylor_coefficients(f, x0)
            for y in range(-5, 6):
                assert evaluate(f, x0 + y) == horner(c, y)


def test_compose_examples():
    f = IntPolynomial([1, 3, 2])
    assert compose(IntPolynomial([1, 1]), IntPolynomial([0, 3])).coefficients == (3, 3)
    assert compose(f, IntPolynomial.identity()) == f
    p, q3 = IntPolynomial([1, 1]), IntPolynomial([0, 3])
    assert compose(q3, power(p, 3)) == compose(p, q3) == IntPolynomial([3, 3])


@given(polynomials(3, 5), polynomials(3, 5), polynomials(2, 5))
def test_compose_associative(f, g, h):
    assert compose(compose(f, g), h) == compose(f, compose(g, h))


@given(polynomials(4, 9), st.integers(-20, 20))
def test_compose_is_pointwise(f, x):
    idf = IntPolynomial.identity()
    g = IntPolynomial([2, -1, 3])
    assert compose(f, idf) == compose(idf, f) == f
    assert evaluate(compose(f, g), x) == evaluate(g, evaluate(f, x))


@given(polynomials(4, 5), polynomials(4, 5))
def test_compose_degree(f, g):
    h = compose(f, g)
    if f.degree >= 1 and g.degree >= 1:
        assert h.degree == f.degree * g.degree


@given(permutational_polynomials(3, 6), permutational_polynomials(3, 6))
def test_permutational_monoid_closure(f, g):
    assert is_permutational_2adic(compose(f, g)).verdict


@pytest.mark.parametrize("coeffs, expected", [([1, 3, 2], (1, 1, 0)), ([0, 1, 2], (0, 1, 0)), ([1, 1], (0, 0, 0))])
def test_profile(coeffs, expected):
    assert tuple(profile(IntPolynomial(coeffs))) == expected


@given(permutational_polynomials(7, 20))
def test_profile_identities(f):
    k, m, n = profile(f)
    assert f[1] == 2 * k + 1
    assert sum(f.coefficients[2::2]) == 2 * m
    assert sum(f.coefficients[3::2]) == 2 * n


@pytest.mark.parametrize("coeffs", [[0, 0, 1], [0, 1, 1], [0, 1, 0, 1]])
def test_profile_rejects_non_permutational(coeffs):
    with pytest.raises(NotPermutational):
        profile(IntPolynomial(coeffs))


@given(permutational_polynomials(6, 8))
def test_permutational_strategy(f):
    assert is_permutational_2adic(f).verdict
