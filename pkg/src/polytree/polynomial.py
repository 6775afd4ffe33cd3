"""Exact integer polynomials.

A polynomial is stored densely in ascending degree, ``coefficients[i]`` being
the coefficient of ``x**i``.  Trailing zeros are stripped on construction, and
the zero polynomial is ``(0,)`` with degree 0.
"""

import re
from dataclasses import dataclass
from typing import NamedTuple

from .errors import NotPermutational, ParseError
from .exact import exact_div


@dataclass(frozen=True)
class IntPolynomial:
    coefficients: tuple

    def __post_init__(self):
        coeffs = [int(c) for c in self.coefficients]
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        if not coeffs:
            coeffs = [0]
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @classmethod
    def constant(cls, c):
        return cls((c,))

    @classmethod
    def identity(cls):
        return cls((0, 1))

    @property
    def degree(self):
        return len(self.coefficients) - 1

    @property
    def leading(self):
        return self.coefficients[-1]

    def __getitem__(self, i):
        """Coefficient of ``x**i`` (zero past the degree)."""
        if i < 0:
            raise IndexError(i)
        return self.coefficients[i] if i < len(self.coefficients) else 0

    def __call__(self, x):
        return evaluate(self, x)

    def __add__(self, other):
        other = _coerce(other)
        n = max(len(self.coefficients), len(other.coefficients))
        return IntPolynomial(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(-c for c in self.coefficients)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        out = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a:
                for j, b in enumerate(other.coefficients):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"IntPolynomial({list(self.coefficients)})"


def _coerce(value):
    if isinstance(value, IntPolynomial):
        return value
    if isinstance(value, int):
        return IntPolynomial((value,))
    return IntPolynomial(value)


def as_polynomial(value):
    """Accept an ``IntPolynomial``, a coefficient sequence, or polynomial text."""
    if isinstance(value, str):
        return parse_polynomial(value)
    return _coerce(value)


def evaluate(f, x):
    acc = 0
    for c in reversed(f.coefficients):
        acc = acc * x + c
    return acc


def taylor_coefficients(f, x0):
    """Coefficients of ``f(x0 + y)`` as a polynomial in ``y``.

    Entry ``i`` equals ``f^(i)(x0) / i!``.  Computed by repeated synthetic
    division, so every intermediate value is an integer.
    """
    b = list(f.coefficients)
    t = len(b) - 1
    if x0 == 0:
        return b
    for i in range(t):
        for j in range(t - 1, i - 1, -1):
            b[j] += x0 * b[j + 1]
    return b


def shift(f, x0):
    """The polynomial ``y -> f(x0 + y)``."""
    return IntPolynomial(taylor_coefficients(f, x0))


def compose(first, second):
    """Return ``x -> second(first(x))``: ``first`` acts first."""
    first, second = _coerce(first), _coerce(second)
    result = IntPolynomial((0,))
    for c in reversed(second.coefficients):
        result = result * first + c
    return result


def compose_all(*polys):
    """Compose left to right, the leftmost acting first."""
    result = IntPolynomial.identity()
    for p in polys:
        result = compose(result, p)
    return result


def power(f, r):
    """``r``-fold self-composition of ``f`` (``r >= 0``)."""
    if r < 0:
        raise ValueError("negative composition power")
    return compose_all(*([f] * r))


def even_sum(f):
    """``a_2 + a_4 + ...``"""
    return sum(f.coefficients[2::2])


def odd_sum(f):
    """``a_3 + a_5 + ...``"""
    return sum(f.coefficients[3::2])


class PermutationalProfile(NamedTuple):
    k: int
    m: int
    n: int


def rivest_parities(f):
    """Return the three parity conditions characterising 2-permutational ``f``."""
    return (f[1] % 2 == 1, even_sum(f) % 2 == 0, odd_sum(f) % 2 == 0)


def profile(f):
    """The integers ``(k, m, n)`` with ``a_1 = 2k+1``, even sum ``2m``, odd sum ``2n``."""
    if not all(rivest_parities(f)):
        raise NotPermutational(f"{render(f)} is not 2-permutational")
    return PermutationalProfile(
        k=exact_div(f[1] - 1, 2),
        m=exact_div(even_sum(f), 2),
        n=exact_div(odd_sum(f), 2),
    )


# -- text form ---------------------------------------------------------------

def render(f):
    """Canonical expression form, descending powers: ``2*x^2 + 3*x + 1``."""
    terms = []
    for i in range(f.degree, -1, -1):
        c = f.coefficients[i]
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            var = "x" if i == 1 else f"x^{i}"
            body = var if mag == 1 else f"{mag}*{var}"
        if not terms:
            terms.append(body if c > 0 else "-" + body)
        else:
            terms.append(("+ " if c > 0 else "- ") + body)
    return " ".join(terms) if terms else "0"


_LIST_PREFIX = "coeffs:"
_INT = re.compile(r"\d+")


class _Scanner:
    def __init__(self, text):
        self.text = text
        self.pos = 0
        self.skip()

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch):
        if self.peek() == ch:
            self.pos += 1
            self.skip()
            return True
        return False

    def integer(self):
        m = _INT.match(self.text, self.pos)
        if not m:
            return None
        self.pos = m.end()
        self.skip()
        return int(m.group())

    def fail(self, message):
        raise ParseError(message, self.text, self.pos)


def _parse_list(text):
    body = text.strip()[len(_LIST_PREFIX):]
    offset = text.index(_LIST_PREFIX) + len(_LIST_PREFIX)
    coeffs = []
    for part in body.split(","):
        token = part.strip()
        if not re.fullmatch(r"[+-]?\d+", token):
            raise ParseError("expected an integer coefficient", text, offset)
        coeffs.append(int(token))
        offset += len(part) + 1
    return IntPolynomial(coeffs)


def _parse_expression(text):
    s = _Scanner(text)
    coeffs = {}
    first = True
    while True:
        if s.peek() == "":
            if first:
                s.fail("empty polynomial")
            break
        sign = 1
        if s.take("-"):
            sign = -1
        elif not s.take("+") and not first:
            s.fail("expected '+' or '-'")
        start = s.pos
        coeff = s.integer()
        exponent = 0
        if s.peek() == "*":
            if coeff is None:
                s.fail("'*' without a coefficient")
            s.take("*")
            if s.peek() != "x":
                s.fail("expected 'x' after '*'")
        if s.take("x"):
            exponent = 1
            if s.take("^"):
                exponent = s.integer()
                if exponent is None:
                    s.fail("expected a non-negative exponent")
        elif coeff is None:
            s.pos = start
            s.fail("expected a term")
        value = sign * (1 if coeff is None else coeff)
        coeffs[exponent] = coeffs.get(exponent, 0) + value
        first = False
    top = max(coeffs)
    return IntPolynomial(coeffs.get(i, 0) for i in range(top + 1))


def parse_polynomial(text):
    """Parse expression form (``"2*x^2+x"``) or list form (``"coeffs:0,1,2"``)."""
    if text.strip().startswith(_LIST_PREFIX):
        return _parse_list(text)
    return _parse_expression(text)
