"""Exact integer helpers: digit-valued Euclidean division and exact quotients."""

from typing import NamedTuple

from .errors import InvalidBase


class DivMod(NamedTuple):
    q: int
    r: int


def check_base(d):
    if isinstance(d, bool) or not isinstance(d, int) or d < 2:
        raise InvalidBase(f"base must be an integer >= 2, got {d!r}")
    return d


def euclid_divmod(a, d):
    """Return ``(q, r)`` with ``a == d*q + r`` and ``0 <= r < d``.

    The quotient is the floor quotient, so ``euclid_divmod(-3, 2) == (-2, 1)``.
    """
    check_base(d)
    q, r = divmod(a, d)
    return DivMod(q, r)


def quotient(a, d):
    """Floor quotient ``Q_d(a)``."""
    return euclid_divmod(a, d).q


def remainder(a, d):
    """Digit remainder ``R_d(a)`` in ``{0, ..., d-1}``."""
    return euclid_divmod(a, d).r


def exact_div(a, b):
    """Return ``a // b``, asserting that ``b`` divides ``a``.

    A nonzero remainder means a caller computed something wrong, so it is an
    ``ArithmeticError`` rather than a silent rounding.
    """
    if b == 0:
        raise ZeroDivisionError("exact_div by zero")
    q, r = divmod(a, b)
    if r:
        raise ArithmeticError(f"{b} does not divide {a}")
    return q


def residue(a, modulus):
    """``a`` reduced into ``[0, modulus)``."""
    return a % modulus
