"""Permutationality and level-transitivity of polynomials on the binary tree.

The closed-form tests only look at coefficient congruences.  The brute-force
oracles only evaluate the polynomial modulo ``d**n``; they never touch the
section machinery, so the two can be cross-checked against each other.
"""

import itertools
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

import numpy as np

from .errors import NonLinear, UnsupportedBase
from .exact import check_base
from .polynomial import (
    IntPolynomial,
    PermutationalProfile,
    even_sum,
    odd_sum,
    profile,
    render,
)
from .tree import check_table_size, portrait

PERMUTATIONAL = "permutational-2adic"
ERGODIC = "ergodic-2adic"
LINEAR_TRANSITIVE = "linear-transitive"


@dataclass(frozen=True)
class Condition:
    label: str
    description: str
    lhs: int
    rhs: int
    modulus: int
    holds: bool


def congruence(label, description, lhs, rhs, modulus):
    lhs, rhs = lhs % modulus, rhs % modulus
    return Condition(label, description, lhs, rhs, modulus, lhs == rhs)


@dataclass(frozen=True)
class CriteriaReport:
    kind: str
    conditions: tuple
    profile: PermutationalProfile = None

    @property
    def verdict(self):
        return all(c.holds for c in self.conditions)

    @property
    def failed(self):
        return [c for c in self.conditions if not c.holds]

    def to_dict(self):
        return {
            "kind": self.kind,
            "verdict": self.verdict,
            "conditions": [asdict(c) for c in self.conditions],
            "profile": None if self.profile is None else self.profile._asdict(),
        }

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=False)

    def text(self):
        lines = [f"{self.kind}: {'true' if self.verdict else 'false'}"]
        for c in self.conditions:
            mark = "ok  " if c.holds else "FAIL"
            lines.append(f"  [{mark}] {c.label}: {c.description}  ({c.lhs} vs {c.rhs} mod {c.modulus})")
        if self.profile is not None:
            p = self.profile
            lines.append(f"  profile: k={p.k} m={p.m} n={p.n}")
        return "\n".join(lines) + "\n"


def _require_binary(d):
    if d != 2:
        raise UnsupportedBase(
            f"closed-form criteria are only available for d = 2 (got d = {d})"
        )


def _rivest_conditions(f):
    return [
        congruence("rivest-i", "a_1 ≡ 1 (mod 2)", f[1], 1, 2),
        congruence("rivest-ii", "a_2 + a_4 + a_6 + ... ≡ 0 (mod 2)", even_sum(f), 0, 2),
        congruence("rivest-iii", "a_3 + a_5 + a_7 + ... ≡ 0 (mod 2)", odd_sum(f), 0, 2),
    ]


def _transitivity_conditions(f):
    return [
        congruence("main-i", "a_0 ≡ 1 (mod 2)", f[0], 1, 2),
        congruence("main-ii", "2a_2 ≡ a_3 + a_5 + ... (mod 4)", 2 * f[2], odd_sum(f), 4),
        congruence("main-iii", "a_2 + a_1 - 1 ≡ a_4 + a_6 + ... (mod 4)",
                   f[2] + f[1] - 1, even_sum(f) - f[2], 4),
    ]


def _profile_or_none(conditions, f):
    return profile(f) if all(c.holds for c in conditions) else None


def is_permutational_2adic(f, d=2):
    """Does ``f`` permute ``Z/2^n`` for every ``n``?"""
    _require_binary(d)
    conditions = _rivest_conditions(f)
    return CriteriaReport(PERMUTATIONAL, tuple(conditions), _profile_or_none(conditions, f))


def is_ergodic_2adic(f, d=2):
    """Is ``f`` transitive on every level of the binary tree?

    Lists the three permutationality conditions first, then the constant-term
    parity and the two mod-4 conditions on the coefficients.
    """
    _require_binary(d)
    rivest = _rivest_conditions(f)
    conditions = rivest + _transitivity_conditions(f)
    return CriteriaReport(ERGODIC, tuple(conditions), _profile_or_none(rivest, f))


def larin_criterion(f):
    """Four-condition form of the ergodicity test, kept separate for cross-checking."""
    a = f.coefficients
    odd_tail = sum(a[3::2])
    even_tail = sum(a[4::2])
    a0, a1, a2 = f[0], f[1], f[2]
    return (
        a0 % 2 == 1
        and a1 % 2 == 1
        and (2 * a2 - odd_tail) % 4 == 0
        and (a2 + a1 - 1 - even_tail) % 4 == 0
    )


def is_level_transitive_linear(f):
    if f.degree > 1:
        raise NonLinear(f"{render(f)} is not linear")
    b, a = f[0], f[1]
    conditions = (
        congruence("linear-i", "b ≡ 1 (mod 2)", b, 1, 2),
        congruence("linear-ii", "a ≡ 1 (mod 4)", a, 1, 4),
    )
    return CriteriaReport(LINEAR_TRANSITIVE, conditions, None)


# -- brute-force oracles -----------------------------------------------------

def _images(f, d, n, limit=None):
    size = check_table_size(d, n, limit)
    xs = np.arange(size, dtype=np.int64)
    acc = np.zeros(size, dtype=np.int64)
    for c in reversed(f.coefficients):
        acc = (acc * xs + (c % size)) % size
    return acc


def brute_force_permutation(f, d, n, limit=None):
    check_base(d)
    images = _images(f, d, n, limit)
    return bool(np.all(np.bincount(images, minlength=len(images)) == 1))


def _single_cycle(images):
    size = len(images)
    if not np.all(np.bincount(images, minlength=size) == 1):
        return False
    table = images.tolist()
    x = table[0]
    steps = 1
    while x != 0:
        x = table[x]
        steps += 1
    return steps == size


def brute_force_transitive(f, d, n, limit=None):
    """Is the forward orbit of 0 under ``f mod d**n`` a single cycle of length ``d**n``?"""
    check_base(d)
    return _single_cycle(_images(f, d, n, limit))


# -- consistency --------------------------------------------------------------

MIN_VERIFY_LEVELS = 3


@dataclass(frozen=True)
class ConsistencyReport:
    polynomial: str
    levels_checked: int
    permutational_verdict: bool
    criterion_verdict: bool
    bijective_up_to: list
    single_cycle_up_to: list
    switch_parity_up_to: list = field(default=None)
    agree: bool = False

    def to_dict(self):
        return asdict(self)

    def to_json(self):
        return json.dumps(self.to_dict())

    def text(self):
        def row(xs):
            return " ".join("1" if x else "0" for x in xs)
        lines = [
            f"polynomial: {self.polynomial}",
            f"levels: {self.levels_checked}",
            f"permutational (criterion): {str(self.permutational_verdict).lower()}",
            f"ergodic (criterion): {str(self.criterion_verdict).lower()}",
            f"bijective mod 2^n, n=1..{self.levels_checked}: {row(self.bijective_up_to)}",
            f"single cycle mod 2^n, n=1..{self.levels_checked}: {row(self.single_cycle_up_to)}",
        ]
        if self.switch_parity_up_to is not None:
            lines.append(
                f"odd switches on levels 0..l, l=0..{self.levels_checked - 1}: "
                f"{row(self.switch_parity_up_to)}"
            )
        lines.append(f"agree: {str(self.agree).lower()}")
        return "\n".join(lines) + "\n"


def verify_consistency(f, n_max, limit=None):
    """Cross-check both criteria against exhaustive computation up to ``2**n_max``.

    Pairings: the permutational verdict against bijectivity at every level,
    the ergodic verdict against a single cycle at every level, and (for
    permutational ``f``) odd switch counts on levels ``0..l`` against a single
    cycle at level ``l+1``.
    """
    if n_max < MIN_VERIFY_LEVELS:
        raise ValueError(f"at least {MIN_VERIFY_LEVELS} levels are needed to decide the criteria")
    check_table_size(2, n_max, limit)
    perm = is_permutational_2adic(f).verdict
    ergodic = is_ergodic_2adic(f).verdict
    bijective = [brute_force_permutation(f, 2, n) for n in range(1, n_max + 1)]
    cycles = [brute_force_transitive(f, 2, n) for n in range(1, n_max + 1)]
    agree = perm == all(bijective) and ergodic == all(cycles)
    parity = None
    if perm:
        counts = portrait(f, 2, n_max - 1).switch_counts
        parity = list(itertools.accumulate((c % 2 == 1 for c in counts), lambda a, b: a and b))
        agree = agree and parity == cycles
    return ConsistencyReport(render(f), n_max, perm, ergodic, bijective, cycles, parity, agree)


# -- exhaustive census ---------------------------------------------------------

def corpus(lo=-3, hi=3, degree=4):
    """All polynomials of degree <= ``degree`` with coefficients in ``[lo, hi]``."""
    for coeffs in itertools.product(range(lo, hi + 1), repeat=degree + 1):
        yield IntPolynomial(coeffs)


def _census_row(coeffs, n_max):
    f = IntPolynomial(coeffs)
    perm = is_permutational_2adic(f).verdict
    ergodic = is_ergodic_2adic(f).verdict
    bij = all(brute_force_permutation(f, 2, n) for n in range(1, n_max + 1))
    cyc = all(brute_force_transitive(f, 2, n) for n in range(1, n_max + 1))
    return coeffs, perm, bij, ergodic, cyc


@dataclass
class CensusResult:
    total: int = 0
    permutational: int = 0
    ergodic: int = 0
    permutation_mismatches: list = field(default_factory=list)
    ergodic_mismatches: list = field(default_factory=list)


def census(lo=-3, hi=3, degree=4, n_max=10, workers=1):
    """Compare both criteria with brute force over an exhaustive corpus."""
    rows = [f.coefficients for f in corpus(lo, hi, degree)]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(_census_row, rows, itertools.repeat(n_max), chunksize=256))
    else:
        results = [_census_row(r, n_max) for r in rows]
    out = CensusResult(total=len(results))
    for coeffs, perm, bij, ergodic, cyc in results:
        out.permutational += perm
        out.ergodic += ergodic
        if perm != bij:
            out.permutation_mismatches.append(coeffs)
        if ergodic != cyc:
            out.ergodic_mismatches.append(coeffs)
    return out
