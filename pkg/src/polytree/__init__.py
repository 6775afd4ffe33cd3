"""Integer polynomials as endomorphisms of rooted trees and their 2-adic dynamics."""

from .criteria import (
    ConsistencyReport,
    CriteriaReport,
    brute_force_permutation,
    brute_force_transitive,
    census,
    is_ergodic_2adic,
    is_level_transitive_linear,
    is_permutational_2adic,
    larin_criterion,
    verify_consistency,
)
from .errors import (
    DomainError,
    InvalidBase,
    NonLinear,
    NotPermutational,
    ParseError,
    PolytreeError,
    ResourceLimitExceeded,
    UnsupportedBase,
)
from .exact import DivMod, euclid_divmod, exact_div
from .polynomial import (
    IntPolynomial,
    PermutationalProfile,
    compose,
    evaluate,
    parse_polynomial,
    profile,
    render,
    taylor_coefficients,
)
from .tree import (
    LevelMap,
    Orbit,
    Portrait,
    SectionAutomaton,
    Vertex,
    apply_mod,
    level_map,
    linear_section_closure,
    orbit,
    portrait,
    section,
    section_at,
    vertex_image,
)

__version__ = "0.1.0"
