"""Exact computations in mapping class groups of the punctured sphere and
the closed genus-2 surface: word problems, Brunnian subgroup membership
and machine-checkable pseudo-Anosov certificates."""

from .braid import (
    BraidWord,
    BrunnianReport,
    Permutation,
    brunnian_check,
    brunnian_example,
    certify_pa_sphere,
    is_trivial_sphere,
    sphere_action,
)
from .budget import DEFAULT_LETTER_CAP, LetterBudget
from .certificate import Certificate, canonical_json, render_letters
from .errors import LetterBudgetExceeded, PreconditionError, WordSyntaxError
from .freegroup import FreeAutomorphism, FreeWord
from .genus2 import (
    MembershipReport,
    TwistWord,
    brunnian_genus2,
    certify_pa_genus2,
    involution_word,
    is_trivial_genus2,
    membership_theorem12,
    project,
)
from .homology import (
    CharPolynomial,
    ModularMatrix,
    SymplecticMatrix,
    casson_bleiler,
    charpoly,
    rho,
    rho_mod,
    transvection,
)
from .parsing import parse_surface, parse_word

__version__ = "0.1.0"

__all__ = [
    "BraidWord",
    "BrunnianReport",
    "Certificate",
    "CharPolynomial",
    "DEFAULT_LETTER_CAP",
    "FreeAutomorphism",
    "FreeWord",
    "LetterBudget",
    "LetterBudgetExceeded",
    "MembershipReport",
    "ModularMatrix",
    "Permutation",
    "PreconditionError",
    "SymplecticMatrix",
    "TwistWord",
    "WordSyntaxError",
    "brunnian_check",
    "brunnian_example",
    "brunnian_genus2",
    "canonical_json",
    "casson_bleiler",
    "certify_pa_genus2",
    "certify_pa_sphere",
    "charpoly",
    "involution_word",
    "is_trivial_genus2",
    "is_trivial_sphere",
    "membership_theorem12",
    "parse_surface",
    "parse_word",
    "project",
    "render_letters",
    "rho",
    "rho_mod",
    "sphere_action",
    "transvection",
]
