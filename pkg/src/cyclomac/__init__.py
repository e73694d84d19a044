"""cyclomac: exact MacMahon-type q-series with cyclotomic denominators.

The package computes the nested series sum over n_1 < ... < n_t (strict or
weak) of products Q(q^(n_j))/Phi_N(q^(n_j))^k, their closed-form Eisenstein
representations over Dirichlet characters and Gauss sums, their decompositions
into polynomials in the single sums, and exact coefficient-wise certificates
that the representations agree.
"""

from .chars import (
    DirichletCharacter,
    enumerate_characters,
    gauss_sum,
    induced_character,
    primitive_character,
    principal_character,
    trivial_character,
    zeta_power_expand,
)
from .comb import (
    Partition,
    binomial,
    cyclotomic_poly,
    divisors,
    euler_phi,
    eulerian_poly,
    factorial,
    factorint,
    gen_bernoulli,
    mobius,
    partitions,
    stirling_first_unsigned,
)
from .field import (
    CycNum,
    LevelMismatchError,
    NotInSubfieldError,
    NotRationalError,
    common_level,
    zeta,
)
from .macmahon import (
    Certificate,
    IsobaricTerm,
    MacMahonSpec,
    brute_force,
    certify,
    evaluate_isobaric,
    evaluate_isobaric_closed,
    isobaric_decomposition,
    power_polynomial,
    weight_series,
)
from .pfdform import (
    AdmissibleInput,
    ClosedForm,
    DegreeTooLargeError,
    InternalMismatchError,
    NonzeroConstantTermError,
    PfdCoefficients,
    SymmetryViolationError,
    ValidationError,
    admissible_polynomials,
    c_coefficients,
    closed_form,
    closed_form_series,
    conjugate_relation_violations,
    pfd_coefficients,
    pole_exponents,
    rational_function_series,
    reconstruct_series,
    to_g_form,
    validate,
    verify_reconstruction,
)
from .polynomial import Polynomial, cyclotomic_polynomial, format_polynomial
from .series import (
    EisensteinTerm,
    NonUnitError,
    OrderMismatchError,
    QSeries,
    f_series,
    g_constant,
    substitute_qn,
)

__version__ = "0.1.0"

__all__ = [
    "AdmissibleInput",
    "Certificate",
    "ClosedForm",
    "CycNum",
    "DegreeTooLargeError",
    "DirichletCharacter",
    "EisensteinTerm",
    "InternalMismatchError",
    "IsobaricTerm",
    "LevelMismatchError",
    "MacMahonSpec",
    "NonUnitError",
    "NonzeroConstantTermError",
    "NotInSubfieldError",
    "NotRationalError",
    "OrderMismatchError",
    "Partition",
    "PfdCoefficients",
    "Polynomial",
    "QSeries",
    "SymmetryViolationError",
    "ValidationError",
    "admissible_polynomials",
    "binomial",
    "brute_force",
    "c_coefficients",
    "certify",
    "closed_form",
    "closed_form_series",
    "common_level",
    "conjugate_relation_violations",
    "cyclotomic_poly",
    "cyclotomic_polynomial",
    "divisors",
    "enumerate_characters",
    "euler_phi",
    "eulerian_poly",
    "evaluate_isobaric",
    "evaluate_isobaric_closed",
    "f_series",
    "factorial",
    "factorint",
    "format_polynomial",
    "g_constant",
    "gauss_sum",
    "gen_bernoulli",
    "induced_character",
    "isobaric_decomposition",
    "mobius",
    "partitions",
    "pfd_coefficients",
    "pole_exponents",
    "power_polynomial",
    "primitive_character",
    "principal_character",
    "rational_function_series",
    "reconstruct_series",
    "stirling_first_unsigned",
    "substitute_qn",
    "to_g_form",
    "trivial_character",
    "validate",
    "verify_reconstruction",
    "weight_series",
    "zeta",
    "zeta_power_expand",
]
