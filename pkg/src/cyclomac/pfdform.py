"""Partial-fraction data for Q(x)/Phi_N(x)^k and the resulting closed-form
Eisenstein representations of the single-sum series sum_n Q(q^n)/Phi_N(q^n)^k.

The pipeline: admissibility validation, exact Taylor data at each primitive
pole, the two independent routes to the weight coefficients (cross-asserted),
and the assembled F-form / G-form term lists.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .chars import (
    enumerate_characters,
    gauss_sum,
    primitive_character,
    trivial_character,
)
from .comb import (
    binomial,
    divisors,
    euler_phi,
    factorial,
    mobius,
    stirling_first_unsigned,
)
from .field import (
    CycNum,
    value_add,
    value_eq,
    value_is_zero,
    value_mul,
    value_str,
    zeta,
)
from .polynomial import Polynomial, cyclotomic_polynomial
from .series import EisensteinTerm, QSeries, g_constant


class ValidationError(ValueError):
    """Base class for admissibility failures; `clause` names the broken rule."""

    clause = "invalid"


class DegreeTooLargeError(ValidationError):
    clause = "degree bound: deg Q < phi(N) * k"


class NonzeroConstantTermError(ValidationError):
    clause = "constant term: Q(0) = 0"


class SymmetryViolationError(ValidationError):
    clause = "functional equation: Q(x) = (-x)^k Q(1/x) for N = 1, " \
             "Q(x) = x^(phi(N) k) Q(1/x) for N >= 2"


class InternalMismatchError(ArithmeticError):
    """The two independent weight-coefficient formulas disagreed (a bug)."""


@dataclass(frozen=True)
class AdmissibleInput:
    """Parameters (N, k, Q) subject to the degree, vanishing, and symmetry rules."""

    N: int
    k: int
    Q: Polynomial

    def phi_times_k(self) -> int:
        return euler_phi(self.N) * self.k


def validate(inp: AdmissibleInput) -> AdmissibleInput:
    """Check all admissibility clauses, raising the one that fails."""
    if inp.N < 1 or inp.k < 1:
        raise ValidationError("N and k must be positive integers")
    bound = inp.phi_times_k()
    if inp.Q.degree() >= bound:
        raise DegreeTooLargeError(
            f"deg Q = {inp.Q.degree()} is not below phi(N)*k = {bound}"
        )
    if inp.Q.coefficient(0) != 0:
        raise NonzeroConstantTermError("Q must vanish at 0")
    if inp.N == 1:
        mirror = Fraction(-1) ** inp.k * inp.Q.reversed_to(inp.k)
    else:
        mirror = inp.Q.reversed_to(bound)
    if mirror != inp.Q:
        raise SymmetryViolationError(
            f"Q = {inp.Q} breaks the reflection rule for N = {inp.N}, k = {inp.k}"
        )
    return inp


def pole_exponents(n: int) -> list[int]:
    """The exponents j <= (N-1)/2 coprime to N, one per conjugate pole pair."""
    return [j for j in range(1, (n - 1) // 2 + 1) if gcd(j, n) == 1]


def _pole_taylor(n: int, k: int, q_poly: Polynomial, s: int) -> list[CycNum]:
    """Taylor coefficients b_0..b_{k-1} of (1 - zeta^s x)^k Q(x)/Phi_N(x)^k
    around the pole x = zeta_N^{-s}, via exact series division in the
    variable u = 1 - zeta_N^s x.
    """
    pole = zeta(n, -s)
    x_of_u = QSeries([pole, -pole], k)
    phi_comp = cyclotomic_polynomial(n)(x_of_u)
    if not value_is_zero(phi_comp.coefficient(0)):
        raise ArithmeticError("expansion point is not a root of the denominator")
    h = QSeries(phi_comp.coeffs[1:], k - 1)
    q_comp = q_poly(x_of_u).truncate(k - 1)
    a_series = q_comp * (h**k).inverse()
    return [
        c if isinstance(c, CycNum) else CycNum.from_rational(n, c)
        for c in a_series.coeffs
    ]


def _derivative_taylor(n: int, k: int, q_poly: Polynomial) -> list[Fraction]:
    """Taylor data for the two rational poles: b_m = (-1)^(m+k) Q^(m)(1)/m!
    at N = 1 and b_m = Q^(m)(-1)/m! at N = 2."""
    point = Fraction(1 if n == 1 else -1)
    out: list[Fraction] = []
    deriv = q_poly
    for m in range(k):
        val = deriv(point) / factorial(m)
        if n == 1:
            val *= Fraction(-1) ** (m + k)
        out.append(val)
        deriv = deriv.derivative()
    return out


def _partial_sums(b: list) -> dict[int, object]:
    """a(r) = sum of b_m for m <= k - r, for r = 1..k."""
    k = len(b)
    out = {}
    acc = Fraction(0)
    sums = []
    for m in range(k):
        acc = value_add(acc, b[m])
        sums.append(acc)
    for r in range(1, k + 1):
        out[r] = sums[k - r]
    return out


def _c_from_a(a: dict[int, object], k: int) -> dict[int, object]:
    out = {}
    for ell in range(1, k + 1):
        acc = Fraction(0)
        for r in range(ell, k + 1):
            st = stirling_first_unsigned(r - 1, ell - 1)
            if st:
                acc = value_add(
                    acc, value_mul(a[r], Fraction(st, factorial(r - 1)))
                )
        out[ell] = acc
    return out


def _c_from_taylor(b: list, k: int) -> dict[int, object]:
    """The derivative-based closed form for the weight coefficients, kept as
    an independent route and cross-asserted against the Stirling sum."""
    out = {}
    for ell in range(1, k + 1):
        acc = Fraction(0)
        for r in range(ell, k + 1):
            st = stirling_first_unsigned(r, ell)
            if not st:
                continue
            w = Fraction(
                factorial(k - r) * binomial(k - 1, r - 1) * st, factorial(k - 1)
            )
            acc = value_add(acc, value_mul(b[k - r], w))
        out[ell] = acc
    return out


@dataclass
class PfdCoefficients:
    """Pole data for Q(x)/Phi_N(x)^k: a-coefficients per pole order, the
    derived weight coefficients c, and the conjugate-pole family (N >= 3)."""

    input: AdmissibleInput
    a: dict = field(default_factory=dict)           # (j, r) -> value
    a_conj: dict | None = None                      # (j, r) -> value, N >= 3
    c: dict | None = None                           # (j, ell) -> value
    c_conj: dict | None = None
    taylor: dict = field(default_factory=dict)      # j -> [b_0..b_{k-1}]
    taylor_conj: dict | None = None


def pfd_coefficients(inp: AdmissibleInput) -> PfdCoefficients:
    """Compute the pole coefficients a(j, r) (and the conjugate family for
    N >= 3) from exact Taylor expansions at each pole."""
    validate(inp)
    n, k = inp.N, inp.k
    out = PfdCoefficients(input=inp)
    if n <= 2:
        b = _derivative_taylor(n, k, inp.Q)
        out.taylor[1] = b
        for r, v in _partial_sums(b).items():
            out.a[(1, r)] = v
        return out
    out.a_conj = {}
    out.taylor_conj = {}
    for j in pole_exponents(n):
        b = _pole_taylor(n, k, inp.Q, j)
        out.taylor[j] = b
        for r, v in _partial_sums(b).items():
            out.a[(j, r)] = v
        b_conj = _pole_taylor(n, k, inp.Q, n - j)
        out.taylor_conj[j] = b_conj
        for r, v in _partial_sums(b_conj).items():
            out.a_conj[(j, r)] = v
    return out


def c_coefficients(p: PfdCoefficients) -> PfdCoefficients:
    """Populate the weight coefficients c(j, ell) by the Stirling sum over
    a(j, r), cross-checked against the direct Taylor formula."""
    k = p.input.k
    p.c = {}
    for j, b in p.taylor.items():
        a_j = {r: p.a[(j, r)] for r in range(1, k + 1)}
        c_def = _c_from_a(a_j, k)
        c_alt = _c_from_taylor(b, k)
        for ell in range(1, k + 1):
            if not value_eq(c_def[ell], c_alt[ell]):
                raise InternalMismatchError(
                    f"weight-coefficient routes disagree at j={j}, ell={ell}: "
                    f"{value_str(c_def[ell])} vs {value_str(c_alt[ell])}"
                )
            p.c[(j, ell)] = c_def[ell]
    if p.taylor_conj is not None:
        p.c_conj = {}
        for j, b in p.taylor_conj.items():
            a_j = {r: p.a_conj[(j, r)] for r in range(1, k + 1)}
            c_def = _c_from_a(a_j, k)
            c_alt = _c_from_taylor(b, k)
            for ell in range(1, k + 1):
                if not value_eq(c_def[ell], c_alt[ell]):
                    raise InternalMismatchError(
                        f"conjugate weight-coefficient routes disagree at "
                        f"j={j}, ell={ell}"
                    )
                p.c_conj[(j, ell)] = c_def[ell]
    return p


def reconstruct_series(p: PfdCoefficients, order: int) -> QSeries:
    """Re-expand the partial-fraction sum as a power series in x; must equal
    the direct series of Q(x)/Phi_N(x)^k."""
    n, k = p.input.N, p.input.k
    coeffs: list = [Fraction(0)] * (order + 1)

    def add_family(values: dict[int, object], root_exp: int):
        # Each pole family contributes a(r) * zeta^(root_exp) x / (1 - zeta^(root_exp) x)^r,
        # whose x^m coefficient is a(r) * binom(m+r-2, r-1) * zeta^(root_exp * m).
        # At N = 2 the root is -1, giving the alternating sign (-1)^m; at N = 1 it is 1.
        for r in range(1, k + 1):
            a_r = values[r]
            if value_is_zero(a_r):
                continue
            for m in range(1, order + 1):
                w = binomial(m + r - 2, r - 1)
                if n <= 2:
                    term = value_mul(a_r, Fraction(w if n == 1 else w * (-1) ** m))
                else:
                    term = value_mul(
                        value_mul(a_r, zeta(n, root_exp * m)), Fraction(w)
                    )
                coeffs[m] = value_add(coeffs[m], term)

    if n <= 2:
        add_family({r: p.a[(1, r)] for r in range(1, k + 1)}, 0)
    else:
        for j in pole_exponents(n):
            add_family({r: p.a[(j, r)] for r in range(1, k + 1)}, j)
            add_family({r: p.a_conj[(j, r)] for r in range(1, k + 1)}, -j)
    return QSeries(coeffs, order)


def rational_function_series(inp: AdmissibleInput, order: int) -> QSeries:
    """The direct power-series expansion of Q(x)/Phi_N(x)^k."""
    phi_series = QSeries.from_polynomial(cyclotomic_polynomial(inp.N), order)
    q_series = QSeries.from_polynomial(inp.Q, order)
    return q_series * (phi_series.inverse() ** inp.k)


def verify_reconstruction(p: PfdCoefficients, order: int | None = None) -> bool:
    if order is None:
        order = 4 * p.input.phi_times_k()
    return reconstruct_series(p, order) == rational_function_series(p.input, order)


@dataclass(frozen=True)
class ClosedForm:
    """A finite combination of Eisenstein series equal to the single sum
    over n of Q(q^n)/Phi_N(q^n)^k.

    In the F-form the constant is zero and the terms are divisor-sum series.
    In the G-form every character is primitive (or trivial), each term reads
    as a completed Eisenstein series, and the constant makes up the exact
    difference at q^0.
    """

    input: AdmissibleInput
    form: str  # "F" or "G"
    terms: tuple[EisensteinTerm, ...]
    constant: object  # Fraction or CycNum

    def evaluate(self, order: int) -> QSeries:
        total = QSeries.zero(order)
        for t in self.terms:
            total = total + t.evaluate(order)
        offset = self.constant
        if self.form == "G":
            for t in self.terms:
                offset = value_add(
                    offset,
                    value_mul(t.coefficient, g_constant(t.weight, t.character)),
                )
        return total + offset

    def to_json(self) -> dict:
        return {
            "form": self.form,
            "N": self.input.N,
            "k": self.input.k,
            "Q": str(self.input.Q),
            "terms": [t.to_json() for t in self.terms],
            "constant": value_str(self.constant),
        }


def _term_sort_key(t: EisensteinTerm):
    return (t.dilation, t.character.modulus, t.character.index, t.weight)


def _merge_terms(acc: dict, key, coefficient):
    if key in acc:
        acc[key] = value_add(acc[key], coefficient)
    else:
        acc[key] = coefficient


def _collect(acc: dict) -> tuple[EisensteinTerm, ...]:
    terms = [
        EisensteinTerm(weight=ell, character=chi, dilation=g, coefficient=coef)
        for (g, chi, ell), coef in acc.items()
        if not value_is_zero(coef)
    ]
    terms.sort(key=_term_sort_key)
    return tuple(terms)


def closed_form(inp: AdmissibleInput) -> ClosedForm:
    """The F-form Eisenstein representation of sum_n Q(q^n)/Phi_N(q^n)^k.

    Weight-ell terms carry dilations g | N and conjugated characters modulo
    N/g of parity (-1)^ell; their scalar weights combine the pole data with
    Gauss sums.  For N <= 2 only the trivial character appears.
    """
    validate(inp)
    n, k = inp.N, inp.k
    p = c_coefficients(pfd_coefficients(inp))
    one = trivial_character()
    acc: dict = {}
    if n == 1:
        for ell in range(2, k + 1, 2):
            _merge_terms(acc, (1, one, ell), p.c[(1, ell)])
    elif n == 2:
        for ell in range(2, k + 1, 2):
            c = p.c[(1, ell)]
            _merge_terms(acc, (2, one, ell), value_mul(c, Fraction(2**ell)))
            _merge_terms(acc, (1, one, ell), value_mul(c, Fraction(-1)))
    else:
        for j in pole_exponents(n):
            for ell in range(1, k + 1):
                c = p.c[(j, ell)]
                if value_is_zero(c):
                    continue
                want_parity = (-1) ** ell
                for g in divisors(n):
                    reduced = n // g
                    scale = Fraction(2 * g ** (ell - 1), euler_phi(reduced))
                    for chi in enumerate_characters(reduced):
                        if chi.parity != want_parity:
                            continue
                        chi_bar = chi.conjugate()
                        coef = value_mul(
                            value_mul(gauss_sum(chi), chi_bar.value(j)),
                            value_mul(c, scale),
                        )
                        _merge_terms(acc, (g, chi_bar, ell), coef)
    return ClosedForm(inp, "F", _collect(acc), Fraction(0))


def to_g_form(cf: ClosedForm) -> ClosedForm:
    """Rewrite an F-form over primitive (or trivial) characters and complete
    each series with its constant term; the returned `constant` is the exact
    q^0 correction, so both forms evaluate to the same series.
    """
    if cf.form != "F":
        raise ValueError("expected an F-form")
    acc: dict = {}
    for t in cf.terms:
        chi = t.character
        psi = primitive_character(chi) if chi.modulus > 1 else chi
        for d in divisors(chi.modulus):
            mu = mobius(d)
            if mu == 0:
                continue
            psi_d = psi.value(d)
            if value_is_zero(psi_d):
                continue
            coef = value_mul(
                t.coefficient,
                value_mul(psi_d, Fraction(mu * d ** (t.weight - 1))),
            )
            _merge_terms(acc, (t.dilation * d, psi, t.weight), coef)
    terms = _collect(acc)
    constant = Fraction(0)
    for t in terms:
        constant = value_add(
            constant,
            value_mul(Fraction(-1), value_mul(t.coefficient,
                                              g_constant(t.weight, t.character))),
        )
    return ClosedForm(cf.input, "G", terms, constant)


def conjugate_relation_violations(inp: AdmissibleInput) -> list[tuple]:
    """Pairs (j, ell, c, c') where the conjugate-pole weight coefficients
    break c'(ell) = (-1)^ell c(ell).  The closed form relies on this
    relation, so violations are surfaced rather than silently absorbed."""
    p = c_coefficients(pfd_coefficients(inp))
    if p.c_conj is None:
        return []
    bad = []
    for (j, ell), c in p.c.items():
        expected = value_mul(c, Fraction((-1) ** ell))
        if not value_eq(p.c_conj[(j, ell)], expected):
            bad.append((j, ell, c, p.c_conj[(j, ell)]))
    return bad


def closed_form_series(inp: AdmissibleInput, order: int) -> QSeries:
    """Evaluate the closed form; for N >= 3 the cyclotomic parts must cancel,
    and the result is returned with plain rational coefficients."""
    return closed_form(inp).evaluate(order).to_rational()


def admissible_polynomials(n: int, k: int) -> list[Polynomial]:
    """The generating family of admissible numerators for (N, k): symmetric
    binomials x^r + x^(D-r) (signed when N = 1 and k is odd) together with
    the middle monomial when D = phi(N) k is even."""
    d = euler_phi(n) * k
    out: list[Polynomial] = []
    sign = (-1) ** k if n == 1 else 1
    for r in range(1, (d + 1) // 2):
        if d - r != r:
            out.append(
                Polynomial.monomial(r) + sign * Polynomial.monomial(d - r)
            )
    if d % 2 == 0 and d >= 2 and (n > 1 or k % 2 == 0):
        out.append(Polynomial.monomial(d // 2))
    return [validate(AdmissibleInput(n, k, q)).Q for q in out]
