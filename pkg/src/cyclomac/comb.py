"""Integer and rational combinatorics: Stirling numbers, Eulerian polynomials,
integer partitions, multiplicative arithmetic functions, and (generalized)
Bernoulli numbers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb as binomial, factorial  # noqa: F401  (re-exported API)
from typing import TYPE_CHECKING

from .field import value_add, value_inv, value_is_zero, value_mul
from .polynomial import Polynomial, cyclotomic_polynomial

if TYPE_CHECKING:
    from .chars import DirichletCharacter

cyclotomic_poly = cyclotomic_polynomial


def divisors(n: int) -> list[int]:
    """Positive divisors of n in increasing order."""
    if n < 1:
        raise ValueError("divisors expects a positive integer")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def factorint(n: int) -> dict[int, int]:
    """Prime factorization by trial division; fine at the scales used here."""
    if n < 1:
        raise ValueError("factorint expects a positive integer")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def mobius(n: int) -> int:
    f = factorint(n)
    if any(e > 1 for e in f.values()):
        return 0
    return -1 if len(f) % 2 else 1


def euler_phi(n: int) -> int:
    phi = 1
    for p, e in factorint(n).items():
        phi *= (p - 1) * p ** (e - 1)
    return phi


@lru_cache(maxsize=None)
def stirling_first_unsigned(n: int, k: int) -> int:
    """Coefficient of x^k in the rising factorial x(x+1)...(x+n-1)."""
    if n < 0 or k < 0:
        raise ValueError("indices must be nonnegative")
    if n == 0:
        return 1 if k == 0 else 0
    if k == 0 or k > n:
        return 0
    return stirling_first_unsigned(n - 1, k - 1) + (n - 1) * stirling_first_unsigned(
        n - 1, k
    )


@lru_cache(maxsize=None)
def eulerian_poly(k: int) -> Polynomial:
    """Numerator of sum(n^k x^(n-1)) over (1-x)^(k+1); degree k-1 for k >= 1.

    Computed by the derivative recurrence
    P_k = (1 + (k-1) x) P_{k-1} + x (1-x) P_{k-1}'.
    """
    if k < 0:
        raise ValueError("index must be nonnegative")
    if k == 0:
        return Polynomial([1])
    prev = eulerian_poly(k - 1)
    x = Polynomial.x()
    return (1 + (k - 1) * x) * prev + x * (1 - x) * prev.derivative()


@dataclass(frozen=True)
class Partition:
    """A partition of a positive integer, stored as part -> multiplicity."""

    multiplicities: tuple[tuple[int, int], ...]  # sorted (part, multiplicity) pairs

    @classmethod
    def from_parts(cls, parts) -> "Partition":
        mult: dict[int, int] = {}
        for s in parts:
            mult[s] = mult.get(s, 0) + 1
        return cls(tuple(sorted(mult.items())))

    def multiplicity(self, s: int) -> int:
        return dict(self.multiplicities).get(s, 0)

    def total(self) -> int:
        return sum(s * m for s, m in self.multiplicities)

    def parts(self) -> list[int]:
        out: list[int] = []
        for s, m in sorted(self.multiplicities, reverse=True):
            out.extend([s] * m)
        return out


def partitions(n: int) -> list[Partition]:
    """All partitions of n, ordered lexicographically by descending part lists."""
    if n < 1:
        raise ValueError("partitions are defined for positive integers")

    def gen(remaining: int, cap: int, prefix: list[int]):
        if remaining == 0:
            yield list(prefix)
            return
        for part in range(min(cap, remaining), 0, -1):
            prefix.append(part)
            yield from gen(remaining - part, part, prefix)
            prefix.pop()

    return [Partition.from_parts(p) for p in gen(n, n, [])]


def _series_mul(a: list, b: list, order: int) -> list:
    out = [Fraction(0)] * (order + 1)
    for i, x in enumerate(a[: order + 1]):
        for j, y in enumerate(b[: order + 1 - i]):
            out[i + j] = value_add(out[i + j], value_mul(x, y))
    return out


def _series_inv(a: list, order: int) -> list:
    inv0 = value_inv(a[0])
    out = [inv0] + [Fraction(0)] * order
    for n in range(1, order + 1):
        acc = Fraction(0)
        for i in range(1, min(n, len(a) - 1) + 1):
            acc = value_add(acc, value_mul(a[i], out[n - i]))
        out[n] = value_mul(-inv0, acc)
    return out


def gen_bernoulli(k: int, chi: "DirichletCharacter"):
    """k-th generalized Bernoulli number of chi, from the exponential
    generating function sum_a chi(a) t e^(a t) / (e^(N t) - 1).

    Exact truncated series arithmetic over the character's value field; the
    trivial character modulo 1 yields the classical Bernoulli numbers (with
    the e^t-in-the-numerator sign convention, so the weight-1 value is +1/2).
    """
    if k < 0:
        raise ValueError("index must be nonnegative")
    n_mod = chi.modulus
    order = k
    # numerator/t = sum_a chi(a) e^(a t); denominator/t = (e^(N t) - 1)/t.
    num = [Fraction(0)] * (order + 1)
    for a in range(1, n_mod + 1):
        v = chi.value(a)
        if value_is_zero(v):
            continue
        power = Fraction(1)
        for i in range(order + 1):
            num[i] = value_add(num[i], value_mul(v, power))
            power = power * a / (i + 1)
    den = [Fraction(n_mod) ** (i + 1) / factorial(i + 1) for i in range(order + 1)]
    series = _series_mul(num, _series_inv(den, order), order)
    return value_mul(series[k], factorial(k))
