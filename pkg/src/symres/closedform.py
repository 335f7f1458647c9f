"""Closed-form evaluation of the gradient-system resultant.

Three routes live here:

* ``closed_form_resultant`` evaluates the factored formula in the normalized
  coefficients (b1, b2, b3); total for every valid cubic, including the
  strata where the reduction is undefined.
* ``resultant_via_reduction`` runs the derivation chain: reduce to
  F_i = x_i^2 + 2a*x_i*s1 + b*s1^2, take the sign-vector (Poisson) product,
  and undo the linear transformation's determinant scaling.
* ``poisson_product`` / ``grouped_product`` are the two equivalent forms of
  the reduced system's resultant, one in quadratic-extension arithmetic over
  all 2^n sign vectors, one as a binomially weighted rational product.

Two normalizations appear. The canonical one pins R{x_1^2,...,x_n^2} = 1
(the Macaulay convention, and this library's ground truth); the raw factored
formula evaluates to exactly 2^(2^(n-1)) times that, a constant ratio that is
reported rather than hidden.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .polycore import QuadExt, Scalar, format_scalar, quad_product
from .symcubic import NormalizedCoeffs, ReducedParams, SymmetricCubic


class BinomialTable:
    """Pascal-recurrence table of binomial coefficients, grown on demand."""

    def __init__(self) -> None:
        self._rows: list[list[int]] = [[1]]

    def row(self, p: int) -> list[int]:
        while len(self._rows) <= p:
            prev = self._rows[-1]
            self._rows.append(
                [1] + [prev[i] + prev[i + 1] for i in range(len(prev) - 1)] + [1])
        return self._rows[p]

    def choose(self, p: int, q: int) -> int:
        if p < 0 or q < 0 or q > p:
            raise ValueError(f"binomial({p}, {q}) out of range")
        return self.row(p)[q]


_TABLE = BinomialTable()


def binomial(p: int, q: int) -> int:
    """Exact C(p, q) via the Pascal recurrence; 0 <= q <= p required."""
    return _TABLE.choose(p, q)


def formula_to_canonical_ratio(n: int) -> Fraction:
    """Constant ratio between the raw factored formula and the canonical value."""
    return Fraction(2) ** (2 ** (n - 1))


@dataclass(frozen=True)
class ReportFactor:
    k: int
    value: Fraction
    exponent: int


@dataclass(frozen=True)
class ResultantReport:
    """Both normalizations of the resultant plus its factor structure.

    ``formula_value`` is the factored closed form evaluated verbatim;
    ``canonical_value`` is the Macaulay-normalized resultant, smaller by the
    constant 2^(2^(n-1)). ``factors`` are the parenthesized factors of the
    formula with their binomial exponents, so formula_value equals
    b3^((n-3)*2^(n-1)) times the product of value**exponent.
    """

    canonical_value: Fraction
    formula_value: Fraction
    factors: tuple[ReportFactor, ...]
    vanishes: bool
    normalization_ratio: Fraction | None

    def to_json_dict(self) -> dict:
        return {
            "canonical": format_scalar(self.canonical_value),
            "paper": format_scalar(self.formula_value),
            "vanishes": self.vanishes,
            "factors": [
                {"k": f.k, "Y": format_scalar(f.value), "exp": f.exponent}
                for f in self.factors
            ],
            "ratio": None if self.normalization_ratio is None
            else format_scalar(self.normalization_ratio),
        }


def closed_form_factor(bp: NormalizedCoeffs, n: int, k: int) -> Scalar:
    """The k-th parenthesized factor of the factored resultant formula:
    (6*(n-2k)^2/n^2)*b1*b3^2 - (k*(n-k)/n^2)*b2^3."""
    if not 0 <= k <= n - 1:
        raise ValueError(f"k={k} out of range 0..{n - 1}")
    nn = n * n
    return (Fraction(6 * (n - 2 * k) ** 2, nn) * bp.b1 * bp.b3 ** 2
            - Fraction(k * (n - k), nn) * bp.b2 ** 3)


def closed_form_resultant(sc: SymmetricCubic) -> ResultantReport:
    """Evaluate the factored formula; total on every stratum.

    The b3 prefactor exponent (n-3)*2^(n-1) uses the 0**0 = 1 convention at
    n = 3, where the prefactor is absent from the factored form.
    """
    n = sc.n
    bp = sc.normalized_coeffs()
    prefactor_exp = (n - 3) * 2 ** (n - 1)
    prefactor = Fraction(1) if prefactor_exp == 0 else bp.b3 ** prefactor_exp
    factors = []
    formula_value = prefactor
    for k in range(n):
        value = closed_form_factor(bp, n, k)
        exponent = binomial(n - 1, k)
        factors.append(ReportFactor(k=k, value=value, exponent=exponent))
        formula_value *= value ** exponent
    canonical = formula_value / formula_to_canonical_ratio(n)
    vanishes = canonical == 0
    return ResultantReport(
        canonical_value=canonical,
        formula_value=formula_value,
        factors=tuple(factors),
        vanishes=vanishes,
        normalization_ratio=None if vanishes else formula_value / canonical,
    )


def canonical_factor(sc: SymmetricCubic, k: int) -> Scalar:
    """k-th factor of the canonical resultant's product form.

    canonical = product over k = 0..n-1 of canonical_factor(sc, k)**C(n-1, k);
    each factor is (a3^(n-3)/8) * (d^3 - (n-2k)^2 * ((a2+a3)^2*d - 4*a3*N))
    with N = 6*a1*a3 + a2*a3 - a2^2. Satisfies the exact identity
    2 * canonical_factor == closed_form_factor * a3^(n-3).
    """
    n = sc.n
    if not 0 <= k <= n - 1:
        raise ValueError(f"k={k} out of range 0..{n - 1}")
    d = 2 * sc.a3 - n * (sc.a2 + sc.a3)
    inner = 6 * sc.a1 * sc.a3 + sc.a2 * sc.a3 - sc.a2 ** 2
    body = d ** 3 - (n - 2 * k) ** 2 * ((sc.a2 + sc.a3) ** 2 * d - 4 * sc.a3 * inner)
    lead = Fraction(1) if n == 3 else sc.a3 ** (n - 3)
    return Fraction(lead, 8) * body


def poisson_product(rp: ReducedParams, n: int, enumerate_full: bool = False) -> Scalar:
    """Resultant of the reduced system as a product over sign vectors.

    Each of the 2^n sign vectors (e_1,...,e_n) in {+1,-1}^n contributes the
    factor 1 + n*a + r*sum(e_j) with r^2 = a^2 - b. The product is computed
    in quadratic-extension arithmetic; it is symmetric under r -> -r, so the
    radical part cancels exactly and the rational part is returned.

    Grouping vectors by their number of -1 entries collapses the product to
    n+1 distinct factors with multiplicities C(n, j); ``enumerate_full``
    forces the literal 2^n enumeration instead (self-check, n small).
    """
    delta = rp.radicand
    base = QuadExt.lift(1 + n * rp.a, delta)
    r = QuadExt(0, 1, delta)
    if enumerate_full:
        factors = []
        for signs in itertools.product((1, -1), repeat=n):
            factors.append(base + r * sum(signs))
        total = quad_product(factors)
    else:
        total = QuadExt.lift(1, delta)
        for j in range(n + 1):
            total = total * (base + r * (n - 2 * j)) ** binomial(n, j)
    if total.radical != 0:
        raise AssertionError("sign-vector product has nonzero radical part")
    return total.rational


def grouped_product(rp: ReducedParams, n: int) -> Scalar:
    """Rational form of the sign-vector product.

    Pairing every sign vector with its negation multiplies conjugates, giving
    product over k = 0..n-1 of
    [(1 + n*a)^2 - (a^2 - b)*(n-2k)^2] ** C(n-1, k);
    note the minus sign (conjugate pairs multiply to c^2 - r^2*m^2).
    """
    c = 1 + n * rp.a
    total = Fraction(1)
    for k in range(n):
        total *= (c * c - rp.radicand * (n - 2 * k) ** 2) ** binomial(n - 1, k)
    return total


def resultant_via_reduction(sc: SymmetricCubic) -> Scalar:
    """Canonical resultant through the derivation chain.

    The reduction F = T * grad(S) has det(T) = 2/(a3^(n-1)*d), and the
    resultant of n quadratic forms picks up det(T)^(2^(n-1)) under linear
    combinations of the forms, so
    R{grad S} = poisson_product * (a3^(n-1)*d/2)^(2^(n-1)).
    Raises TransformationUndefinedError where the reduction fails.
    """
    rp = sc.reduced_params()
    n = sc.n
    scale = (sc.a3 ** (n - 1) * rp.d / 2) ** (2 ** (n - 1))
    return poisson_product(rp, n) * scale
