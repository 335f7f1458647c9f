"""Symmetric cubic polynomials in coefficient form.

A symmetric cubic in n >= 3 variables is uniquely a1*s1^3 + a2*s1*s2 + a3*s3
in the elementary symmetric polynomials s1, s2, s3; this module holds that
representation, its gradient system of n quadratic forms, and the two
coefficient transformations the resultant formulas are phrased in.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .polycore import MultiPoly, ScalarLike, elem_sym, format_scalar, parse_scalar


class TransformationUndefinedError(ValueError):
    """The reduction to coordinate-quadratic form needs a3 != 0 and d != 0."""


@dataclass(frozen=True)
class ReducedParams:
    """Parameters of the reduced quadratic system F_i = x_i^2 + 2a*x_i*s1 + b*s1^2.

    Every coordinate of a common root of the gradient system satisfies
    z^2 + 2*a*s1*z + b*s1^2 = 0, so `a` and `b` determine root structure.
    `d` = 2*a3 - n*(a2 + a3) is the scale factor of the eliminating linear
    transformation; `radicand` = a^2 - b is the discriminant parameter of the
    shared quadratic.
    """

    a: Fraction
    b: Fraction
    d: Fraction
    radicand: Fraction


@dataclass(frozen=True)
class NormalizedCoeffs:
    """Coefficient triple in which the closed-form resultant factors nicely.

    b1 is the value of the cubic at the all-ones point divided by n, b2 is
    the negative of the reduction scale factor d, and b3 is the s3
    coefficient.
    """

    b1: Fraction
    b2: Fraction
    b3: Fraction


class SymmetricCubic:
    """The triple (a1, a2, a3) plus dimension n representing a1*s1^3 + a2*s1*s2 + a3*s3."""

    __slots__ = ("n", "a1", "a2", "a3")

    def __init__(self, n: int, a1: ScalarLike, a2: ScalarLike, a3: ScalarLike):
        if n < 3:
            raise ValueError(f"n must be >= 3, got {n} (the s-basis is not faithful below 3)")
        self.n = int(n)
        self.a1 = Fraction(a1)
        self.a2 = Fraction(a2)
        self.a3 = Fraction(a3)
        if self.a1 == 0 and self.a2 == 0 and self.a3 == 0:
            raise ValueError("the zero polynomial is not a valid symmetric cubic")

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymmetricCubic):
            return NotImplemented
        return (self.n, self.a1, self.a2, self.a3) == (other.n, other.a1, other.a2, other.a3)

    def __hash__(self):
        return hash((self.n, self.a1, self.a2, self.a3))

    def __repr__(self) -> str:
        return (f"SymmetricCubic(n={self.n}, a1={format_scalar(self.a1)}, "
                f"a2={format_scalar(self.a2)}, a3={format_scalar(self.a3)})")

    # -- polynomial views ----------------------------------------------------

    def expand(self) -> MultiPoly:
        """Explicit polynomial a1*s1^3 + a2*s1*s2 + a3*s3 in n variables."""
        s1 = elem_sym(self.n, 1)
        s2 = elem_sym(self.n, 2)
        s3 = elem_sym(self.n, 3)
        return s1 * s1 * s1 * self.a1 + s1 * s2 * self.a2 + s3 * self.a3

    def gradient_system(self) -> list[MultiPoly]:
        """The n quadratic forms dS/dx_i.

        Built from the closed coefficient formula
        a3*x_i^2 - (a2+a3)*x_i*s1 + (3a1+a2)*s1^2 + (a2+a3)*s2
        and cross-checked against direct differentiation of expand().
        """
        n = self.n
        s1 = elem_sym(n, 1)
        s2 = elem_sym(n, 2)
        s1sq = s1 * s1
        expanded = self.expand()
        forms = []
        for i in range(n):
            xi = MultiPoly.variable(n, i)
            form = (xi * xi * self.a3
                    - xi * s1 * (self.a2 + self.a3)
                    + s1sq * (3 * self.a1 + self.a2)
                    + s2 * (self.a2 + self.a3))
            direct = expanded.partial(i)
            if form != direct:
                raise AssertionError(
                    f"gradient formula disagrees with differentiation at i={i}")
            forms.append(form)
        return forms

    # -- coefficient transformations ------------------------------------------

    def reduced_params(self) -> ReducedParams:
        """Parameters (a, b) of the reduced system; needs a3 != 0 and d != 0."""
        n = self.n
        d = 2 * self.a3 - n * (self.a2 + self.a3)
        if self.a3 == 0 or d == 0:
            raise TransformationUndefinedError(
                f"reduction undefined: a3={format_scalar(self.a3)}, d={format_scalar(d)}")
        a = Fraction(-(self.a2 + self.a3), 1) / (2 * self.a3)
        b = (6 * self.a1 * self.a3 + self.a2 * self.a3 - self.a2 ** 2) / (self.a3 * d)
        return ReducedParams(a=a, b=b, d=d, radicand=a * a - b)

    def reduced_system(self) -> list[MultiPoly]:
        """The n reduced forms F_i = x_i^2 + 2a*x_i*s1 + b*s1^2.

        Also computed as (1/a3)*dS_i + (a2+a3)/(a3*d) * sum_j dS_j and
        asserted equal: the linear combination eliminates the s2 term.
        """
        rp = self.reduced_params()
        n = self.n
        s1 = elem_sym(n, 1)
        s1sq = s1 * s1
        grads = self.gradient_system()
        grad_sum = grads[0]
        for g in grads[1:]:
            grad_sum = grad_sum + g
        mix = (self.a2 + self.a3) / (self.a3 * rp.d)
        forms = []
        for i in range(n):
            xi = MultiPoly.variable(n, i)
            form = xi * xi + xi * s1 * (2 * rp.a) + s1sq * rp.b
            via_transform = grads[i] * (Fraction(1) / self.a3) + grad_sum * mix
            if form != via_transform:
                raise AssertionError(
                    f"reduced-form formula disagrees with the linear transformation at i={i}")
            forms.append(form)
        return forms

    def normalized_coeffs(self) -> NormalizedCoeffs:
        """Exact linear coefficient change (b1, b2, b3); always defined."""
        n = self.n
        return NormalizedCoeffs(
            b1=n * n * self.a1 + Fraction(n * (n - 1), 2) * self.a2
               + Fraction((n - 1) * (n - 2), 6) * self.a3,
            b2=n * self.a2 + (n - 2) * self.a3,
            b3=self.a3,
        )

    # -- serialization ---------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "A1": format_scalar(self.a1),
            "A2": format_scalar(self.a2),
            "A3": format_scalar(self.a3),
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "SymmetricCubic":
        return cls(
            int(data["n"]),
            parse_scalar(str(data["A1"])),
            parse_scalar(str(data["A2"])),
            parse_scalar(str(data["A3"])),
        )


def decompose(p: MultiPoly) -> SymmetricCubic:
    """Recover the unique (a1, a2, a3) with expand() == p.

    The coefficients of x1^3, x1^2*x2 and x1*x2*x3 determine the triple
    through a triangular system: probing beats solving a generic linear
    system and is exact.
    """
    n = p.num_vars
    if n < 3:
        raise ValueError(f"need at least 3 variables, got {n}")
    if p.is_zero():
        raise ValueError("the zero polynomial is not a valid symmetric cubic")
    if not p.is_homogeneous() or p.total_degree() != 3:
        raise ValueError("polynomial is not homogeneous of degree 3")
    if not p.is_symmetric():
        raise ValueError("polynomial is not symmetric")

    def probe(*exps_head: int) -> Fraction:
        exps = tuple(list(exps_head) + [0] * (n - len(exps_head)))
        return p.coefficient(exps)

    c_cube = probe(3)        # a1
    c_square = probe(2, 1)   # 3*a1 + a2
    c_mixed = probe(1, 1, 1)  # 6*a1 + 3*a2 + a3
    a1 = c_cube
    a2 = c_square - 3 * a1
    a3 = c_mixed - 6 * a1 - 3 * a2
    return SymmetricCubic(n, a1, a2, a3)
