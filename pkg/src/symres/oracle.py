"""Independent ground truth: Macaulay-matrix resultants over exact rationals,
a Sylvester cross-check for binary systems, and common-root witnesses for
symmetric cubic gradient systems.

The Macaulay construction used here, pinned for reproducibility among the
classical variants: at critical degree nu = sum(d_i - 1) + 1, columns are the
degree-nu monomials in canonical (descending grevlex) order; each column
monomial x^beta is assigned to the least index i with x_i^(d_i) dividing
x^beta, and contributes the row (x^beta / x_i^(d_i)) * F_i. The resultant is
det(M)/det(M'), where M' restricts rows and columns to the monomials
divisible by x_i^(d_i) for at least two indices i. Rows are kept in column
order, which fixes the sign so that R{x_1^(d_1),...,x_n^(d_n)} = 1.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .polycore import MultiPoly, QuadExt, Scalar, monomials_of_degree
from .symcubic import SymmetricCubic

MAX_MATRIX_ENTRIES = 10 ** 6


class MatrixSizeError(RuntimeError):
    """The Macaulay matrix would exceed the exact-arithmetic size budget."""


class DegenerateDenominatorError(RuntimeError):
    """All evaluation strategies failed to produce a usable denominator minor."""


# ---------------------------------------------------------------------------
# determinants

def det_bareiss(rows: list[list[int]]) -> int:
    """Determinant of an integer matrix by fraction-free Bareiss elimination.

    Intermediate entries are k x k minors of the input, so every division is
    exact and growth stays polynomial instead of exponential.
    """
    m = [row[:] for row in rows]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        row_k = m[k]
        for i in range(k + 1, n):
            row_i = m[i]
            factor = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (pivot * row_i[j] - factor * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def det_rational(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    """Determinant of a rational matrix: clear denominators per row, then Bareiss."""
    scale = 1
    int_rows = []
    for row in rows:
        lcm = 1
        for x in row:
            lcm = lcm * x.denominator // math.gcd(lcm, x.denominator)
        scale *= lcm
        int_rows.append([int(x * lcm) for x in row])
    return Fraction(det_bareiss(int_rows), scale)


# ---------------------------------------------------------------------------
# Macaulay resultant

@dataclass(frozen=True)
class MacaulaySystem:
    """n homogeneous forms in n variables with their degrees."""

    forms: tuple[MultiPoly, ...]
    degrees: tuple[int, ...]

    def __post_init__(self):
        if len(self.forms) != len(self.degrees):
            raise ValueError("forms and degrees length mismatch")
        n = len(self.forms)
        for i, (f, d) in enumerate(zip(self.forms, self.degrees)):
            if f.num_vars != n:
                raise ValueError(f"form {i} has {f.num_vars} variables, expected {n}")
            if d < 1:
                raise ValueError(f"degree {d} of form {i} must be positive")
            if not f.is_zero() and (not f.is_homogeneous() or f.total_degree() != d):
                raise ValueError(f"form {i} is not homogeneous of degree {d}")

    @classmethod
    def from_forms(cls, forms: Sequence[MultiPoly]) -> "MacaulaySystem":
        degrees = []
        for i, f in enumerate(forms):
            if f.is_zero():
                raise ValueError(f"form {i} is zero; specify degrees explicitly")
            degrees.append(f.total_degree())
        return cls(tuple(forms), tuple(degrees))


def _build_matrix(forms, n, degrees):
    """Macaulay matrix rows (column order) plus the non-reduced column indices."""
    nu = sum(d - 1 for d in degrees) + 1
    cols = monomials_of_degree(n, nu)
    col_index = {mono: i for i, mono in enumerate(cols)}
    rows = []
    non_reduced = []
    for ci, beta in enumerate(cols):
        divisors = [i for i in range(n) if beta[i] >= degrees[i]]
        if len(divisors) >= 2:
            non_reduced.append(ci)
        i = divisors[0]
        alpha = list(beta)
        alpha[i] -= degrees[i]
        row = [Fraction(0)] * len(cols)
        for exps, c in forms[i].terms.items():
            shifted = tuple(a + b for a, b in zip(exps, alpha))
            row[col_index[shifted]] = c
        rows.append(row)
    return rows, non_reduced


def _det_ratio(forms, n, degrees) -> Optional[Fraction]:
    """det(M)/det(M'), or None when the denominator minor vanishes."""
    rows, non_reduced = _build_matrix(forms, n, degrees)
    sub = [[rows[r][c] for c in non_reduced] for r in non_reduced]
    det_sub = det_rational(sub)
    if det_sub == 0:
        return None
    return det_rational(rows) / det_sub


class _Lcg:
    """Tiny deterministic generator for fallback substitution matrices.

    Self-contained so retry matrices are identical across platforms and
    library versions.
    """

    def __init__(self, seed: int):
        self.state = (seed * 0x9E3779B97F4A7C15 + 1) & (2 ** 64 - 1)

    def small_entry(self) -> int:
        self.state = (self.state * 6364136223846793005 + 1442695040888963407) & (2 ** 64 - 1)
        return (self.state >> 33) % 5 - 2  # in {-2,...,2}


def _substitution_matrix(seed: int, n: int) -> list[list[int]]:
    gen = _Lcg(seed)
    return [[gen.small_entry() for _ in range(n)] for _ in range(n)]


def _newton_coefficients(xs: list[Fraction], ys: list[Fraction]) -> list[Fraction]:
    """Interpolating polynomial coefficients (ascending) via divided differences."""
    n = len(xs)
    dd = list(ys)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j])
    poly = [Fraction(0)] * n
    basis = [Fraction(1)]
    for k in range(n):
        for i, c in enumerate(basis):
            poly[i] += dd[k] * c
        shifted = [Fraction(0)] * (len(basis) + 1)
        for i, c in enumerate(basis):
            shifted[i + 1] += c
            shifted[i] -= xs[k] * c
        basis = shifted
    return poly


def _pencil_value(forms, n, degrees) -> Fraction:
    """Resultant via the diagonal pencil, for denominators that never unstick.

    Adding t to the diagonal of the Macaulay matrix realizes the deformed
    system {F_i + t*x_i^(d_i)}; det(M + tI) and det(M' + tI) are monic, hence
    nonzero, polynomials in t, and their exact ratio R(t) is the deformed
    resultant, a polynomial whose value at t = 0 is the answer. It is
    recovered from the lowest-order interpolated coefficients.
    """
    rows, non_reduced = _build_matrix(forms, n, degrees)
    sub = [[rows[r][c] for c in non_reduced] for r in non_reduced]

    def sampled_coeffs(matrix) -> list[Fraction]:
        size = len(matrix)
        xs = [Fraction(t) for t in range(size + 1)]
        ys = []
        for t in range(size + 1):
            shifted = [row[:] for row in matrix]
            for i in range(size):
                shifted[i][i] += t
            ys.append(det_rational(shifted))
        return _newton_coefficients(xs, ys)

    coeffs_full = sampled_coeffs(rows)
    coeffs_sub = sampled_coeffs(sub)
    ord_full = next(i for i, c in enumerate(coeffs_full) if c != 0)
    ord_sub = next(i for i, c in enumerate(coeffs_sub) if c != 0)
    if ord_full > ord_sub:
        return Fraction(0)
    if ord_full < ord_sub:
        raise DegenerateDenominatorError(
            "pencil order sanity check failed (numerator order below denominator)")
    return coeffs_full[ord_full] / coeffs_sub[ord_sub]


def macaulay_resultant(system: MacaulaySystem, seed: int = 0) -> Scalar:
    """Macaulay-normalized resultant of the system, exact.

    Strategy: direct determinant ratio; if the denominator minor vanishes,
    retry under deterministic invertible substitutions x -> T*x (seeds
    seed+1..seed+8, entries in -2..2), dividing out det(T)^(d_1*...*d_n);
    if every retry is stuck (positive-dimensional degenerations defeat all
    substitutions), fall back to the diagonal pencil, which always resolves.
    """
    forms = list(system.forms)
    degrees = list(system.degrees)
    n = len(forms)
    nu = sum(d - 1 for d in degrees) + 1
    ncols = math.comb(nu + n - 1, n - 1)
    if ncols * ncols > MAX_MATRIX_ENTRIES:
        raise MatrixSizeError(
            f"Macaulay matrix would have {ncols}^2 entries "
            f"(limit {MAX_MATRIX_ENTRIES})")
    value = _det_ratio(forms, n, degrees)
    if value is not None:
        return value
    deg_product = 1
    for d in degrees:
        deg_product *= d
    for s in range(seed + 1, seed + 9):
        matrix = _substitution_matrix(s, n)
        det_t = det_rational([[Fraction(x) for x in row] for row in matrix])
        if det_t == 0:
            continue
        substituted = [f.substitute_linear(matrix) for f in forms]
        value = _det_ratio(substituted, n, degrees)
        if value is not None:
            return value / det_t ** deg_product
    return _pencil_value(forms, n, degrees)


def sylvester_resultant(f: MultiPoly, g: MultiPoly) -> Scalar:
    """Resultant of two binary homogeneous forms via the Sylvester matrix.

    Coefficients are read off in decreasing powers of the first variable;
    the convention matches the Macaulay normalization (R{x^m, y^p} = 1).
    """
    for name, p in (("f", f), ("g", g)):
        if p.num_vars != 2:
            raise ValueError(f"{name} is not a binary form")
        if p.is_zero():
            raise ValueError(f"{name} is zero")
        if not p.is_homogeneous():
            raise ValueError(f"{name} is not homogeneous")
    m = f.total_degree()
    p = g.total_degree()

    def coeff_list(poly: MultiPoly, degree: int) -> list[Fraction]:
        return [poly.coefficient((degree - i, i)) for i in range(degree + 1)]

    a = coeff_list(f, m)
    b = coeff_list(g, p)
    size = m + p
    rows = []
    for j in range(p):
        row = [Fraction(0)] * size
        row[j:j + m + 1] = a
        rows.append(row)
    for j in range(m):
        row = [Fraction(0)] * size
        row[j:j + p + 1] = b
        rows.append(row)
    return det_rational(rows)


# ---------------------------------------------------------------------------
# common-root witnesses

Coordinate = Union[Fraction, QuadExt]


@dataclass(frozen=True)
class RootWitness:
    """A nonzero point where all gradient forms vanish.

    ``pattern`` is (k, t, u) when k coordinates equal t and the rest equal u;
    None for the fallback family whose coordinates take three values.
    """

    point: tuple[Coordinate, ...]
    pattern: Optional[tuple[int, Coordinate, Coordinate]]

    def radicand(self) -> Optional[Fraction]:
        for x in self.point:
            if isinstance(x, QuadExt) and x.radical != 0:
                return x.radicand
        return None


def _sqrt_fraction(q: Fraction) -> Optional[Fraction]:
    """Exact nonnegative square root of a rational, or None."""
    if q < 0:
        return None
    num_root = math.isqrt(q.numerator)
    den_root = math.isqrt(q.denominator)
    if num_root * num_root == q.numerator and den_root * den_root == q.denominator:
        return Fraction(num_root, den_root)
    return None


def _binary_quadratic_roots(p: Fraction, q: Fraction, r: Fraction) -> list[tuple[Coordinate, Coordinate]]:
    """Projective roots (t, u) of p*t^2 + q*t*u + r*u^2, deterministic order.

    Rational roots come out as Fractions; irrational ones as conjugate
    QuadExt pairs over the discriminant. The zero quadratic returns [].
    """
    if p != 0:
        disc = q * q - 4 * p * r
        root = _sqrt_fraction(disc)
        if root is not None:
            ts = sorted({(-q - root) / (2 * p), (-q + root) / (2 * p)})
            return [(t, Fraction(1)) for t in ts]
        lo = QuadExt(-q / (2 * p), -abs(Fraction(1) / (2 * p)), disc)
        hi = QuadExt(-q / (2 * p), abs(Fraction(1) / (2 * p)), disc)
        return [(lo, Fraction(1)), (hi, Fraction(1))]
    if q != 0:
        return [(-r / q, Fraction(1)), (Fraction(1), Fraction(0))]
    if r != 0:
        return [(Fraction(1), Fraction(0))]
    return []


def _eval_binary(coeffs: tuple[Fraction, Fraction, Fraction], t: Coordinate, u: Coordinate):
    p, q, r = coeffs
    return t * t * p + t * u * q + u * u * r


def _is_zero_value(x) -> bool:
    if isinstance(x, QuadExt):
        return x.is_zero()
    return x == 0


def _pattern_equations(sc: SymmetricCubic, k: int):
    """Representative gradient forms on points with k coords t and n-k coords u.

    By symmetry the n gradient equations collapse to at most two binary
    quadratics in (t, u): the value at a t-slot and at a u-slot.
    """
    n = sc.n
    a1, a2, a3 = sc.a1, sc.a2, sc.a3
    s1 = (Fraction(k), Fraction(n - k))  # linear in (t, u)
    s1_sq = (s1[0] ** 2, 2 * s1[0] * s1[1], s1[1] ** 2)
    s2 = (Fraction(k * (k - 1), 2), Fraction(k * (n - k)), Fraction((n - k) * (n - k - 1), 2))
    c_lin = a2 + a3
    c_sq = 3 * a1 + a2

    def combine(pure: tuple[Fraction, Fraction, Fraction],
                cross: tuple[Fraction, Fraction, Fraction]):
        return tuple(
            a3 * pure[i] - c_lin * cross[i] + c_sq * s1_sq[i] + c_lin * s2[i]
            for i in range(3))

    eqs = []
    if k > 0:
        eqs.append(combine((Fraction(1), Fraction(0), Fraction(0)),
                           (s1[0], s1[1], Fraction(0))))
    if k < n:
        eqs.append(combine((Fraction(0), Fraction(0), Fraction(1)),
                           (Fraction(0), s1[0], s1[1])))
    return eqs


def _candidate_pairs(eqs) -> list[tuple[Coordinate, Coordinate]]:
    nonzero = [e for e in eqs if any(c != 0 for c in e)]
    if not nonzero:
        # every equation vanishes identically: any nonzero (t, u) works
        return [(Fraction(1), Fraction(0)), (Fraction(0), Fraction(1))]
    head, rest = nonzero[0], nonzero[1:]
    out = []
    for t, u in _binary_quadratic_roots(*head):
        if all(_is_zero_value(_eval_binary(e, t, u)) for e in rest):
            out.append((t, u))
    return out


def _assemble_point(n: int, k: int, t: Coordinate, u: Coordinate) -> tuple[Coordinate, ...]:
    radicand = None
    for v in (t, u):
        if isinstance(v, QuadExt):
            radicand = v.radicand
    if radicand is not None:
        if not isinstance(t, QuadExt):
            t = QuadExt.lift(t, radicand)
        if not isinstance(u, QuadExt):
            u = QuadExt.lift(u, radicand)
    return tuple([t] * k + [u] * (n - k))


def root_witness(sc: SymmetricCubic) -> Optional[RootWitness]:
    """Find a nontrivial common root of the gradient system, if any.

    Search order: two-value patterns for k = 0..n (k coordinates t, the rest
    u), solving the collapsed pair of binary quadratics exactly over the
    rationals or a quadratic extension, candidates in the deterministic order
    of _binary_quadratic_roots. When that finds nothing and a3 = 0, the
    family s1 = s2 = 0 always contains a root: (1, w, conj(w), 0, ..., 0)
    with w a primitive cube root of unity. Returns None exactly when the
    canonical resultant is nonzero.
    """
    n = sc.n
    for k in range(n + 1):
        for t, u in _candidate_pairs(_pattern_equations(sc, k)):
            if k == 0 and _is_zero_value(u):
                continue
            if k == n and _is_zero_value(t):
                continue
            if _is_zero_value(t) and _is_zero_value(u):
                continue
            witness = RootWitness(point=_assemble_point(n, k, t, u), pattern=(k, t, u))
            if verify_witness(sc, witness):
                return witness
    if sc.a3 == 0:
        omega = QuadExt(Fraction(-1, 2), Fraction(1, 2), Fraction(-3))
        point = tuple(
            [QuadExt.lift(1, Fraction(-3)), omega, omega.conjugate()]
            + [QuadExt.lift(0, Fraction(-3))] * (n - 3))
        witness = RootWitness(point=point, pattern=None)
        if verify_witness(sc, witness):
            return witness
        raise AssertionError("s1 = s2 = 0 family failed verification with a3 = 0")
    return None


def verify_witness(sc: SymmetricCubic, witness: RootWitness) -> bool:
    """True iff the point is nonzero and every gradient form vanishes there."""
    point = witness.point
    if len(point) != sc.n:
        return False
    if all(_is_zero_value(x) for x in point):
        return False
    for form in sc.gradient_system():
        if not _is_zero_value(form.eval(point)):
            return False
    return True
