"""Exact arithmetic substrate: rational scalars, a quadratic extension field,
and sparse multivariate polynomials with dense exponent vectors.

Everything here is exact (`fractions.Fraction` underneath) and immutable in
use: operations return new values, so all types are safe to share freely.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterable, Mapping, Union

#: Exact rational scalar used throughout the library.
Scalar = Fraction

ScalarLike = Union[Scalar, int]


def parse_scalar(text: str) -> Scalar:
    """Parse a rational from "num/den" or "num" (decimal strings)."""
    s = text.strip()
    if "/" in s:
        num, den = s.split("/", 1)
        if int(den) == 0:
            raise ValueError(f"zero denominator in {text!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(s))


def format_scalar(value: Scalar) -> str:
    """Render a rational as "num/den", or just "num" when integral."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def grevlex_key(exps: tuple[int, ...]) -> tuple:
    """Sort key realizing graded reverse-lexicographic order (ascending).

    a > b in grevlex iff deg a > deg b, or degrees tie and the rightmost
    nonzero entry of a - b is negative; reversing and negating the exponent
    vector turns that rule into plain tuple comparison.
    """
    return (sum(exps), tuple(-e for e in reversed(exps)))


def monomials_of_degree(num_vars: int, degree: int) -> list[tuple[int, ...]]:
    """All exponent vectors of the given total degree, largest grevlex first."""
    out: list[tuple[int, ...]] = []

    def rec(pos: int, rem: int, cur: list[int]) -> None:
        if pos == num_vars - 1:
            out.append(tuple(cur + [rem]))
            return
        for v in range(rem, -1, -1):
            rec(pos + 1, rem - v, cur + [v])

    if num_vars == 0:
        return [()] if degree == 0 else []
    rec(0, degree, [])
    out.sort(key=grevlex_key, reverse=True)
    return out


class QuadExt:
    """Element a + b*r of the quadratic extension Q(r), r**2 = radicand.

    The radicand is carried on every value; combining values with different
    radicands is an error rather than a silent coercion. Plain ints and
    Fractions mix in freely (lifted with b = 0).
    """

    __slots__ = ("rational", "radical", "radicand")

    def __init__(self, rational: ScalarLike, radical: ScalarLike, radicand: ScalarLike):
        self.rational = Fraction(rational)
        self.radical = Fraction(radical)
        self.radicand = Fraction(radicand)

    @classmethod
    def lift(cls, value: ScalarLike, radicand: ScalarLike) -> "QuadExt":
        return cls(Fraction(value), Fraction(0), radicand)

    def _coerce(self, other) -> "QuadExt":
        if isinstance(other, QuadExt):
            if other.radicand != self.radicand:
                raise ValueError(
                    f"mixed radicands: {self.radicand} vs {other.radicand}")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadExt.lift(other, self.radicand)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other) -> "QuadExt":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadExt(self.rational + o.rational, self.radical + o.radical, self.radicand)

    __radd__ = __add__

    def __neg__(self) -> "QuadExt":
        return QuadExt(-self.rational, -self.radical, self.radicand)

    def __sub__(self, other) -> "QuadExt":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "QuadExt":
        return (-self) + other

    def __mul__(self, other) -> "QuadExt":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadExt(
            self.rational * o.rational + self.radical * o.radical * self.radicand,
            self.rational * o.radical + self.radical * o.rational,
            self.radicand,
        )

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "QuadExt":
        if exponent < 0:
            raise ValueError("negative powers not supported")
        result = QuadExt.lift(1, self.radicand)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def conjugate(self) -> "QuadExt":
        return QuadExt(self.rational, -self.radical, self.radicand)

    def is_rational(self) -> bool:
        return self.radical == 0

    def is_zero(self) -> bool:
        return self.rational == 0 and self.radical == 0

    def to_scalar(self) -> Scalar:
        if not self.is_rational():
            raise ValueError(f"{self!r} has a nonzero radical part")
        return self.rational

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.radical == 0 and self.rational == other
        if isinstance(other, QuadExt):
            return (self.rational == other.rational
                    and self.radical == other.radical
                    and (self.radical == 0 or self.radicand == other.radicand))
        return NotImplemented

    def __hash__(self):
        if self.radical == 0:
            return hash(self.rational)
        return hash((self.rational, self.radical, self.radicand))

    def __repr__(self) -> str:
        return f"QuadExt({self.rational}, {self.radical}, {self.radicand})"

    def __str__(self) -> str:
        if self.radical == 0:
            return format_scalar(self.rational)
        b = format_scalar(self.radical)
        sign = "-" if self.radical < 0 else "+"
        if self.radical < 0:
            b = format_scalar(-self.radical)
        return f"{format_scalar(self.rational)}{sign}{b}*r"


def quad_product(factors: Iterable[QuadExt]) -> QuadExt:
    """Exact product of quadratic-extension values sharing one radicand."""
    it = iter(factors)
    try:
        result = next(it)
    except StopIteration:
        raise ValueError("quad_product of no factors is ambiguous (no radicand)")
    for f in it:
        result = result * f
    return result


class MultiPoly:
    """Sparse multivariate polynomial over exact rationals.

    Terms are a map from dense exponent tuples (length ``num_vars``) to
    nonzero coefficients; the map is canonical, so equality is structural.
    Treat instances as immutable.
    """

    __slots__ = ("num_vars", "terms")

    def __init__(self, num_vars: int, terms: Mapping[tuple[int, ...], ScalarLike] | None = None):
        if num_vars < 1:
            raise ValueError("num_vars must be positive")
        self.num_vars = num_vars
        clean: dict[tuple[int, ...], Fraction] = {}
        if terms:
            for exps, coeff in terms.items():
                if len(exps) != num_vars:
                    raise ValueError(
                        f"exponent vector {exps} has length {len(exps)}, expected {num_vars}")
                if any(e < 0 for e in exps):
                    raise ValueError(f"negative exponent in {exps}")
                c = Fraction(coeff)
                if c != 0:
                    clean[tuple(exps)] = c
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, num_vars: int) -> "MultiPoly":
        return cls(num_vars)

    @classmethod
    def constant(cls, num_vars: int, value: ScalarLike) -> "MultiPoly":
        return cls(num_vars, {(0,) * num_vars: value})

    @classmethod
    def variable(cls, num_vars: int, index: int) -> "MultiPoly":
        if not 0 <= index < num_vars:
            raise ValueError(f"variable index {index} out of range for {num_vars} variables")
        exps = [0] * num_vars
        exps[index] = 1
        return cls(num_vars, {tuple(exps): 1})

    # -- ring operations ---------------------------------------------------

    def _check_same_vars(self, other: "MultiPoly") -> None:
        if self.num_vars != other.num_vars:
            raise ValueError("polynomials over different variable counts")

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        self._check_same_vars(other)
        merged = dict(self.terms)
        for exps, c in other.terms.items():
            s = merged.get(exps, Fraction(0)) + c
            if s == 0:
                merged.pop(exps, None)
            else:
                merged[exps] = s
        out = MultiPoly.zero(self.num_vars)
        out.terms = merged
        return out

    def __neg__(self) -> "MultiPoly":
        out = MultiPoly.zero(self.num_vars)
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + (-other)

    def __mul__(self, other) -> "MultiPoly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check_same_vars(other)
        prod: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = prod.get(e, Fraction(0)) + c1 * c2
                if s == 0:
                    prod.pop(e, None)
                else:
                    prod[e] = s
        out = MultiPoly.zero(self.num_vars)
        out.terms = prod
        return out

    def __rmul__(self, other) -> "MultiPoly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def scale(self, factor: ScalarLike) -> "MultiPoly":
        f = Fraction(factor)
        out = MultiPoly.zero(self.num_vars)
        if f != 0:
            out.terms = {e: c * f for e, c in self.terms.items()}
        return out

    def __pow__(self, exponent: int) -> "MultiPoly":
        if exponent < 0:
            raise ValueError("negative powers not supported")
        result = MultiPoly.constant(self.num_vars, 1)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.num_vars == other.num_vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.num_vars, frozenset(self.terms.items())))

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, exps: tuple[int, ...]) -> Scalar:
        return self.terms.get(tuple(exps), Fraction(0))

    def total_degree(self) -> int:
        """Maximum term degree; 0 for the zero polynomial."""
        if not self.terms:
            return 0
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        degrees = {sum(e) for e in self.terms}
        return len(degrees) <= 1

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Scalar]]:
        """Terms in canonical order: descending grevlex."""
        return sorted(self.terms.items(), key=lambda t: grevlex_key(t[0]), reverse=True)

    def partial(self, index: int) -> "MultiPoly":
        """Formal partial derivative with respect to variable `index` (0-based)."""
        if not 0 <= index < self.num_vars:
            raise ValueError(f"variable index {index} out of range for {self.num_vars} variables")
        out: dict[tuple[int, ...], Fraction] = {}
        for exps, c in self.terms.items():
            e = exps[index]
            if e == 0:
                continue
            lowered = list(exps)
            lowered[index] = e - 1
            out[tuple(lowered)] = c * e
        p = MultiPoly.zero(self.num_vars)
        p.terms = out
        return p

    def eval(self, point):
        """Exact value at a point of Scalars (or QuadExt values).

        Accepts any sequence whose elements support +, * and ** with
        Fractions, so plain rationals and quadratic-extension coordinates
        both work.
        """
        if len(point) != self.num_vars:
            raise ValueError(f"point has {len(point)} coordinates, expected {self.num_vars}")
        total = None
        for exps, c in self.terms.items():
            term = c
            for x, e in zip(point, exps):
                if e:
                    term = term * x**e
            total = term if total is None else total + term
        if total is None:
            return Fraction(0)
        return total

    def is_symmetric(self) -> bool:
        """True iff invariant under all adjacent variable transpositions."""
        for i in range(self.num_vars - 1):
            for exps, c in self.terms.items():
                swapped = list(exps)
                swapped[i], swapped[i + 1] = swapped[i + 1], swapped[i]
                if self.terms.get(tuple(swapped)) != c:
                    return False
        return True

    def substitute_linear(self, matrix: list[list[ScalarLike]]) -> "MultiPoly":
        """Compose with a linear change of variables: x_i -> sum_j m[i][j] x_j."""
        n = self.num_vars
        if len(matrix) != n or any(len(row) != n for row in matrix):
            raise ValueError("substitution matrix shape mismatch")
        images = []
        for i in range(n):
            images.append(MultiPoly(
                n, {tuple(1 if j == k else 0 for k in range(n)): matrix[i][j]
                    for j in range(n) if matrix[i][j] != 0}))
        result = MultiPoly.zero(n)
        for exps, c in self.terms.items():
            term = MultiPoly.constant(n, c)
            for i, e in enumerate(exps):
                for _ in range(e):
                    term = term * images[i]
            result = result + term
        return result

    # -- serialization -----------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "n": self.num_vars,
            "terms": [
                {"exps": list(exps), "num": str(c.numerator), "den": str(c.denominator)}
                for exps, c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "MultiPoly":
        n = int(data["n"])
        terms: dict[tuple[int, ...], Fraction] = {}
        for t in data["terms"]:
            exps = tuple(int(e) for e in t["exps"])
            terms[exps] = Fraction(int(t["num"]), int(t["den"]))
        return cls(n, terms)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exps, c in self.sorted_terms():
            mono = "*".join(
                f"x{i + 1}" + (f"^{e}" if e > 1 else "")
                for i, e in enumerate(exps) if e)
            coeff = format_scalar(c)
            if mono:
                parts.append(mono if c == 1 else f"{coeff}*{mono}" if c != -1 else f"-{mono}")
            else:
                parts.append(coeff)
        return " + ".join(parts).replace("+ -", "- ")


def elem_sym(num_vars: int, k: int) -> MultiPoly:
    """k-th elementary symmetric polynomial in ``num_vars`` variables."""
    if not 1 <= k <= num_vars:
        raise ValueError(f"k={k} out of range 1..{num_vars}")
    terms: dict[tuple[int, ...], int] = {}
    for combo in itertools.combinations(range(num_vars), k):
        exps = [0] * num_vars
        for i in combo:
            exps[i] = 1
        terms[tuple(exps)] = 1
    return MultiPoly(num_vars, terms)
