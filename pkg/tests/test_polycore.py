import json
import math
import random
from fractions import Fraction

import pytest

from symres.polycore import (
    MultiPoly,
    QuadExt,
    elem_sym,
    format_scalar,
    grevlex_key,
    monomials_of_degree,
    parse_scalar,
    quad_product,
)


def random_poly(rng, num_vars, degree, terms=4):
    out = MultiPoly.zero(num_vars)
    data = {}
    for _ in range(terms):
        exps = [0] * num_vars
        for _ in range(rng.randint(0, degree)):
            exps[rng.randrange(num_vars)] += 1
        data[tuple(exps)] = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
    return out + MultiPoly(num_vars, data)


def random_point(rng, num_vars):
    return [Fraction(rng.randint(-5, 5), rng.randint(1, 5)) for _ in range(num_vars)]


# -- elementary symmetric polynomials ---------------------------------------

def test_elem_sym_two_vars_linear():
    assert elem_sym(2, 1) == MultiPoly(2, {(1, 0): 1, (0, 1): 1})


def test_elem_sym_four_choose_two():
    expected = MultiPoly(4, {
        (1, 1, 0, 0): 1, (1, 0, 1, 0): 1, (1, 0, 0, 1): 1,
        (0, 1, 1, 0): 1, (0, 1, 0, 1): 1, (0, 0, 1, 1): 1,
    })
    assert elem_sym(4, 2) == expected


def test_elem_sym_top():
    assert elem_sym(3, 3) == MultiPoly(3, {(1, 1, 1): 1})


@pytest.mark.parametrize("n", range(1, 7))
def test_elem_sym_term_counts(n):
    for k in range(1, n + 1):
        p = elem_sym(n, k)
        assert len(p.terms) == math.comb(n, k)
        assert all(c == 1 for c in p.terms.values())


def test_elem_sym_range_errors():
    with pytest.raises(ValueError):
        elem_sym(3, 0)
    with pytest.raises(ValueError):
        elem_sym(3, 4)


# -- derivative, evaluation, symmetry ----------------------------------------

def test_partial_power_rule():
    p = MultiPoly(2, {(2, 1): 1})  # x1^2 x2
    assert p.partial(0) == MultiPoly(2, {(1, 1): 2})


def test_partial_absent_variable():
    p = MultiPoly(2, {(3, 0): 1})
    assert p.partial(1).is_zero()


def test_partial_of_s3():
    assert elem_sym(3, 3).partial(0) == MultiPoly(3, {(0, 1, 1): 1})


def test_partial_index_errors():
    p = elem_sym(2, 1)
    with pytest.raises(ValueError):
        p.partial(-1)
    with pytest.raises(ValueError):
        p.partial(2)


def test_eval_examples():
    ones = [Fraction(1)] * 3
    assert elem_sym(3, 3).eval(ones) == 1
    s1_cubed = elem_sym(3, 1) ** 3
    assert s1_cubed.eval([Fraction(1), Fraction(-1), Fraction(0)]) == 0
    p = MultiPoly(2, {(2, 0): 1, (0, 1): 1})
    assert p.eval([Fraction(1, 2), Fraction(1, 4)]) == Fraction(1, 2)


def test_eval_length_mismatch():
    with pytest.raises(ValueError):
        elem_sym(3, 1).eval([Fraction(1)])


def test_is_symmetric_examples():
    assert (elem_sym(3, 1) * elem_sym(3, 2)).is_symmetric()
    assert not MultiPoly(2, {(2, 1): 1}).is_symmetric()
    assert MultiPoly.zero(4).is_symmetric()


def test_product_and_derivative_rules_random():
    rng = random.Random(1001)
    for _ in range(30):
        n = rng.randint(2, 4)
        p = random_poly(rng, n, 3)
        q = random_poly(rng, n, 3)
        x = random_point(rng, n)
        assert (p * q).eval(x) == p.eval(x) * q.eval(x)
        for i in range(n):
            assert (p * q).partial(i) == p.partial(i) * q + p * q.partial(i)


# -- quadratic extension ------------------------------------------------------

def test_quad_product_identity():
    one = QuadExt(1, 0, 7)
    assert quad_product([one] * 8) == QuadExt(1, 0, 7)


def test_quad_product_radical_square():
    lam = QuadExt(0, 1, 5)
    assert quad_product([lam, lam]) == QuadExt(5, 0, 5)


def test_quad_product_conjugate_pair():
    delta = Fraction(3, 4) ** 2 - Fraction(-2)  # a generic a^2 - b value
    pair = [QuadExt(1, 1, delta), QuadExt(1, -1, delta)]
    assert quad_product(pair) == QuadExt(1 - delta, 0, delta)


def test_quad_product_mixed_radicands():
    with pytest.raises(ValueError):
        quad_product([QuadExt(1, 1, 2), QuadExt(1, 1, 3)])


def test_quad_product_sign_symmetric_multiset():
    rng = random.Random(77)
    for _ in range(20):
        delta = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        factors = []
        for _ in range(rng.randint(1, 5)):
            a = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
            b = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
            factors.append(QuadExt(a, b, delta))
            factors.append(QuadExt(a, -b, delta))
        rng.shuffle(factors)
        assert quad_product(factors).radical == 0


def test_quad_ext_pow_matches_repeated_product():
    z = QuadExt(Fraction(1, 2), Fraction(-2, 3), Fraction(5))
    acc = QuadExt(1, 0, 5)
    for e in range(6):
        assert z ** e == acc
        acc = acc * z


def test_quad_ext_scalar_mixing():
    z = QuadExt(1, 2, 3)
    assert 2 * z == QuadExt(2, 4, 3)
    assert z + Fraction(1, 2) == QuadExt(Fraction(3, 2), 2, 3)
    assert (1 - z) == QuadExt(0, -2, 3)


# -- scalar strings -----------------------------------------------------------

def test_scalar_string_round_trip():
    rng = random.Random(3)
    values = [Fraction(rng.randint(-10**12, 10**12), rng.randint(1, 10**9))
              for _ in range(50)]
    values += [Fraction(0), Fraction(-1), Fraction(10**40, 7)]
    for v in values:
        assert parse_scalar(format_scalar(v)) == v


# -- ordering and serialization ----------------------------------------------

def test_grevlex_order_degree_two():
    monos = monomials_of_degree(3, 2)
    assert monos == [
        (2, 0, 0), (1, 1, 0), (0, 2, 0), (1, 0, 1), (0, 1, 1), (0, 0, 2)]


def test_grevlex_grades_by_degree():
    assert grevlex_key((1, 0, 0)) < grevlex_key((2, 0, 0))
    assert grevlex_key((0, 0, 2)) < grevlex_key((1, 1, 1))


def test_poly_json_round_trip_and_order():
    p = MultiPoly(3, {
        (2, 0, 0): Fraction(10**25, 3),
        (0, 1, 1): Fraction(-7),
        (1, 1, 0): Fraction(1, 2),
    })
    blob = json.dumps(p.to_json_dict())
    data = json.loads(blob)
    assert MultiPoly.from_json_dict(data) == p
    # canonical descending grevlex order on output, big ints as strings
    assert [tuple(t["exps"]) for t in data["terms"]] == [
        (2, 0, 0), (1, 1, 0), (0, 1, 1)]
    assert data["terms"][0]["num"] == str(10**25)


def test_poly_validation_errors():
    with pytest.raises(ValueError):
        MultiPoly(2, {(1,): 1})
    with pytest.raises(ValueError):
        MultiPoly(2, {(-1, 0): 1})
    with pytest.raises(ValueError):
        MultiPoly(0)


def test_poly_zero_terms_dropped():
    p = MultiPoly(2, {(1, 0): 0, (0, 1): 2})
    assert p == MultiPoly(2, {(0, 1): 2})
    assert (p - p).is_zero()
