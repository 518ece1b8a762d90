import math
import random
from itertools import product

import pytest

from zhegalkin import KForm, ZhegalkinPoly, differential

from helpers import masks_of_size, random_form, random_poly


def test_construction_validation():
    one = ZhegalkinPoly.one(2)
    with pytest.raises(ValueError):
        KForm(2, 3, {})
    with pytest.raises(ValueError):
        KForm(2, -1, {})
    with pytest.raises(ValueError):
        KForm(2, 1, {0b11: one})  # two indices on a degree-1 form
    with pytest.raises(ValueError):
        KForm(2, 1, {0b100: one})  # index outside arity
    with pytest.raises(ValueError):
        KForm(2, 1, {0b01: ZhegalkinPoly.one(3)})  # coefficient arity mismatch


def test_zero_coefficients_are_dropped():
    w = KForm(2, 1, {0b01: ZhegalkinPoly.zero(2), 0b10: ZhegalkinPoly.one(2)})
    assert list(w.coeffs) == [0b10]
    assert KForm(2, 1, {0b01: ZhegalkinPoly.zero(2)}).is_zero


def test_coefficient_slots_count_matches_binomial():
    for n in range(1, 5):
        for k in range(n + 1):
            assert sum(1 for _ in masks_of_size(n, k)) == math.comb(n, k)


def test_grade():
    assert KForm.term(ZhegalkinPoly.variable(2, 1), [2]).degree == 1
    assert KForm.from_poly(ZhegalkinPoly.one(2)).degree == 0
    assert KForm.term(ZhegalkinPoly.one(3), [1, 2, 3]).degree == 3


def test_coefficient_accessor():
    w = KForm.term(ZhegalkinPoly.variable(2, 1), [2])
    assert w.coefficient([2]) == ZhegalkinPoly.variable(2, 1)
    assert w.coefficient([1]) == ZhegalkinPoly.zero(2)
    with pytest.raises(ValueError):
        w.coefficient([1, 2])  # wrong degree
    with pytest.raises(ValueError):
        w.as_poly()
    f = ZhegalkinPoly.variable(2, 2)
    assert KForm.from_poly(f).as_poly() == f


def test_add():
    one = ZhegalkinPoly.one(2)
    w = KForm.term(ZhegalkinPoly.variable(2, 1), [1])
    assert (w + w).is_zero
    two = KForm.term(ZhegalkinPoly.variable(2, 1), [1]) + KForm.term(
        ZhegalkinPoly.variable(2, 2), [2]
    )
    assert len(two.coeffs) == 2
    assert w + KForm.zero(2, 1) == w
    with pytest.raises(ValueError):
        w + KForm.term(one, [1, 2])  # mixed degrees
    with pytest.raises(ValueError):
        w + KForm.term(ZhegalkinPoly.one(3), [1])  # arity mismatch


def test_wedge_examples():
    one = ZhegalkinPoly.one(2)
    d1 = KForm.term(one, [1])
    assert d1.wedge(d1).is_zero
    a = KForm.term(ZhegalkinPoly.variable(2, 2), [1])
    b = KForm.term(ZhegalkinPoly.variable(2, 1), [2])
    assert str(a.wedge(b)) == "(x1*x2)*d{1,2}"
    with pytest.raises(ValueError):
        a.wedge(KForm.term(ZhegalkinPoly.one(3), [1]))


def test_wedge_basis_annihilation_exhaustive():
    # d_I ^ d_J vanishes exactly when the index sets overlap
    for n in (1, 2, 3, 4):
        one = ZhegalkinPoly.one(n)
        for ki in range(n + 1):
            for kj in range(n + 1):
                for mi in masks_of_size(n, ki):
                    for mj in masks_of_size(n, kj):
                        w = KForm(n, ki, {mi: one}).wedge(KForm(n, kj, {mj: one}))
                        if mi & mj:
                            assert w.is_zero
                        else:
                            assert list(w.coeffs) == [mi | mj]


def test_wedge_commutative_and_associative_basis_exhaustive():
    n = 4
    one = ZhegalkinPoly.one(n)
    basis = [
        KForm(n, mask.bit_count(), {mask: one})
        for k in range(n + 1)
        for mask in masks_of_size(n, k)
    ]
    for a, b in product(basis, repeat=2):
        assert a.wedge(b) == b.wedge(a)
    for a, b, c in product(basis, repeat=3):
        assert a.wedge(b).wedge(c) == a.wedge(b.wedge(c))


def test_wedge_commutative_random_coefficients():
    rng = random.Random(61)
    for _ in range(300):
        n = rng.randrange(1, 4)
        a = random_form(rng, n, rng.randrange(n + 1))
        b = random_form(rng, n, rng.randrange(n + 1))
        assert a.wedge(b) == b.wedge(a)


def test_wedge_associative_random_coefficients():
    rng = random.Random(67)
    for _ in range(200):
        a = random_form(rng, 3, rng.randrange(2))
        b = random_form(rng, 3, rng.randrange(2))
        c = random_form(rng, 3, rng.randrange(2))
        assert a.wedge(b).wedge(c) == a.wedge(b.wedge(c))


def test_wedge_degree_additive_when_nonzero():
    rng = random.Random(71)
    for _ in range(300):
        n = rng.randrange(1, 5)
        a = random_form(rng, n, rng.randrange(n + 1))
        b = random_form(rng, n, rng.randrange(n + 1))
        w = a.wedge(b)
        if not w.is_zero:
            assert w.degree == a.degree + b.degree


def test_wedge_past_top_degree_is_canonical_zero():
    one = ZhegalkinPoly.one(2)
    a = KForm.term(one, [1])
    b = KForm.term(one, [1, 2])
    w = a.wedge(b)
    assert w.is_zero and w.degree == 2


def test_exterior_derivative_examples():
    w = KForm.term(ZhegalkinPoly.variable(2, 2), [1])
    assert str(w.d()) == "(1)*d{1,2}"
    f = ZhegalkinPoly(2, [0b11])
    assert KForm.from_poly(f).d().d().is_zero
    top = KForm.term(ZhegalkinPoly.one(2), [1, 2])
    dtop = top.d()
    assert dtop.is_zero and dtop.degree == 2


def test_d_on_zero_form_matches_differential():
    rng = random.Random(73)
    for _ in range(200):
        n = rng.randrange(1, 6)
        f = random_poly(rng, n)
        assert KForm.from_poly(f).d() == differential(f)


def test_d_squared_is_zero_random():
    rng = random.Random(79)
    for n in (1, 2, 3, 4):
        for k in range(n + 1):
            for _ in range(100):
                w = random_form(rng, n, k)
                assert w.d().d().is_zero


def test_d_squared_is_zero_exhaustive_n2_oneforms():
    for b1 in range(16):
        for b2 in range(16):
            coeffs = {}
            if b1:
                coeffs[0b01] = ZhegalkinPoly.from_coeff_bits(2, b1)
            if b2:
                coeffs[0b10] = ZhegalkinPoly.from_coeff_bits(2, b2)
            w = KForm(2, 1, coeffs)
            assert w.d().d().is_zero


def test_no_leibniz_rule_for_d_over_wedge():
    # pinned counterexample at n=2: a 0-form against a 1-form
    x2 = ZhegalkinPoly.variable(2, 2)
    omega = KForm.from_poly(x2)
    eta = KForm.term(x2, [1])
    lhs = omega.wedge(eta).d()
    rhs = omega.d().wedge(eta) + omega.wedge(eta.d())
    assert str(lhs) == "(1)*d{1,2}"
    assert str(rhs) == "0"
    assert lhs != rhs


def test_leibniz_failures_found_by_search():
    # exhaustive over (0-form, 1-form) pairs at n=2; the pinned pair is one
    # of many failures
    failures = []
    for fb in range(16):
        f = ZhegalkinPoly.from_coeff_bits(2, fb)
        omega = KForm.from_poly(f)
        for b1 in range(16):
            for b2 in range(16):
                coeffs = {}
                if b1:
                    coeffs[0b01] = ZhegalkinPoly.from_coeff_bits(2, b1)
                if b2:
                    coeffs[0b10] = ZhegalkinPoly.from_coeff_bits(2, b2)
                eta = KForm(2, 1, coeffs)
                lhs = omega.wedge(eta).d()
                rhs = omega.d().wedge(eta) + omega.wedge(eta.d())
                if lhs != rhs:
                    failures.append((f, eta))
    assert failures
    x2 = ZhegalkinPoly.variable(2, 2)
    assert any(f == x2 and eta.coefficient([1]) == x2 for f, eta in failures)


def test_leibniz_holds_trivially_for_one_form_pairs():
    # at n=2 both sides involve forms past the top degree, so every
    # 1-form/1-form pair satisfies the rule with zero on both sides
    rng = random.Random(83)
    for _ in range(300):
        a = random_form(rng, 2, 1)
        b = random_form(rng, 2, 1)
        lhs = a.wedge(b).d()
        rhs = a.d().wedge(b) + a.wedge(b.d())
        assert lhs.is_zero and rhs.is_zero


def test_str_formats():
    assert str(KForm.zero(3, 2)) == "0"
    f = ZhegalkinPoly(2, [0b01, 0])
    assert str(KForm.from_poly(f)) == "1 + x1"
    w = KForm(2, 1, {0b10: ZhegalkinPoly.variable(2, 1), 0b01: f})
    assert str(w) == "(1 + x1)*d{1} + (x1)*d{2}"


def test_form_equality_ignores_insertion_order():
    one = ZhegalkinPoly.one(2)
    x1 = ZhegalkinPoly.variable(2, 1)
    a = KForm(2, 1, {0b01: one, 0b10: x1})
    b = KForm(2, 1, {0b10: x1, 0b01: one})
    assert a == b and str(a) == str(b)


def test_all_one_forms_at_n2_count():
    # the degree-1 coefficient space at n=2 has (2^4)^2 = 256 elements
    seen = set()
    for b1 in range(16):
        for b2 in range(16):
            coeffs = {}
            if b1:
                coeffs[0b01] = ZhegalkinPoly.from_coeff_bits(2, b1)
            if b2:
                coeffs[0b10] = ZhegalkinPoly.from_coeff_bits(2, b2)
            seen.add(str(KForm(2, 1, coeffs)))
    assert len(seen) == 256
