import itertools

import pytest

from radparts.invariants import (SparsePoly, check_semiinvariant, WreathCharacter, cyclotomic_polynomial, delta_factorization_check,
                                 delta_restricted, discriminant_h, grouped_reflection_factor,
                                 semiinvariant_exponents, semiinvariant_poly, verify_semiinvariance)


def x(i, n, p=1):
    return SparsePoly.var(i, n, p)


def test_delta_examples():
    expected = (x(0, 2) * x(1, 2)) ** 2 * (x(0, 2, 2) - x(1, 2, 2)) ** 2
    assert delta_restricted(2, 2) == expected
    assert delta_restricted(3, 1) == x(0, 1, 3)
    assert delta_restricted(2, 3).degree() == 18
    assert str(delta_restricted(2, 2)) == "x1^6*x2^2 - 2*x1^4*x2^4 + x1^2*x2^6"


def test_factorization_examples():
    assert delta_factorization_check(2, 2)
    assert delta_factorization_check(4, 1)
    assert delta_factorization_check(3, 3)


@pytest.mark.parametrize("ell,n", list(itertools.product(range(1, 5), range(1, 5))))
def test_factorization_all(ell, n):
    assert delta_factorization_check(ell, n)


def test_discriminant_examples():
    assert discriminant_h(2, 2).proportional_to(delta_restricted(2, 2)) == 1
    assert discriminant_h(5, 1) == x(0, 1, 5)
    assert discriminant_h(1, 2) == (x(0, 2) - x(1, 2)) ** 2


@pytest.mark.parametrize("ell,n", list(itertools.product(range(2, 5), range(1, 4))))
def test_discriminant_agrees_up_to_scalar(ell, n):
    assert discriminant_h(ell, n).proportional_to(delta_restricted(ell, n)) is not None


def test_discriminant_at_ell_one_drops_coordinate_factor():
    # x_i = 0 is not a reflecting hyperplane when ell = 1
    for n in range(1, 4):
        d = delta_restricted(1, n)
        h = discriminant_h(1, n)
        assert d == h * SparsePoly(n, {(1,) * n: 1})


def test_cyclotomic_machinery():
    assert cyclotomic_polynomial(6) == [1, -1, 1]
    assert cyclotomic_polynomial(4) == [1, 0, 1]
    for ell in range(1, 7):
        assert grouped_reflection_factor(ell) == x(0, 2, ell) - x(1, 2, ell)


def test_semiinvariant_examples():
    t = WreathCharacter.trivial(3, 3)
    d = semiinvariant_exponents(t)
    assert d.as_map() == {"coordinate": 0, "reflection": 0} and d.degree == 0
    assert semiinvariant_poly(t) == SparsePoly.const(1, 3)
    inv = WreathCharacter.inverse_determinant(2, 2)
    assert semiinvariant_exponents(inv).as_map() == {"coordinate": 1, "reflection": 1}
    assert semiinvariant_poly(inv) == x(0, 2) * x(1, 2) * (x(0, 2, 2) - x(1, 2, 2))
    chi = WreathCharacter(2, 2, 1, 1)
    d = semiinvariant_exponents(chi)
    assert (d.coordinate_exponent, d.reflection_exponent, d.degree) == (1, 0, 2)
    assert semiinvariant_poly(chi) == x(0, 2) * x(1, 2)
    assert verify_semiinvariance(t, 3, 3)
    assert verify_semiinvariance(inv, 2, 2)
    assert verify_semiinvariance(WreathCharacter(3, 2, 1, 1), 3, 2)


def test_character_validation():
    with pytest.raises(ValueError):
        WreathCharacter(1, 2, 1, 1)
    with pytest.raises(ValueError):
        WreathCharacter(3, 1, 0, -1)
    with pytest.raises(ValueError):
        verify_semiinvariance(WreathCharacter(2, 2), 3, 2)
    assert semiinvariant_exponents(WreathCharacter(3, 1, 2)).as_map() == {"coordinate": 2}


def _characters(ell, n):
    for c in range(ell):
        for s in ((1, -1) if n >= 2 else (1,)):
            yield WreathCharacter(ell, n, c, s)


@pytest.mark.parametrize("ell,n", list(itertools.product(range(1, 5), range(1, 5))))
def test_every_character_is_realized(ell, n):
    for chi in _characters(ell, n):
        assert verify_semiinvariance(chi)
        d = semiinvariant_exponents(chi)
        assert semiinvariant_poly(chi).degree() == d.degree
        assert d.coordinate_exponent <= ell - 1
        assert d.reflection_exponent in (None, 0, 1)


@pytest.mark.parametrize("ell,n", list(itertools.product(range(1, 5), range(1, 4))))
def test_exponents_add_under_products(ell, n):
    for a in _characters(ell, n):
        for b in _characters(ell, n):
            ea, eb, eab = (semiinvariant_exponents(c) for c in (a, b, a * b))
            assert eab.coordinate_exponent == (ea.coordinate_exponent + eb.coordinate_exponent) % ell
            if n >= 2:
                assert eab.reflection_exponent == (ea.reflection_exponent + eb.reflection_exponent) % 2


@pytest.mark.parametrize("ell,n", [(2, 2), (3, 2), (3, 3), (4, 2)])
def test_mismatched_character_is_rejected(ell, n):
    chars = list(_characters(ell, n))
    for a in chars:
        h = semiinvariant_poly(a)
        for b in chars:
            assert check_semiinvariant(h, b) == (a == b)
