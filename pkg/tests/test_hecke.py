from fractions import Fraction as F

from hypothesis import given, strategies as st

from radparts.arith import MINUS_ONE, ONE, cyc_from_angle
from radparts.hecke import (ariki_semisimple, generic_dimension, is_regular,
                            presentation_for, presentation_from_hecke_params, q_integer_vanishes,
                            varsigma_zero_structure)
from radparts.params import HeckeParams, VarsigmaQuiver, framed_example_varsigma

from strategies import units_angles


def _pres(q0, q1, u=(ONE,), n=2):
    return presentation_from_hecke_params(HeckeParams(len(u), n, tuple(u), q0, q1))


def test_normalized_q_examples():
    assert _pres(MINUS_ONE, ONE).normalized_q == ONE
    assert _pres(ONE, MINUS_ONE).normalized_q == ONE
    assert _pres(ONE, ONE).normalized_q == MINUS_ONE


def test_semisimple_examples():
    for n in range(1, 8):
        assert ariki_semisimple(n, [ONE], ONE)
    v = ariki_semisimple(2, [ONE], MINUS_ONE)
    assert not v and v.witnesses == [("q-integer", 2)]
    for n in range(1, 5):
        for q in (ONE, MINUS_ONE, cyc_from_angle(F(1, 5))):
            assert not ariki_semisimple(n, [ONE, ONE], q)


def test_q_integers():
    w3 = cyc_from_angle(F(1, 3))
    assert q_integer_vanishes(w3, 3) and not q_integer_vanishes(w3, 2)
    assert not q_integer_vanishes(ONE, 5)


def test_structure_at_zero():
    s = varsigma_zero_structure(2, 1)
    assert (s.truncation_order, s.dimension) == (2, 2)
    assert varsigma_zero_structure(3, 1).dimension == 3
    assert varsigma_zero_structure(2, 2).dimension == 8
    for ell in range(1, 5):
        for n in range(1, 5):
            assert varsigma_zero_structure(ell, n).dimension == generic_dimension(ell, n)


def test_regular_examples():
    for ell in range(1, 9):
        for n in range(1, 6):
            assert bool(is_regular(VarsigmaQuiver.zero(ell), n)) == (ell == 1)
    p = presentation_for(VarsigmaQuiver.of([0, F(1, 4)]), 1)
    assert p.u == (ONE, cyc_from_angle(F(3, 4)))
    assert is_regular(VarsigmaQuiver.of([0, F(1, 4)]), 1)
    assert is_regular(framed_example_varsigma(2), 2)


def test_q_one_always_semisimple_for_type_a():
    assert all(ariki_semisimple(n, [ONE], ONE) for n in range(1, 51))


@given(st.lists(units_angles, min_size=1, max_size=4), units_angles, units_angles,
       st.integers(1, 4), st.randoms())
def test_relabeling_invariance(angles, shift, qa, n, rnd):
    u = [cyc_from_angle(a) for a in angles]
    q = cyc_from_angle(qa)
    base = ariki_semisimple(n, u, q).semisimple
    s = cyc_from_angle(shift)
    assert ariki_semisimple(n, [x * s for x in u], q).semisimple == base
    rnd.shuffle(u)
    assert ariki_semisimple(n, u, q).semisimple == base


@given(units_angles, st.integers(1, 8))
def test_rank_one_depends_on_q_and_n(qa, n):
    q = cyc_from_angle(qa)
    expected = all(not q_integer_vanishes(q, k) for k in range(2, n + 1))
    assert ariki_semisimple(n, [cyc_from_angle(qa * 3)], q).semisimple == expected
