"""Hermite- and Laguerre-type families: construction, ladders, norms."""

from fractions import Fraction as F

import pytest

import nsjack.combinat as comb
from nsjack.hermite_laguerre import (HermiteBasis, LaguerreBasis,
                                     laguerre_1d_coeffs)
from nsjack.jack import JackBasis
from nsjack.poly import SparsePoly
from nsjack.suites import suite_hermite, suite_laguerre

ALPHA = F(7, 5)


@pytest.fixture(scope="module")
def jack2():
    return JackBasis(2, ALPHA)


def test_hermite_low_degree(jack2):
    hb = HermiteBasis(jack2)
    assert hb.E((1, 0)) == jack2.E((1, 0))
    assert hb.E((1, 1)) == jack2.E((1, 1)) + SparsePoly.constant(
        2, F(1, 2) / ALPHA)


def test_laguerre_low_degree(jack2):
    a = F(1, 2)
    lb = LaguerreBasis(jack2, a)
    q = 1 + 1 / ALPHA
    shift = -(a + q) * (ALPHA + 2) / (ALPHA + 1)
    assert lb.E((1, 0)) == jack2.E((1, 0)) + SparsePoly.constant(2, shift)
    assert lb.at_zero((1, 0)) == shift
    assert lb.at_zero((0, 0)) == 1
    got = lb.at_zero((1, 1))
    assert got == lb.E((1, 1)).eval_exact([0, 0])


def test_x_squared_serialization(jack2):
    lb = LaguerreBasis(jack2, F(1, 2))
    p = lb.E_x_squared((1, 0))
    assert set(p.terms) == {(2, 0), (0, 2), (0, 0)}


def test_norm_ratios(jack2):
    hb = HermiteBasis(jack2)
    assert hb.norm_ratio((0, 0)) == 1
    assert hb.norm_ratio((1, 0)) == (ALPHA + 2) / (2 * (ALPHA + 1))
    a = F(1, 2)
    lb = LaguerreBasis(jack2, a)
    q = 1 + 1 / ALPHA
    assert lb.norm_ratio((0, 0)) == 1
    assert lb.norm_ratio((1, 0)) == (a + q) * (ALPHA + 2) / (ALPHA + 1)


def test_ladder_actions(jack2):
    hb = HermiteBasis(jack2)
    assert hb.raise_op((0, 0)) == 2 * SparsePoly.variable(2, 1)
    assert hb.lower_op((1, 0)).is_zero
    assert hb.lower_constant((1, 0)) == 0
    lb = LaguerreBasis(jack2, F(1, 2))
    assert lb.raise_op((0, 0)) == lb.E((0, 1))
    assert lb.lower_op((2, 0)).is_zero
    got = lb.lower_op((1, 1))
    assert got == lb.lower_constant((1, 1)) * lb.E((0, 1))


def test_pairing_examples(jack2):
    hb = HermiteBasis(jack2)
    assert hb.pairing(SparsePoly.one(2), SparsePoly.one(2)) == 1
    E10 = jack2.E((1, 0))
    want = (comb.d_prime_const((1, 0), ALPHA) * comb.e_const((1, 0), ALPHA)
            / comb.d_const((1, 0), ALPHA) / ALPHA)
    assert hb.pairing(E10, E10) == want
    assert hb.pairing(E10, jack2.E((0, 1))) == 0
    assert hb.pairing(E10, jack2.E((2, 0))) == 0  # different degrees
    with pytest.raises(ValueError):
        hb.pairing(E10 + SparsePoly.one(2), E10)


def test_harmonic_single_component(jack2):
    hb = HermiteBasis(jack2)
    comps = hb.harmonic_components((1, 0))
    assert len(comps) == 1
    assert comps[0][0] == 0
    assert comps[0][1] == jack2.E((1, 0))


def test_classical_laguerre_coeffs():
    # degree 1: 1 + a - t
    a = F(1, 3)
    assert laguerre_1d_coeffs(1, a) == [1 + a, -1]
    # degree 2: (a+1)(a+2)/2 - (a+2) t + t^2/2
    assert laguerre_1d_coeffs(2, a) == [(a + 1) * (a + 2) / 2, -(a + 2),
                                        F(1, 2)]


def test_hermite_suite_small():
    reports = suite_hermite(alphas=(ALPHA,), max_weight=4, max_n=3)
    bad = [r for r in reports if r["status"] != "pass"]
    assert not bad, bad[:3]


def test_laguerre_suite_small():
    reports = suite_laguerre(alphas=(ALPHA,), max_weight=3, max_n=3,
                             a_set=(F(1, 2),))
    bad = [r for r in reports if r["status"] != "pass"]
    assert not bad, bad[:3]
