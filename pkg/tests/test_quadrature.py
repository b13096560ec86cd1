"""Numeric layer: classical reductions, normalizations, transforms."""

from fractions import Fraction as F
from math import gamma, pi, sqrt

import pytest

from nsjack.hermite_laguerre import HermiteBasis, LaguerreBasis
from nsjack.jack import JackBasis
from nsjack.poly import SparsePoly
from nsjack.quadrature import (check_classical_reductions, check_gram_H,
                               check_gram_L, check_ground_state_H,
                               check_ground_state_L, check_hermite_transform,
                               check_hermite_transform_imaginary,
                               check_laguerre_transform,
                               check_laplace_transform, evaluator,
                               gaussian_weighted_integral, ground_state_H,
                               ground_state_L, quad_inner_H, quad_inner_L,
                               refinement_deltas)


def test_classical_values():
    assert abs(quad_inner_H(SparsePoly.one(1), SparsePoly.one(1), 1)
               - sqrt(pi)) < 1e-12
    assert abs(quad_inner_L(SparsePoly.one(1), SparsePoly.one(1), 1, F(1, 2))
               - gamma(1.5)) < 1e-12


def test_classical_reduction_reports():
    for rep in check_classical_reductions():
        assert rep["status"] == "pass", rep


@pytest.mark.parametrize("alpha", [1, 2, F(3, 2)])
def test_ground_states_n2(alpha):
    assert check_ground_state_H(2, alpha)["rel_err"] < 1e-12
    for a in (0, F(1, 2), 1):
        assert check_ground_state_L(2, alpha, a)["rel_err"] < 1e-12


def test_ground_state_formula_values():
    # closed forms at unit coupling
    assert abs(ground_state_H(2, 1) - pi) < 1e-14
    assert abs(ground_state_L(2, 1, 0) - 2.0) < 1e-14


def test_gram_small():
    jb = JackBasis(2, F(3, 2))
    hb = HermiteBasis(jb)
    for rep in check_gram_H(hb, 2):
        assert rep["status"] == "pass", rep
    lb = LaguerreBasis(jb, F(1, 2))
    for rep in check_gram_L(lb, 2):
        assert rep["status"] == "pass", rep


def test_transforms_small():
    jb = JackBasis(2, 1)
    hb = HermiteBasis(jb)
    lb = LaguerreBasis(jb, F(1, 2))
    for eta in [(0, 0), (1, 1)]:
        assert check_hermite_transform(hb, eta, 6)["status"] == "pass"
        assert check_hermite_transform_imaginary(hb, eta, 6)["status"] == "pass"
        assert check_laguerre_transform(lb, eta, 6)["status"] == "pass"
        for which in ("laguerre", "jack"):
            assert check_laplace_transform(lb, eta, which)["status"] == "pass"


def test_selberg_ratio_spot():
    from nsjack.quadrature import check_selberg_ratio

    jb = JackBasis(2, F(1, 2))
    for eta in [(0, 0), (1, 0), (2, 1)]:
        for lam1, lam2 in ((F(1, 2), 0), (F(2), 2)):
            rep = check_selberg_ratio(jb, eta, lam1, lam2)
            assert rep["status"] == "pass", rep
    with pytest.raises(ValueError):
        check_selberg_ratio(jb, (1, 0), F(1), F(1, 2))


def test_refinement_montonicity():
    jb = JackBasis(2, F(3, 2))
    hb = HermiteBasis(jb)
    p = hb.E((2, 1)) * hb.E((2, 1))
    deltas = refinement_deltas(
        lambda N: gaussian_weighted_integral(evaluator(p), F(3, 2),
                                             p.total_degree(), 2, npts=N),
        [6, 12, 24])
    assert deltas[1] <= deltas[0] + 1e-13
