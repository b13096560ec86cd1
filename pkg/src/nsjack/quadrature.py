"""Floating-point quadrature validation of the integral statements.

Everything exact lives elsewhere; this module spot-checks (n <= 2) the
ground-state normalizations, orthogonality under the Gaussian and
Laguerre-type measures, the kernel transform formulas, and the Laplace
transform evaluations.

The kink of |x_1 - x_2|^(2/alpha) is removed by a change of variables
that splits the domain along the diagonal: rotated coordinates for the
Gaussian weight, scaled barycentric coordinates for the Laguerre weight.
Each one-dimensional factor then gets a classical Gauss rule that treats
the algebraic weight exactly.
"""

from __future__ import annotations

from math import gamma, pi, sqrt

import numpy as np
from scipy.special import roots_genlaguerre, roots_jacobi

from . import combinat as comb
from .kernels import kernel_KA, kernel_KB, scale_block
from .poly import SparsePoly


def evaluator(p):
    """Compile a sparse polynomial to a broadcasting numeric callable."""
    exps = [np.array(e) for e in p.terms]
    coeffs = [complex(c) if isinstance(c, complex) else float(c) for c in p.terms.values()]

    def f(*coords):
        total = 0.0
        for e, c in zip(exps, coeffs):
            term = c
            for x, k in zip(coords, e):
                if k:
                    term = term * x ** int(k)
            total = total + term
        return total

    return f


# ---------------------------------------------------------------------------
# weighted integrals


def gaussian_weighted_integral(h, alpha, deg, n, npts=None):
    """Integral of h against prod exp(-x_i^2) * prod |x_i - x_j|^(2/alpha)
    over R^n, for n in {1, 2}.  ``h`` is a callable of the coordinates and
    ``deg`` a bound on its polynomial degree (sets the rule sizes)."""
    alpha = float(alpha)
    if n == 1:
        N = npts or max(deg // 2 + 6, 12)
        x, w = np.polynomial.hermite.hermgauss(N)
        return float(np.real_if_close(np.sum(w * h(x))))
    if n != 2:
        raise ValueError("gaussian quadrature implemented for n <= 2")
    N = npts or max(deg // 2 + 8, 16)
    xv, wv = np.polynomial.hermite.hermgauss(N)
    s, ws = roots_genlaguerre(N, 1.0 / alpha - 0.5)
    u = np.sqrt(s)
    rt2 = sqrt(2.0)
    total = 0.0
    for vj, wvj in zip(xv, wv):
        x1p, x2p = (vj + u) / rt2, (vj - u) / rt2
        x1m, x2m = (vj - u) / rt2, (vj + u) / rt2
        vals = h(x1p, x2p) + h(x1m, x2m)
        total = total + wvj * 0.5 * np.sum(ws * vals)
    return complex(total) * 2.0 ** (1.0 / alpha) if np.iscomplexobj(total) else float(total) * 2.0 ** (1.0 / alpha)


def laguerre_weighted_integral(h, alpha, a, deg, n, rate=1.0, npts=None):
    """Integral of h against prod y_i^a exp(-rate*y_i) * prod |y_i-y_j|^(2/alpha)
    over [0, inf)^n, for n in {1, 2}."""
    alpha = float(alpha)
    a = float(a)
    rate = float(rate)
    if n == 1:
        N = npts or max(deg + 6, 12)
        s, w = roots_genlaguerre(N, a)
        return float(np.sum(w * h(s / rate))) * rate ** (-a - 1.0)
    if n != 2:
        raise ValueError("laguerre quadrature implemented for n <= 2")
    N = npts or max(deg + 10, 24)
    gam = 2.0 * a + 2.0 / alpha + 1.0
    s, ws = roots_genlaguerre(N, gam)
    u = s / rate
    xj, wj = roots_jacobi(N, a, 2.0 / alpha)
    t = (1.0 + xj) / 2.0
    smooth = ((3.0 + xj) / 2.0) ** a
    total = 0.0
    for um, wm in zip(u, ws):
        y1, y2 = um * (1.0 + t) / 2.0, um * (1.0 - t) / 2.0
        vals = (h(y1, y2) + h(y2, y1)) * smooth
        total = total + wm * np.sum(wj * vals)
    pref = 2.0 ** (-2.0 * a - 1.0) * 2.0 ** (-1.0 - a - 2.0 / alpha)
    return total * pref * rate ** (-gam - 1.0)


def quad_inner_H(f, g, alpha, npts=None):
    """Gaussian-measure inner product of two polynomials (n <= 2)."""
    p = f * g
    return gaussian_weighted_integral(evaluator(p), alpha, p.total_degree(),
                                      p.n, npts)


def quad_inner_L(f, g, alpha, a, npts=None):
    """Laguerre-measure inner product of two squared-variable polynomials."""
    p = f * g
    return laguerre_weighted_integral(evaluator(p), alpha, a,
                                      p.total_degree(), p.n, npts=npts)


# ---------------------------------------------------------------------------
# ground-state normalizations


def ground_state_H(n, alpha):
    """Gaussian ground-state normalization (Selberg-type product)."""
    alpha = float(alpha)
    out = 2.0 ** (-n * (n - 1) / (2.0 * alpha)) * pi ** (n / 2.0)
    for j in range(n):
        out *= gamma(1.0 + (j + 1) / alpha) / gamma(1.0 + 1.0 / alpha)
    return out


def ground_state_L(n, alpha, a):
    """Laguerre ground-state normalization (Selberg-type product)."""
    alpha = float(alpha)
    a = float(a)
    out = 1.0
    for j in range(n):
        out *= (gamma(1.0 + (j + 1) / alpha) * gamma(a + 1.0 + j / alpha)
                / gamma(1.0 + 1.0 / alpha))
    return out


# ---------------------------------------------------------------------------
# report plumbing


def _report(check, n, alpha, lhs, rhs, tol, a=None, D=None, extra=None):
    lhs_c, rhs_c = complex(lhs), complex(rhs)
    abs_err = abs(lhs_c - rhs_c)
    scale = max(1.0, abs(lhs_c), abs(rhs_c))
    rel_err = abs_err / scale
    rep = {
        "check": check, "n": n, "alpha": str(alpha),
        "a": None if a is None else str(a), "D": D,
        "lhs": repr(lhs), "rhs": repr(rhs),
        "abs_err": abs_err, "rel_err": rel_err, "tolerance": tol,
        "status": "pass" if rel_err <= tol else "fail",
    }
    if extra:
        rep.update(extra)
    return rep


# ---------------------------------------------------------------------------
# checks


def check_ground_state_H(n, alpha, tol=1e-8):
    one = SparsePoly.one(n)
    got = quad_inner_H(one, one, alpha)
    return _report("ground-state-gaussian", n, alpha, got,
                   ground_state_H(n, alpha), tol)


def check_ground_state_L(n, alpha, a, tol=1e-8):
    one = SparsePoly.one(n)
    got = quad_inner_L(one, one, alpha, a)
    return _report("ground-state-laguerre", n, alpha, got,
                   ground_state_L(n, alpha, a), tol, a=a)


def check_gram_H(hermite, max_weight, tol_diag=1e-7, tol_off=1e-8):
    """Numeric Gram matrix of the Gaussian family against the exact norm
    ratios: diagonal to tol_diag, off-diagonal to tol_off (relative)."""
    jack = hermite.jack
    n, alpha = jack.n, jack.alpha
    etas = comb.compositions_up_to(n, max_weight)
    n0 = ground_state_H(n, alpha)
    out = []
    for i, eta in enumerate(etas):
        for nu in etas[i:]:
            got = quad_inner_H(hermite.E(eta), hermite.E(nu), alpha)
            if eta == nu:
                want = float(hermite.norm_ratio(eta)) * n0
                rep = _report("gaussian-gram-diagonal", n, alpha, got, want,
                              tol_diag, extra={"eta": list(eta)})
            else:
                scale = n0 * sqrt(float(hermite.norm_ratio(eta))
                                  * float(hermite.norm_ratio(nu)))
                rep = _report("gaussian-gram-offdiagonal", n, alpha,
                              got / scale, 0.0, tol_off,
                              extra={"eta": list(eta), "nu": list(nu)})
            out.append(rep)
    return out


def check_gram_L(laguerre, max_weight, tol_diag=1e-7, tol_off=1e-8):
    jack = laguerre.jack
    n, alpha = jack.n, jack.alpha
    a = laguerre.a
    etas = comb.compositions_up_to(n, max_weight)
    n0 = ground_state_L(n, alpha, a)
    out = []
    for i, eta in enumerate(etas):
        for nu in etas[i:]:
            got = quad_inner_L(laguerre.E(eta), laguerre.E(nu), alpha, a)
            if eta == nu:
                want = float(laguerre.norm_ratio(eta)) * n0
                rep = _report("laguerre-gram-diagonal", n, alpha, got, want,
                              tol_diag, a=a, extra={"eta": list(eta)})
            else:
                scale = n0 * sqrt(float(laguerre.norm_ratio(eta))
                                  * float(laguerre.norm_ratio(nu)))
                rep = _report("laguerre-gram-offdiagonal", n, alpha,
                              got / scale, 0.0, tol_off, a=a,
                              extra={"eta": list(eta), "nu": list(nu)})
            out.append(rep)
    return out


def _kernel_eval_in_y(kernel, n, zval):
    """Fix the y block of a 2n-variable kernel at a float point; returns a
    callable of the x block."""
    f = evaluator(kernel)

    def h(*xs):
        return f(*xs, *zval)

    return h


def _transform_lhs(hermite, kernel_D, kernel_D1, eta, zval, imaginary=False):
    """Gaussian-kernel transform integrals at two truncation levels.

    The coarse level sets the truncation budget; parity can silence the
    first omitted slice, so the fine level sits two degrees higher.
    """
    jack = hermite.jack
    n, alpha = jack.n, jack.alpha
    if imaginary:
        inner = jack.E(eta)
        zpt = [-1j * z for z in zval]
        rot = 1j
    else:
        inner = hermite.E(eta)
        zpt = list(zval)
        rot = 1.0
    ev_inner = evaluator(inner)
    out = []
    for K in (kernel_D, kernel_D1):
        K2 = scale_block(K, range(n), 2)
        h = _kernel_eval_in_y(K2, n, zpt)
        deg = K.total_degree() + inner.total_degree()
        fn = (lambda *xs: h(*xs) * ev_inner(*[rot * x for x in xs]))
        out.append(gaussian_weighted_integral(fn, alpha, deg, n))
    return out


def check_hermite_transform(hermite, eta, D, zval=None):
    """Gaussian-kernel integral of the deformed polynomial reproduces the
    plain one at the kernel argument (exp-weighted)."""
    jack = hermite.jack
    n, alpha = jack.n, jack.alpha
    zval = zval or ([0.4] if n == 1 else [0.4, -0.3])
    kd = kernel_KA(jack, D)
    kd1 = kernel_KA(jack, D + 2)
    lhs_D, lhs = _transform_lhs(hermite, kd, kd1, eta, zval)
    budget = abs(lhs - lhs_D)
    rhs = (ground_state_H(n, alpha)
           * np.exp(sum(z * z for z in zval))
           * evaluator(jack.E(eta))(*zval))
    tol = max(1e-6, 10.0 * budget / max(1.0, abs(rhs)))
    return _report("gaussian-kernel-transform", n, alpha, lhs, rhs, tol,
                   D=D, extra={"eta": list(eta), "z": zval,
                               "truncation_budget": budget})


def check_hermite_transform_imaginary(hermite, eta, D, zval=None):
    """Rotated variant: integrating the plain polynomial at imaginary
    argument reproduces the deformed one."""
    jack = hermite.jack
    n, alpha = jack.n, jack.alpha
    zval = zval or ([0.4] if n == 1 else [0.4, -0.3])
    kd = kernel_KA(jack, D)
    kd1 = kernel_KA(jack, D + 2)
    lhs_D, lhs = _transform_lhs(hermite, kd, kd1, eta, zval, imaginary=True)
    budget = abs(lhs - lhs_D)
    rhs = (ground_state_H(n, alpha)
           * np.exp(-sum(z * z for z in zval))
           * evaluator(hermite.E(eta))(*zval))
    lhs = complex(lhs)
    tol = max(1e-6, 10.0 * budget / max(1.0, abs(rhs)))
    return _report("gaussian-kernel-transform-imaginary", n, alpha, lhs, rhs,
                   tol, D=D, extra={"eta": list(eta), "z": zval,
                                    "truncation_budget": budget})


def check_laguerre_transform(laguerre, eta, D, zval=None):
    """Laguerre-kernel integral of the plain polynomial at negated argument
    reproduces the deformed one."""
    jack = laguerre.jack
    n, alpha = jack.n, jack.alpha
    a = laguerre.a
    zval = zval or ([0.3] if n == 1 else [0.3, 0.15])
    inner = jack.E(eta).negate_all_vars()
    ev_inner = evaluator(inner)
    vals = []
    for DD in (D, D + 2):
        K = kernel_KB(jack, a, DD)
        h = _kernel_eval_in_y(K, n, [-z for z in zval])
        deg = K.total_degree() + inner.total_degree()
        fn = (lambda *ys: h(*ys) * ev_inner(*ys))
        vals.append(laguerre_weighted_integral(fn, alpha, a, deg, n))
    lhs_D, lhs = vals
    budget = abs(lhs - lhs_D)
    rhs = (ground_state_L(n, alpha, a) * np.exp(-sum(zval))
           * evaluator(laguerre.E(eta))(*zval))
    tol = max(1e-6, 10.0 * budget / max(1.0, abs(rhs)))
    return _report("laguerre-kernel-transform", n, alpha, lhs, rhs, tol,
                   a=a, D=D, extra={"eta": list(eta), "z": zval,
                                    "truncation_budget": budget})


def check_laplace_transform(laguerre, eta, which, tau=1.5, tol=1e-8):
    """Laplace transform evaluations at equal components t = tau * (1,..,1),
    where the type-A kernel collapses exactly to exp(-tau * sum x).

    ``which`` selects the deformed ('laguerre') or plain ('jack') input.
    """
    jack = laguerre.jack
    n, alpha = jack.n, jack.alpha
    a = laguerre.a
    aq = laguerre.shifted_a
    if which == "laguerre":
        inner = laguerre.E(eta)
        rhs_poly = jack.E(eta)
        rhs_arg = [1.0 / tau - 1.0] * n
    elif which == "jack":
        inner = jack.E(eta)
        rhs_poly = jack.E(eta)
        rhs_arg = [1.0 / tau] * n
    else:
        raise ValueError("which must be 'laguerre' or 'jack'")
    lhs = laguerre_weighted_integral(evaluator(inner), alpha, a,
                                     inner.total_degree(), n, rate=tau)
    rhs = (float(comb.gen_fact(aq, eta, alpha)) * ground_state_L(n, alpha, a)
           * tau ** (-n * float(aq)) * evaluator(rhs_poly)(*rhs_arg))
    return _report(f"laplace-transform-{which}", n, alpha, lhs, rhs, tol,
                   a=a, extra={"eta": list(eta), "tau": tau})


def check_selberg_ratio(jack, eta, lam1, lam2, tol=1e-9, npts=48):
    """Beta-weighted integral ratio over the unit cube (n <= 2):

    the average of E_eta under t^lam1 (1-t)^lam2 |t_i - t_j|^(2/alpha)
    against its closed rising-factorial form.  lam2 must be a
    non-negative integer so the quadrature stays exact.
    """
    n, alpha = jack.n, jack.alpha
    if lam2 != int(lam2) or lam2 < 0:
        raise ValueError("lam2 must be a non-negative integer")
    lam1f, lam2f, alf = float(lam1), float(lam2), float(alpha)
    ev = evaluator(jack.E(tuple(eta)))

    if n == 1:
        x, w = roots_jacobi(npts, lam2f, lam1f)
        t = (1.0 + x) / 2.0
        num = float(np.sum(w * ev(t)))
        den = float(np.sum(w))
    elif n == 2:
        # fold to t1 > t2 and substitute t2 = t1 * s: both axes get
        # Jacobi weights, the leftover (1 - t1 s)^lam2 is polynomial
        xo, wo = roots_jacobi(npts, lam2f, 2.0 * lam1f + 2.0 / alf + 1.0)
        t1 = (1.0 + xo) / 2.0
        xi, wi = roots_jacobi(npts, 2.0 / alf, lam1f)
        s = (1.0 + xi) / 2.0

        def fold(f):
            total = 0.0
            for t1v, wv in zip(t1, wo):
                inner = (1.0 - t1v * s) ** lam2f * (
                    f(np.full_like(s, t1v), t1v * s)
                    + f(t1v * s, np.full_like(s, t1v)))
                total += wv * np.sum(wi * inner)
            return total

        num = fold(lambda u, v: ev(u, v))
        den = fold(lambda u, v: np.ones_like(u))
    else:
        raise ValueError("implemented for n <= 2")

    lhs = num / den
    kappa = comb.eta_plus(tuple(eta))
    from fractions import Fraction

    top = comb.rf_partition(
        Fraction(lam1) + Fraction(n - 1) / jack.alpha + 1, kappa, jack.alpha)
    bot = comb.rf_partition(
        Fraction(lam1) + Fraction(lam2) + 2 * Fraction(n - 1) / jack.alpha + 2,
        kappa, jack.alpha)
    rhs = float(comb.e_const(eta, jack.alpha) / comb.d_const(eta, jack.alpha)
                * top / bot)
    return _report("selberg-integral-ratio", n, alpha, lhs, rhs, tol,
                   extra={"eta": list(eta), "lam1": str(lam1),
                          "lam2": str(lam2)})


def check_classical_reductions(alpha=1.0, a=0.5, tol=1e-10):
    """n = 1 sanity layer: the machinery reduces to textbook values."""
    out = []
    one = SparsePoly.one(1)
    got = quad_inner_H(one, one, alpha)
    out.append(_report("classical-gaussian-total-mass", 1, alpha, got,
                       sqrt(pi), tol))
    got = quad_inner_L(one, one, alpha, a)
    out.append(_report("classical-laguerre-total-mass", 1, alpha, got,
                       gamma(a + 1.0), tol, a=a))
    # one-variable Laplace transform of x^a x^k against its gamma value
    for k in range(4):
        tau = 1.25
        mono = SparsePoly.monomial(1, (k,))
        lhs = laguerre_weighted_integral(evaluator(mono), alpha, a, k, 1,
                                         rate=tau)
        rhs = gamma(a + k + 1.0) / tau ** (a + k + 1.0)
        out.append(_report("classical-laplace-monomial", 1, alpha, lhs, rhs,
                           tol, a=a, extra={"k": k}))
    # one-variable kernel transform with the exact exponential kernel
    from .hermite_laguerre import HermiteBasis
    from .jack import JackBasis

    jb = JackBasis(1, alpha)
    hb = HermiteBasis(jb)
    z = 0.4
    for k in range(4):
        ev = evaluator(hb.E((k,)))
        fn = lambda y: np.exp(2.0 * y * z) * ev(y)
        lhs = gaussian_weighted_integral(fn, alpha, 2 * k + 40, 1, npts=64)
        rhs = sqrt(pi) * np.exp(z * z) * z ** k
        out.append(_report("classical-gaussian-kernel-transform", 1, alpha,
                           lhs, rhs, tol, extra={"k": k}))
    return out


def refinement_deltas(integral_fn, sizes):
    """Successive refinement changes; a convergence diagnostic."""
    vals = [integral_fn(N) for N in sizes]
    return [abs(b - a) for a, b in zip(vals, vals[1:])]
