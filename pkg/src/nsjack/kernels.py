"""Degree-truncated bilinear kernels, generalized binomial coefficients,
and the identity suite built on them.

A truncated kernel lives in 2n variables: the first n form the x block,
the last n the y block.  Its bidegree-(d,d) slice is the weight-d part of
the bilinear sum over labels, so an identity involving multiplication by
an exponential or a binomial series is compared only on the degree range
where both sides are complete; each check states its own range.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from math import factorial

from . import combinat as comb
from .operators import Operators
from .poly import SparsePoly, exp_truncated, geometric_substitution, series_binomial

# ---------------------------------------------------------------------------
# block plumbing


def embed(p, total, offset):
    """Reinterpret p in a larger variable set, shifted by ``offset``."""
    out = {}
    for e, c in p.terms.items():
        ne = [0] * total
        for i, k in enumerate(e):
            ne[offset + i] = k
        out[tuple(ne)] = c
    return SparsePoly(total, out)


def bilinear(px, py, n, extra=0):
    """px in the x block times py in the y block (plus ``extra`` spare vars)."""
    return embed(px, 2 * n + extra, 0) * embed(py, 2 * n + extra, n)


def xdeg(e, n):
    return sum(e[:n])


def ydeg(e, n):
    return sum(e[n:2 * n])


def scale_block(p, block, factor):
    """Substitute x_i -> factor * x_i for i in block."""
    factor = Fraction(factor)
    return SparsePoly(
        p.n,
        {e: c * factor ** sum(e[i] for i in block) for e, c in p.terms.items()})


def negate_block(p, block):
    return scale_block(p, block, -1)


def symmetrize_block(p, block):
    """Sum of p over all permutations of the block variables."""
    from itertools import permutations

    total = SparsePoly.zero(p.n)
    idx = list(block)
    for perm in permutations(idx):
        sigma = list(range(p.n))
        for src, dst in zip(idx, perm):
            sigma[src] = dst
        total = total + p.permute_vars(sigma)
    return total


def p_power_sum(n, total, offset, k):
    """sum of x_i^k over a block, as a polynomial in ``total`` variables."""
    out = {}
    for i in range(n):
        e = [0] * total
        e[offset + i] = k
        out[tuple(e)] = Fraction(1)
    return SparsePoly(total, out)


# ---------------------------------------------------------------------------
# kernels


def kernel_series(jack, up, down, D, extra=0):
    """Truncated bilinear series sum_{|eta| <= D} of

    alpha^{|eta|} * prod [u]_eta / prod [v]_eta * d/(d'e) * E_eta(x) E_eta(y).

    Raises if a denominator factor vanishes, naming the offending label.
    """
    n, al = jack.n, jack.alpha
    total = SparsePoly.zero(2 * n + extra)
    for w in range(D + 1):
        for eta in comb.compositions(n, w):
            coeff = al ** w * comb.d_const(eta, al) / (
                comb.d_prime_const(eta, al) * comb.e_const(eta, al))
            for u in up:
                coeff *= comb.gen_fact(u, eta, al)
            for v in down:
                gv = comb.gen_fact(v, eta, al)
                if gv == 0:
                    raise ValueError(
                        f"singular kernel parameter {v} at label {eta}")
                coeff /= gv
            E = jack.E(eta)
            total = total + coeff * bilinear(E, E, n, extra)
    return total


def kernel_KA(jack, D, extra=0):
    return kernel_series(jack, [], [], D, extra)


def kernel_KB(jack, a, D, extra=0):
    q = 1 + Fraction(jack.n - 1) / jack.alpha
    return kernel_series(jack, [], [Fraction(a) + q], D, extra)


def kernel_2K1(jack, a, b, c, D):
    return kernel_series(jack, [a, b], [c], D)


def kernel_1K1(jack, a, c, D):
    return kernel_series(jack, [a], [c], D)


def hyper_0F0(jack, D):
    """Truncated symmetric hypergeometric kernel built from the J basis."""
    n, al = jack.n, jack.alpha
    total = SparsePoly.zero(2 * n)
    for w in range(D + 1):
        for kappa in comb.partitions(w, n):
            J = jack.J(kappa)
            coeff = al ** w / (comb.hook_norm_j(kappa, al) * jack.J_ones(kappa))
            total = total + coeff * bilinear(J, J, n)
    return total


def kernel_slices(kernel, n, D):
    """Split a truncated kernel into its bidegree-(d,d) slices."""
    out = []
    for d in range(D + 1):
        out.append(kernel.filter_terms(lambda e, d=d: xdeg(e, n) == d))
    return out


# ---------------------------------------------------------------------------
# generalized binomial coefficients


class BinomialTable:
    """Coefficients of E_eta(1+z)/E_eta(1^n) over {E_nu(z)/E_nu(1^n)}."""

    def __init__(self, jack):
        self.jack = jack
        self._rows = {}

    def row(self, eta):
        eta = tuple(eta)
        got = self._rows.get(eta)
        if got is None:
            shifted = self.jack.E(eta).shift_by_one()
            coeffs = self.jack.expand_in_E(shifted)
            e_top = self.jack.eval_ones(eta)
            got = {nu: c * self.jack.eval_ones(nu) / e_top
                   for nu, c in coeffs.items()}
            self._rows[eta] = got
        return got

    def coeff(self, eta, nu):
        return self.row(eta).get(tuple(nu), Fraction(0))


def binomial_coeff(jack, eta, nu):
    table = getattr(jack, "_binomials", None)
    if table is None:
        table = BinomialTable(jack)
        jack._binomials = table
    return table.coeff(eta, nu)


def binomial_n_independence(eta, nu, alpha, n1, n2):
    """Check that the coefficient agrees when computed in n1 and n2 variables.

    The labels are zero-padded; both counts must cover their supports.
    """
    from .jack import JackBasis

    support = max(len([x for x in eta if x]), len([x for x in nu if x]), 1)
    if min(n1, n2) < support:
        raise ValueError("variable counts must cover the label supports")
    vals = []
    for n in (n1, n2):
        jb = JackBasis.shared(n, alpha)
        pe = tuple(eta) + (0,) * (n - len(eta))
        pn = tuple(nu) + (0,) * (n - len(nu))
        vals.append(binomial_coeff(jb, pe, pn))
    return {
        "identity": "binomial-n-independence",
        "eta": list(eta), "nu": list(nu), "alpha": str(Fraction(alpha)),
        "n_pair": [n1, n2],
        "status": "pass" if vals[0] == vals[1] else "fail",
        "values": [str(v) for v in vals],
    }


def sym_binomial(jack, kappa, sigma):
    """Symmetric binomial coefficient from the J-basis expansion of J(1+z)."""
    kappa = tuple(kappa)
    sigma = tuple(sigma)
    cache = getattr(jack, "_sym_binomials", None)
    if cache is None:
        cache = {}
        jack._sym_binomials = cache
    row = cache.get(kappa)
    if row is None:
        shifted = jack.J(kappa).shift_by_one()
        e_coeffs = jack.expand_in_E(shifted)
        row = {}
        for eta, c in e_coeffs.items():
            mu = comb.eta_plus(eta)
            # coefficient of J_mu is c * d'_eta / j_mu, constant over the orbit
            b = c * comb.d_prime_const(eta, jack.alpha) / comb.hook_norm_j(mu, jack.alpha)
            prev = row.get(mu)
            if prev is not None and prev != b:
                raise ArithmeticError("J expansion inconsistent across an orbit")
            row[mu] = b
        row = {mu: b * jack.J_ones(mu) / jack.J_ones(kappa) for mu, b in row.items()}
        cache[kappa] = row
    pad = sigma + (0,) * (jack.n - len(sigma))
    return row.get(tuple(sorted(pad, reverse=True)), Fraction(0))


def eps_eigenvalue(eta, alpha):
    """Eigenvalue of the degree-preserving second-order operator on E_eta."""
    alpha = Fraction(alpha)
    n = len(eta)
    kappa = comb.eta_plus(eta)
    return sum(Fraction(k * (k - 1)) + 2 * Fraction(n - 1 - j) * k / alpha
               for j, k in enumerate(kappa))


# ---------------------------------------------------------------------------
# identity suite


def _report(identity, jack, D, params, failure=None):
    rep = {
        "identity": identity,
        "n": jack.n,
        "alpha": str(jack.alpha),
        "D": D,
        "params": {k: str(v) for k, v in (params or {}).items()},
        "status": "pass" if failure is None else "fail",
    }
    if failure is not None:
        rep["first_failure"] = failure
    return rep


def _first_failure(diff, n):
    e, c = min(diff.terms.items())
    return {"bidegree": [xdeg(e, n), ydeg(e, n)], "exponents": list(e),
            "coefficient": str(c)}


def check_symmetry_and_multiplication(jack, D, **_):
    """Swap-equivariance of the kernel and the multiplication rule for the
    y-block Dunkl operators."""
    n = jack.n
    K = kernel_KA(jack, D)
    opx = Operators(n, jack.alpha, block=range(n))
    opy = Operators(n, jack.alpha, block=range(n, 2 * n))
    for i in range(n - 1):
        diff = opx.s(K, i) - opy.s(K, i)
        if not diff.is_zero:
            fail = _first_failure(diff, n)
            fail["check"] = "swap equivariance"
            return _report("kernel-symmetry-multiplication", jack, D, {}, fail)
    for i in range(n):
        xi = SparsePoly.variable(2 * n, i)
        diff = (opy.dunkl(K, i) - xi * K).filter_terms(
            lambda e: xdeg(e, n) <= D)
        if not diff.is_zero:
            fail = _first_failure(diff, n)
            fail["check"] = "dunkl multiplication"
            return _report("kernel-symmetry-multiplication", jack, D, {}, fail)
    return _report("kernel-symmetry-multiplication", jack, D, {})


def check_exp_shift(jack, D, **_):
    """Multiplying by exp(p1 of x) shifts the y argument by one."""
    n = jack.n
    K = kernel_KA(jack, D)
    expx = exp_truncated(p_power_sum(n, 2 * n, 0, 1), D,
                         deg=lambda e: xdeg(e, n))
    lhs = (expx * K).filter_terms(lambda e: xdeg(e, n) <= D)
    rhs = K.shift_by_one(only=range(n, 2 * n))
    diff = lhs - rhs
    if not diff.is_zero:
        return _report("kernel-exp-shift", jack, D, {}, _first_failure(diff, n))
    return _report("kernel-exp-shift", jack, D, {})


def check_hermite_gf(jack, D, hermite=None, **_):
    """Generating function of the Gaussian-deformed family."""
    from .hermite_laguerre import HermiteBasis

    n, al = jack.n, jack.alpha
    hb = hermite or HermiteBasis(jack)
    lhs = SparsePoly.zero(2 * n)
    for w in range(D + 1):
        for eta in comb.compositions(n, w):
            coeff = (2 * al) ** w * comb.d_const(eta, al) / (
                comb.e_const(eta, al) * comb.d_prime_const(eta, al))
            lhs = lhs + coeff * bilinear(hb.E(eta), jack.E(eta), n)
    K2x = scale_block(kernel_KA(jack, D), range(n), 2)
    expz = exp_truncated(-p_power_sum(n, 2 * n, n, 2), D,
                         deg=lambda e: ydeg(e, n))
    rhs = (K2x * expz).filter_terms(lambda e: ydeg(e, n) <= D)
    diff = lhs - rhs
    if not diff.is_zero:
        return _report("hermite-generating-function", jack, D, {},
                       _first_failure(diff, n))
    return _report("hermite-generating-function", jack, D, {})


def check_symmetrization(jack, D, **_):
    """Symmetrizing the x block yields n! times the symmetric kernel."""
    n = jack.n
    lhs = symmetrize_block(kernel_KA(jack, D), range(n))
    rhs = factorial(n) * hyper_0F0(jack, D)
    diff = lhs - rhs
    if not diff.is_zero:
        return _report("kernel-symmetrization", jack, D, {},
                       _first_failure(diff, n))
    return _report("kernel-symmetrization", jack, D, {})


def check_exp_expansion(jack, D, **_):
    """exp(p1) E_eta expands over the basis with binomial coefficients."""
    n, al = jack.n, jack.alpha
    p1 = p_power_sum(n, n, 0, 1)
    for w in range(D + 1):
        for eta in comb.compositions(n, w):
            lhs = (exp_truncated(p1, D) * jack.E(eta)).filter_terms(
                lambda e: sum(e) <= D)
            lhs = al ** w / comb.d_prime_const(eta, al) * lhs
            rhs = SparsePoly.zero(n)
            for w2 in range(w, D + 1):
                for nu in comb.compositions(n, w2):
                    b = binomial_coeff(jack, nu, eta)
                    if b:
                        rhs = rhs + (al ** w2 / comb.d_prime_const(nu, al)
                                     * b) * jack.E(nu)
            diff = lhs - rhs
            if not diff.is_zero:
                return _report("exp-binomial-expansion", jack, D,
                               {"eta": eta},
                               {"exponents": list(min(diff.terms))})
    return _report("exp-binomial-expansion", jack, D, {})


def check_p1_action(jack, D, **_):
    """Multiplication by p1 raises the label through binomial coefficients."""
    n, al = jack.n, jack.alpha
    p1 = p_power_sum(n, n, 0, 1)
    for w in range(D):
        for eta in comb.compositions(n, w):
            lhs = p1 * jack.E(eta)
            rhs = SparsePoly.zero(n)
            for nu in comb.compositions(n, w + 1):
                b = binomial_coeff(jack, nu, eta)
                if b:
                    rhs = rhs + b / comb.d_prime_const(nu, al) * jack.E(nu)
            rhs = al * comb.d_prime_const(eta, al) * rhs
            diff = lhs - rhs
            if not diff.is_zero:
                return _report("p1-raising-action", jack, D, {"eta": eta},
                               {"exponents": list(min(diff.terms))})
    return _report("p1-raising-action", jack, D, {})


def check_euler_actions(jack, D, **_):
    """Actions of the Euler-type operators on the basis, with the
    second-order eigenvalue feeding the degree-raising action."""
    n, al = jack.n, jack.alpha
    ops = jack.ops
    for w in range(D + 1):
        for eta in comb.compositions(n, w):
            E = jack.E(eta)
            eps_eta = eps_eigenvalue(eta, al)
            # eigenoperator check
            if ops.d2_tilde(E) != eps_eta * E:
                return _report("euler-actions", jack, D, {"eta": eta},
                               {"check": "second-order eigenvalue"})
            # commutator identity defining the lowering companion
            half_comm = (ops.euler(ops.d2_tilde(E), 0)
                         - ops.d2_tilde(ops.euler(E, 0))) / 2
            if ops.d1_tilde(E) != half_comm:
                return _report("euler-actions", jack, D, {"eta": eta},
                               {"check": "commutator identity"})
            e_eta = jack.eval_ones(eta)
            # degree lowering by sum of derivatives
            lhs0 = ops.euler(E, 0) / e_eta
            rhs0 = SparsePoly.zero(n)
            lhs1 = ops.d1_tilde(E) / e_eta
            rhs1 = SparsePoly.zero(n)
            if w >= 1:
                for nu in comb.compositions(n, w - 1):
                    b = binomial_coeff(jack, eta, nu)
                    if b:
                        t = b / jack.eval_ones(nu) * jack.E(nu)
                        rhs0 = rhs0 + t
                        rhs1 = rhs1 + (eps_eta - eps_eigenvalue(nu, al)) / 2 * t
            if lhs0 != rhs0:
                return _report("euler-actions", jack, D, {"eta": eta},
                               {"check": "derivative lowering"})
            if lhs1 != rhs1:
                return _report("euler-actions", jack, D, {"eta": eta},
                               {"check": "second-order lowering"})
            # degree raising by the squared Euler operator
            if w < D:
                lhs2 = ops.euler(E, 2)
                rhs2 = SparsePoly.zero(n)
                for nu in comb.compositions(n, w + 1):
                    b = binomial_coeff(jack, nu, eta)
                    if b:
                        fac = (eps_eigenvalue(nu, al) - eps_eta
                               - 2 * Fraction(n - 1) / al)
                        rhs2 = rhs2 + b * fac / comb.d_prime_const(nu, al) * jack.E(nu)
                rhs2 = al / 2 * comb.d_prime_const(eta, al) * rhs2
                if lhs2 != rhs2:
                    return _report("euler-actions", jack, D, {"eta": eta},
                                   {"check": "squared-Euler raising"})
    return _report("euler-actions", jack, D, {})


def check_2k1_pde(jack, D, a=None, b=None, c=None, **_):
    """The two-parameter kernel satisfies its second-order PDE."""
    n, al = jack.n, jack.alpha
    a = Fraction(a if a is not None else Fraction(1, 2))
    b = Fraction(b if b is not None else Fraction(4, 3))
    c = Fraction(c if c is not None else n + 2)
    F = kernel_2K1(jack, a, b, c, D)
    opx = Operators(n, al, block=range(n))
    opy = Operators(n, al, block=range(n, 2 * n))
    nm1 = Fraction(n - 1) / al
    comm = opy.d2_tilde(opy.euler(F, 2)) - opy.euler(opy.d2_tilde(F), 2)
    lhs = (opx.d1_tilde(F) + (c - nm1) * opx.euler(F, 0)
           - (a + b - nm1) * opy.euler(F, 2) - comm / 2)
    rhs = a * b * p_power_sum(n, 2 * n, n, 1) * F
    diff = (lhs - rhs).filter_terms(lambda e: ydeg(e, n) <= D)
    if not diff.is_zero:
        return _report("2k1-pde", jack, D, {"a": a, "b": b, "c": c},
                       _first_failure(diff, n))
    return _report("2k1-pde", jack, D, {"a": a, "b": b, "c": c})


def check_laguerre_gf(jack, D, a=Fraction(1, 2), laguerre=None, **_):
    """Principal Laguerre generating function via the type-B kernel."""
    from .hermite_laguerre import LaguerreBasis

    n, al = jack.n, jack.alpha
    lb = laguerre or LaguerreBasis(jack, a)
    aq = lb.shifted_a
    lhs = SparsePoly.zero(2 * n)
    for w in range(D + 1):
        for eta in comb.compositions(n, w):
            coeff = ((-al) ** w / comb.gen_fact(aq, eta, al)
                     * comb.d_const(eta, al)
                     / (comb.d_prime_const(eta, al) * comb.e_const(eta, al)))
            lhs = lhs + coeff * bilinear(lb.E(eta), jack.E(eta), n)
    KB = negate_block(kernel_KB(jack, lb.a, D), range(n, 2 * n))
    expz = exp_truncated(p_power_sum(n, 2 * n, n, 1), D,
                         deg=lambda e: ydeg(e, n))
    rhs = (KB * expz).filter_terms(lambda e: ydeg(e, n) <= D)
    diff = lhs - rhs
    if not diff.is_zero:
        return _report("laguerre-generating-function", jack, D, {"a": lb.a},
                       _first_failure(diff, n))
    return _report("laguerre-generating-function", jack, D, {"a": lb.a})


def _binomial_prefactor_series(jack, exponent, D):
    """prod_i (1 - z_i)^(-exponent) truncated at y-degree D, in 2n vars."""
    n = jack.n
    coeffs = series_binomial(exponent, D)
    out = SparsePoly.one(2 * n)
    for i in range(n):
        uni = SparsePoly.zero(2 * n)
        for k, ck in enumerate(coeffs):
            e = [0] * (2 * n)
            e[n + i] = k
            uni = uni + SparsePoly.monomial(2 * n, tuple(e), ck)
        out = (out * uni).filter_terms(lambda e: ydeg(e, n) <= D)
    return out


def _gf_rhs(jack, lag, weights, D):
    """Bilinear sum of weights(eta) * E^L_eta(x) E_eta(z) up to weight D."""
    n = jack.n
    out = SparsePoly.zero(2 * n)
    for w in range(D + 1):
        for eta in comb.compositions(n, w):
            out = out + weights(eta) * bilinear(lag.E(eta), jack.E(eta), n)
    return out


def check_1k1_gf(jack, D, a=Fraction(1, 2), c=None, laguerre=None, **_):
    """Laguerre generating function through the one-parameter kernel with a
    geometric change of argument."""
    from .hermite_laguerre import LaguerreBasis

    n, al = jack.n, jack.alpha
    lb = laguerre or LaguerreBasis(jack, a)
    aq = lb.shifted_a
    c = Fraction(c if c is not None else Fraction(3, 2))
    cq = c + 1 + Fraction(n - 1) / al
    K = kernel_1K1(jack, cq, aq, D)
    K = negate_block(K, range(n))
    K = geometric_substitution(K, range(n, 2 * n), D,
                               deg=lambda e: ydeg(e, n))
    lhs = (_binomial_prefactor_series(jack, cq, D) * K).filter_terms(
        lambda e: ydeg(e, n) <= D)

    def weights(eta):
        w = sum(eta)
        return ((-al) ** w * comb.gen_fact(cq, eta, al)
                / comb.gen_fact(aq, eta, al) * comb.d_const(eta, al)
                / (comb.d_prime_const(eta, al) * comb.e_const(eta, al)))

    rhs = _gf_rhs(jack, lb, weights, D)
    diff = lhs - rhs
    params = {"a": lb.a, "c": c}
    if not diff.is_zero:
        return _report("1k1-generating-function", jack, D, params,
                       _first_failure(diff, n))
    return _report("1k1-generating-function", jack, D, params)


def check_ka_laguerre_gf(jack, D, a=Fraction(1, 2), laguerre=None, **_):
    """Laguerre generating function through the type-A kernel."""
    from .hermite_laguerre import LaguerreBasis

    n, al = jack.n, jack.alpha
    lb = laguerre or LaguerreBasis(jack, a)
    aq = lb.shifted_a
    K = negate_block(kernel_KA(jack, D), range(n))
    K = geometric_substitution(K, range(n, 2 * n), D,
                               deg=lambda e: ydeg(e, n))
    lhs = (_binomial_prefactor_series(jack, aq, D) * K).filter_terms(
        lambda e: ydeg(e, n) <= D)

    def weights(eta):
        w = sum(eta)
        return ((-al) ** w * comb.d_const(eta, al)
                / (comb.d_prime_const(eta, al) * comb.e_const(eta, al)))

    rhs = _gf_rhs(jack, lb, weights, D)
    diff = lhs - rhs
    if not diff.is_zero:
        return _report("ka-laguerre-generating-function", jack, D, {"a": lb.a},
                       _first_failure(diff, n))
    return _report("ka-laguerre-generating-function", jack, D, {"a": lb.a})


def check_laguerre_jack_expansions(jack, D, a=Fraction(1, 2), laguerre=None, **_):
    """Finite binomial expansions between the Laguerre and Jack bases."""
    from .hermite_laguerre import LaguerreBasis

    n, al = jack.n, jack.alpha
    lb = laguerre or LaguerreBasis(jack, a)
    aq = lb.shifted_a
    for w in range(D + 1):
        for eta in comb.compositions(n, w):
            pref = (comb.gen_fact(aq, eta, al) * comb.e_const(eta, al)
                    / comb.d_const(eta, al))
            to_jack = SparsePoly.zero(n)
            to_lag = SparsePoly.zero(n)
            for w2 in range(w + 1):
                for nu in comb.compositions(n, w2):
                    bcf = binomial_coeff(jack, eta, nu)
                    if not bcf:
                        continue
                    ratio = (comb.d_const(nu, al) / comb.e_const(nu, al)
                             / comb.gen_fact(aq, nu, al) * bcf)
                    to_jack = to_jack + Fraction((-1) ** w2) * ratio * jack.E(nu)
                    to_lag = to_lag + ratio * lb.E(nu)
            if lb.E(eta) != Fraction((-1) ** w) * pref * to_jack:
                return _report("laguerre-jack-expansion", jack, D,
                               {"a": lb.a, "eta": eta},
                               {"check": "laguerre in jack"})
            if jack.E(eta) != pref * to_lag:
                return _report("laguerre-jack-expansion", jack, D,
                               {"a": lb.a, "eta": eta},
                               {"check": "jack in laguerre"})
    return _report("laguerre-jack-expansion", jack, D, {"a": lb.a})


def check_binomial_sum_rules(jack, D, **_):
    """Orbit sums of the coefficients against their symmetric counterparts,
    including the weighted variant."""
    n, al = jack.n, jack.alpha
    for w in range(D + 1):
        for eta in comb.compositions(n, w):
            kappa = comb.eta_plus(eta)
            for w2 in range(w + 1):
                for mu in comb.partitions(w2, n):
                    mu_pad = tuple(mu) + (0,) * (n - len(mu))
                    total = Fraction(0)
                    for nu in set(permutations(mu_pad)):
                        total += binomial_coeff(jack, eta, nu)
                    if total != sym_binomial(jack, kappa, mu):
                        return _report("binomial-sum-rules", jack, D,
                                       {"eta": eta, "mu": mu},
                                       {"check": "orbit sum"})
            # weighted orbit sum, upward in the other slot; the weights are
            # the evaluation-adjusted e/(d d') rather than bare 1/d'
            for w2 in range(w, D + 1):
                for mu in comb.partitions(w2, n):
                    mu_pad = tuple(mu) + (0,) * (n - len(mu))
                    total = Fraction(0)
                    for nu in set(permutations(mu_pad)):
                        total += (binomial_coeff(jack, nu, eta)
                                  * comb.e_const(nu, al)
                                  / comb.f_const(nu, al))
                    lhs = (comb.f_const(eta, al) / comb.e_const(eta, al)
                           * comb.hook_norm_j(mu, al) * jack.J_ones(kappa)
                           / comb.hook_norm_j(kappa, al) / jack.J_ones(mu)
                           * total)
                    if lhs != sym_binomial(jack, mu, kappa):
                        return _report("binomial-sum-rules", jack, D,
                                       {"eta": eta, "mu": mu},
                                       {"check": "weighted orbit sum"})
    return _report("binomial-sum-rules", jack, D, {})


def _t_series(c, tvar, total, T):
    """(1 - t^2)^(-c) type series: coefficients in powers of t^step."""
    def build(step):
        coeffs = series_binomial(c, T // step)
        out = SparsePoly.zero(total)
        for k, ck in enumerate(coeffs):
            if step * k > T:
                break
            e = [0] * total
            e[tvar] = step * k
            out = out + SparsePoly.monomial(total, tuple(e), ck)
        return out
    return build


def check_hermite_summation(jack, D=None, T=4, hermite=None, **_):
    """Closed form of the norm-weighted bilinear Hermite sum, as a formal
    series in an extra variable t through degree T."""
    from .hermite_laguerre import HermiteBasis

    n, al = jack.n, jack.alpha
    hb = hermite or HermiteBasis(jack)
    total = 2 * n + 1
    tvar = 2 * n
    tdeg = lambda e: e[tvar]
    t = SparsePoly.variable(total, tvar)

    lhs = SparsePoly.zero(total)
    for w in range(T + 1):
        for eta in comb.compositions(n, w):
            coeff = 1 / hb.norm_ratio(eta)
            lhs = lhs + coeff * bilinear(hb.E(eta), hb.E(eta), n, extra=1) * t ** w

    q = 1 + Fraction(n - 1) / al
    pref = _t_series(Fraction(n) * q / 2, tvar, total, T)(2)
    # exp(-u * (p2(z) + p2(w))) with u = t^2/(1-t^2) truncated
    u = SparsePoly.zero(total)
    for m in range(1, T // 2 + 1):
        u = u + t ** (2 * m)
    s2 = p_power_sum(n, total, 0, 2) + p_power_sum(n, total, n, 2)
    expf = exp_truncated(-(u * s2).filter_terms(lambda e: tdeg(e) <= T), T, deg=tdeg)
    kern = SparsePoly.zero(total)
    K = kernel_KA(jack, T, extra=1)
    for d, sl in enumerate(kernel_slices(K, n, T)):
        geom = _t_series(Fraction(d), tvar, total, T)(2)
        kern = kern + (scale_block(sl, range(n), 2) * t ** d * geom).filter_terms(
            lambda e: tdeg(e) <= T)
    rhs = (pref * expf).filter_terms(lambda e: tdeg(e) <= T)
    rhs = (rhs * kern).filter_terms(lambda e: tdeg(e) <= T)
    diff = lhs - rhs
    if not diff.is_zero:
        return _report("hermite-summation", jack, T, {},
                       {"exponents": list(min(diff.terms))})
    return _report("hermite-summation", jack, T, {})


def check_laguerre_summation(jack, D=None, T=4, a=Fraction(1, 2), laguerre=None, **_):
    """Closed form of the norm-weighted bilinear Laguerre sum, as a formal
    series in an extra variable t through degree T."""
    from .hermite_laguerre import LaguerreBasis

    n, al = jack.n, jack.alpha
    lb = laguerre or LaguerreBasis(jack, a)
    total = 2 * n + 1
    tvar = 2 * n
    tdeg = lambda e: e[tvar]
    t = SparsePoly.variable(total, tvar)

    lhs = SparsePoly.zero(total)
    for w in range(T + 1):
        for eta in comb.compositions(n, w):
            coeff = 1 / lb.norm_ratio(eta)
            lhs = lhs + coeff * bilinear(lb.E(eta), lb.E(eta), n, extra=1) * t ** w

    aq = lb.shifted_a
    pref = _t_series(Fraction(n) * aq, tvar, total, T)(1)
    u = SparsePoly.zero(total)
    for m in range(1, T + 1):
        u = u + t ** m
    s1 = p_power_sum(n, total, 0, 1) + p_power_sum(n, total, n, 1)
    expf = exp_truncated(-(u * s1).filter_terms(lambda e: tdeg(e) <= T), T, deg=tdeg)
    kern = SparsePoly.zero(total)
    K = kernel_KB(jack, lb.a, T, extra=1)
    for d, sl in enumerate(kernel_slices(K, n, T)):
        geom = _t_series(Fraction(2 * d), tvar, total, T)(1)
        kern = kern + (sl * t ** d * geom).filter_terms(lambda e: tdeg(e) <= T)
    rhs = (pref * expf).filter_terms(lambda e: tdeg(e) <= T)
    rhs = (rhs * kern).filter_terms(lambda e: tdeg(e) <= T)
    diff = lhs - rhs
    if not diff.is_zero:
        return _report("laguerre-summation", jack, T, {"a": lb.a},
                       {"exponents": list(min(diff.terms))})
    return _report("laguerre-summation", jack, T, {"a": lb.a})


IDENTITY_CHECKS = {
    "kernel-symmetry-multiplication": check_symmetry_and_multiplication,
    "kernel-exp-shift": check_exp_shift,
    "hermite-generating-function": check_hermite_gf,
    "kernel-symmetrization": check_symmetrization,
    "exp-binomial-expansion": check_exp_expansion,
    "p1-raising-action": check_p1_action,
    "euler-actions": check_euler_actions,
    "2k1-pde": check_2k1_pde,
    "laguerre-generating-function": check_laguerre_gf,
    "1k1-generating-function": check_1k1_gf,
    "ka-laguerre-generating-function": check_ka_laguerre_gf,
    "laguerre-jack-expansion": check_laguerre_jack_expansions,
    "binomial-sum-rules": check_binomial_sum_rules,
    "hermite-summation": check_hermite_summation,
    "laguerre-summation": check_laguerre_summation,
}


def verify_kernel_identity(name, jack, D, **params):
    """Run one named identity check; returns a JSON-ready report."""
    try:
        fn = IDENTITY_CHECKS[name]
    except KeyError:
        raise ValueError(f"unknown identity {name!r}") from None
    return fn(jack, D, **params)
