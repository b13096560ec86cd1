"""Constant-term inner product and the identities built on it.

For a positive integer k = 1/alpha the interaction weight expands as a
Laurent polynomial, so the torus inner product reduces to an exact
constant-term extraction.  This module also hosts the power-sum-style
inner product defined through a bilinear generating function, and its
relation to the Dunkl pairing.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from . import combinat as comb
from .linalg import solve_exact
from .poly import SparsePoly, rising, series_binomial


def _pair_factor(n, i, j, k):
    """[(1 - x_i/x_j)(1 - x_j/x_i)]^k as a Laurent polynomial."""
    e_plus = [0] * n
    e_plus[i], e_plus[j] = 1, -1
    base = (SparsePoly.one(n) - SparsePoly.monomial(n, tuple(e_plus))) * (
        SparsePoly.one(n) - SparsePoly.monomial(n, tuple(-x for x in e_plus)))
    return base ** k


_weight_cache = {}


def interaction_weight(n, k):
    """The full Laurent interaction weight at integer coupling k (cached)."""
    got = _weight_cache.get((n, k))
    if got is None:
        got = SparsePoly.one(n)
        for i, j in combinations(range(n), 2):
            got = got * _pair_factor(n, i, j, k)
        _weight_cache[n, k] = got
    return got


def weighted_ct(p, k):
    """Constant term of p times the interaction weight, by pairing each
    term of p against the opposite weight exponent (maximal pruning: only
    exponents that land exactly on zero are ever touched)."""
    w = interaction_weight(p.n, k).terms
    total = Fraction(0)
    for e, c in p.terms.items():
        cw = w.get(tuple(-x for x in e))
        if cw is not None:
            total += c * cw
    return total


def ct_inner(f, g, k):
    """Constant term of f(x) g(1/x) times the interaction weight."""
    if not isinstance(k, int) or k < 1:
        raise ValueError("constant-term inner product needs integer coupling k >= 1")
    if g.n != f.n:
        raise ValueError("ambient dimension mismatch")
    return weighted_ct(f * g.invert_vars(), k)


def ct_norm_formula(eta, k):
    """Closed-form diagonal norm: double product over pairs of spectral gaps."""
    if not isinstance(k, int) or k < 1:
        raise ValueError("needs integer coupling k >= 1")
    n = len(eta)
    alpha = Fraction(1, k)
    bars = comb.eta_bar_vec(eta, alpha)
    out = Fraction(1)
    for i, j in combinations(range(n), 2):
        gap = bars[j] - bars[i]
        eps = 1 if gap > 0 else -1
        for p in range(k):
            ratio = (k * gap + p) / (k * gap - p - 1)
            out *= ratio if eps == 1 else 1 / ratio
    return out


_beta_weight_cache = {}


def _beta_weight(n, a, b, k, depth):
    """prod_i (1-x_i)^a (1-1/x_i)^b times the interaction weight, pruned to
    the exponent window that polynomials of degree <= depth can pair with.

    Factors are multiplied one at a time; a term is dropped as soon as the
    remaining factors cannot bring its exponent back into the window.
    """
    key = (n, a, b, k, depth)
    got = _beta_weight_cache.get(key)
    if got is not None:
        return got
    factors = []
    lo, hi = [], []
    for i in range(n):
        xi = SparsePoly.variable(n, i)
        factors.append((SparsePoly.one(n) - xi) ** a)
        hi.append(tuple(a if v == i else 0 for v in range(n)))
        lo.append((0,) * n)
        factors.append((SparsePoly.one(n) - xi.invert_vars()) ** b)
        hi.append((0,) * n)
        lo.append(tuple(-b if v == i else 0 for v in range(n)))
    for i, j in combinations(range(n), 2):
        factors.append(_pair_factor(n, i, j, k))
        hi.append(tuple(k if v in (i, j) else 0 for v in range(n)))
        lo.append(tuple(-k if v in (i, j) else 0 for v in range(n)))
    # suffix reach of the remaining factors
    suffix_lo = [(0,) * n]
    suffix_hi = [(0,) * n]
    for L, H in zip(reversed(lo), reversed(hi)):
        suffix_lo.append(tuple(x + y for x, y in zip(suffix_lo[-1], L)))
        suffix_hi.append(tuple(x + y for x, y in zip(suffix_hi[-1], H)))
    suffix_lo.reverse()
    suffix_hi.reverse()
    prod = SparsePoly.one(n)
    for t, f in enumerate(factors):
        prod = prod * f
        slo, shi = suffix_lo[t + 1], suffix_hi[t + 1]
        prod = prod.filter_terms(
            lambda e: all(e[v] + slo[v] <= 0 and e[v] + shi[v] >= -depth
                          for v in range(n)))
    _beta_weight_cache[key] = prod
    return prod


def kadell_ratio_check(jack, eta, a, b, k, depth=4):
    """Ratio of beta-weighted constant terms against the closed product form.

    Exact check of the Selberg-type evaluation for integer exponents a, b
    and integer coupling k = 1/alpha.
    """
    eta = tuple(eta)
    n = jack.n
    if jack.alpha != Fraction(1, k):
        raise ValueError("basis coupling must equal 1/k")
    if sum(eta) > depth:
        depth = sum(eta)
    P = _beta_weight(n, a, b, k, depth).terms
    E = jack.E(eta)
    num = sum((c * P.get(tuple(-x for x in e), Fraction(0))
               for e, c in E.terms.items()), Fraction(0))
    den = P[(0,) * n]
    lhs = num / den
    kappa = comb.eta_plus(eta)
    top = comb.rf_partition(-b, kappa, jack.alpha)
    bot = comb.rf_partition(1 + a + Fraction(n - 1) / jack.alpha, kappa, jack.alpha)
    rhs = jack.eval_ones(eta) * top / bot
    return {
        "identity": "kadell-ratio",
        "n": n, "alpha": str(jack.alpha), "eta": list(eta),
        "params": {"a": a, "b": b, "k": k},
        "lhs": str(lhs), "rhs": str(rhs),
        "status": "pass" if lhs == rhs else "fail",
    }


def norm_relation_check(jack, eta, k):
    """Relation between the constant-term norm ratio and the all-ones value,
    with the gamma ratios reduced to exact rising factorials."""
    eta = tuple(eta)
    n = jack.n
    if jack.alpha != Fraction(1, k):
        raise ValueError("basis coupling must equal 1/k")
    al = jack.alpha
    E = jack.E(eta)
    norm_eta = ct_inner(E, E, k)
    norm_0 = ct_inner(SparsePoly.one(n), SparsePoly.one(n), k)
    lhs = al ** sum(eta) / comb.d_prime_const(eta, al) * norm_eta / norm_0
    kappa = comb.eta_plus(eta)
    gamma_ratio = Fraction(1)
    for j in range(1, n + 1):
        gamma_ratio *= rising(1 + Fraction(j - 1) / al, kappa[n - j])
    rhs = jack.eval_ones(eta) / gamma_ratio
    return {
        "identity": "ct-norm-relation",
        "n": n, "alpha": str(al), "eta": list(eta), "params": {"k": k},
        "lhs": str(lhs), "rhs": str(rhs),
        "status": "pass" if lhs == rhs else "fail",
    }


# ---------------------------------------------------------------------------
# power-sum-style inner product


def power_sum_basis(n, alpha, D):
    """The dual basis polynomials p_eta from the bilinear generating function

    prod_i 1/(1-x_i y_i) * prod_{i,j} 1/(1-x_i y_j)^(1/alpha),

    expanded through total y-degree D; returns {eta: p_eta}.
    """
    alpha = Fraction(alpha)
    inv = 1 / alpha
    total = SparsePoly.one(2 * n)
    ydeg = lambda e: sum(e[n:])
    for i in range(n):
        for j in range(n):
            expo = inv + 1 if i == j else inv
            coeffs = series_binomial(expo, D)
            factor = SparsePoly.zero(2 * n)
            for m, c in enumerate(coeffs):
                e = [0] * (2 * n)
                e[i], e[n + j] = m, m
                factor = factor + SparsePoly.monomial(2 * n, tuple(e), c)
            total = (total * factor).filter_terms(lambda e: ydeg(e) <= D)
    out = {}
    for e, c in total.terms.items():
        eta = e[n:]
        xexp = e[:n]
        p = out.setdefault(eta, {})
        p[xexp] = c
    return {eta: SparsePoly(n, terms) for eta, terms in out.items()}


class SahiInner:
    """Inner product making the monomials dual to the p_eta family."""

    def __init__(self, n, alpha, D):
        self.n = n
        self.alpha = Fraction(alpha)
        self.D = D
        self.p = power_sum_basis(n, alpha, D)

    def _expand(self, f):
        """Coefficients of f over {p_eta} of its degree, by exact solve."""
        if not f.is_homogeneous():
            raise ValueError("inner product arguments must be homogeneous")
        d = f.total_degree()
        if d > self.D:
            raise ValueError("degree exceeds the prepared table")
        etas = [eta for eta in self.p if sum(eta) == d]
        monos = sorted({e for eta in etas for e in self.p[eta].terms})
        rows = [[self.p[eta].terms.get(m, Fraction(0)) for eta in etas]
                for m in monos]
        rhs = [f.terms.get(m, Fraction(0)) for m in monos]
        try:
            sol = solve_exact(rows, rhs)
        except ArithmeticError as exc:
            raise ArithmeticError(
                f"p-basis failed to span degree {d} at alpha={self.alpha}") from exc
        return dict(zip(etas, sol))

    def inner(self, f, g):
        """<f, g>: expand both over p_eta and contract through the monomial
        coefficients of p."""
        if f.is_zero or g.is_zero:
            return Fraction(0)
        if f.total_degree() != g.total_degree():
            return Fraction(0)
        fc = self._expand(f)
        gc = self._expand(g)
        total = Fraction(0)
        # contraction of both p-expansions through the monomial matrix of p
        for eta, fe in fc.items():
            for nu, gn in gc.items():
                a = self.p[eta].terms.get(nu)
                if a:
                    total += fe * a * gn
        return total
