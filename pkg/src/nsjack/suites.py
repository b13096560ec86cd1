"""Named verification suites shared by the CLI and the test harness.

Each suite returns a list of JSON-ready report dicts with a ``status``
field; a suite passes when every report does.  The checks are exact
unless the report carries numeric error fields.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from math import factorial

from . import combinat as comb
from . import kernels
from . import quadrature as quad
from .cterm import (SahiInner, ct_inner, ct_norm_formula, kadell_ratio_check,
                    norm_relation_check)
from .hermite_laguerre import HermiteBasis, LaguerreBasis, _radius_squared
from .jack import JackBasis
from .operators import Operators
from .poly import SparsePoly, symmetrize

DEFAULT_ALPHAS = (Fraction(1), Fraction(2), Fraction(1, 2), Fraction(3),
                  Fraction(7, 5))
DEFAULT_A_SET = (Fraction(0), Fraction(1, 2), Fraction(1))

_hermites = {}
_laguerres = {}


def shared_hermite(n, alpha):
    key = (n, Fraction(alpha))
    got = _hermites.get(key)
    if got is None:
        got = _hermites[key] = HermiteBasis(JackBasis.shared(n, alpha))
    return got


def shared_laguerre(n, alpha, a):
    key = (n, Fraction(alpha), Fraction(a))
    got = _laguerres.get(key)
    if got is None:
        got = _laguerres[key] = LaguerreBasis(JackBasis.shared(n, alpha), a)
    return got


def _ok(check, ok, **info):
    rep = {"check": check, "status": "pass" if ok else "fail"}
    rep.update(info)
    return rep


def _monomials(n, max_deg):
    return [SparsePoly.monomial(n, e) for w in range(max_deg + 1)
            for e in comb.compositions(n, w)]


# ---------------------------------------------------------------------------
# operators


def suite_operators(alphas=DEFAULT_ALPHAS, max_weight=5, max_n=3,
                    a_set=DEFAULT_A_SET):
    """Operator-algebra identities checked on a monomial basis."""
    reps = []
    for alpha in alphas:
        for n in range(2, max_n + 1):
            ops = Operators(n, alpha, a=a_set[0])
            basis = _monomials(n, max_weight)
            reps.extend(_operator_identities(ops, basis, alpha, n))
            for a in a_set:
                opb = Operators(n, alpha, a=a)
                reps.extend(_type_b_identities(opb, basis, alpha, n, a))
    return reps


def _operator_identities(ops, basis, alpha, n):
    al = Fraction(alpha)
    reps = []

    def all_hold(name, fn):
        for p in basis:
            if not fn(p):
                return _ok(name, False, n=n, alpha=str(al),
                           witness=repr(p))
        return _ok(name, True, n=n, alpha=str(al))

    x = [SparsePoly.variable(n, i) for i in range(n)]

    def comm_xi(p, i):
        return ops.dunkl(x[i] * p, i) - x[i] * ops.dunkl(p, i)

    reps.append(all_hold(
        "dunkl-position-commutator-diagonal",
        lambda p: all(comm_xi(p, i) == p + sum(
            (ops.swap(p, i, k) for k in range(n) if k != i),
            SparsePoly.zero(n)) / al for i in range(n))))
    reps.append(all_hold(
        "dunkl-position-commutator-offdiagonal",
        lambda p: all(ops.dunkl(x[j] * p, i) - x[j] * ops.dunkl(p, i)
                      == -ops.swap(p, i, j) / al
                      for i in range(n) for j in range(n) if i != j)))
    reps.append(all_hold(
        "dunkl-commutativity",
        lambda p: all(ops.dunkl(ops.dunkl(p, j), i)
                      == ops.dunkl(ops.dunkl(p, i), j)
                      for i in range(n) for j in range(i + 1, n))))
    reps.append(all_hold(
        "cherednik-commutativity",
        lambda p: all(ops.cherednik(ops.cherednik(p, j), i)
                      == ops.cherednik(ops.cherednik(p, i), j)
                      for i in range(n) for j in range(i + 1, n))))
    reps.append(all_hold(
        "cherednik-forms-agree",
        lambda p: all(ops.cherednik(p, i) == ops.cherednik_direct(p, i)
                      for i in range(n))))

    def hecke(op):
        def check(p):
            for i in range(n - 1):
                if op(ops.s(p, i), i) - ops.s(op(p, i + 1), i) != p:
                    return False
                if op(ops.s(p, i), i + 1) - ops.s(op(p, i), i) != -p:
                    return False
            for i in range(n):
                for j in range(n - 1):
                    if j in (i - 1, i):
                        continue
                    if op(ops.s(p, j), i) != ops.s(op(p, i), j):
                        return False
            return True
        return check

    reps.append(all_hold("hecke-relations", hecke(ops.cherednik)))
    reps.append(all_hold("h-hecke-relations", hecke(ops.h_op)))
    reps.append(all_hold(
        "cherednik-dunkl-commutators",
        lambda p: all(
            (ops.cherednik(ops.dunkl(p, i), j) - ops.dunkl(ops.cherednik(p, j), i)
             == ops.dunkl(ops.swap(p, i, j), min(i, j)))
            for i in range(n) for j in range(n) if i != j)))
    reps.append(all_hold(
        "cherednik-dunkl-commutator-diagonal",
        lambda p: all(
            ops.cherednik(ops.dunkl(p, j), j) - ops.dunkl(ops.cherednik(p, j), j)
            == -al * ops.dunkl(p, j)
            - sum((ops.swap(ops.dunkl(p, j), j, k) for k in range(j)),
                  SparsePoly.zero(n))
            - sum((ops.dunkl(ops.swap(p, j, k), j) for k in range(j + 1, n)),
                  SparsePoly.zero(n))
            for j in range(n))))
    reps.append(all_hold(
        "lowering-intertwining",
        lambda p: all(
            ops.cherednik(ops.phi_hat(p), j) == ops.phi_hat(ops.cherednik(p, j - 1))
            for j in range(1, n))
        and ops.cherednik(ops.phi_hat(p), 0)
        == ops.phi_hat(ops.cherednik(p, n - 1)) - al * ops.phi_hat(p)))
    reps.append(all_hold(
        "laplacian-commutators",
        lambda p: all(
            ops.cherednik(ops.laplacian_A(p), i) - ops.laplacian_A(ops.cherednik(p, i))
            == -2 * al * ops.dunkl(ops.dunkl(p, i), i)
            and ops.laplacian_A(x[i] * p) - x[i] * ops.laplacian_A(p)
            == 2 * ops.dunkl(p, i)
            for i in range(n))))
    reps.append(all_hold(
        "adjoint-raising-representation",
        lambda p: ops.phi_hat_star(p)
        == 2 * ops.phi(p) + (ops.phi(ops.laplacian_A(p))
                             - ops.laplacian_A(ops.phi(p))) / 2))
    reps.append(all_hold(
        "gaussian-ladder-intertwining",
        lambda p: all(
            ops.h_op(ops.phi_hat_star(p), i) == ops.phi_hat_star(ops.h_op(p, i + 1))
            for i in range(n - 1))
        and ops.h_op(ops.phi_hat_star(p), n - 1)
        == ops.phi_hat_star(ops.h_op(p, 0)) + al * ops.phi_hat_star(p)
        and all(ops.h_op(ops.phi_hat(p), i) == ops.phi_hat(ops.h_op(p, i - 1))
                for i in range(1, n))
        and ops.h_op(ops.phi_hat(p), 0)
        == ops.phi_hat(ops.h_op(p, n - 1)) - al * ops.phi_hat(p)))
    reps.append(all_hold(
        "euler-commutator-identity",
        lambda p: ops.d1_tilde(p)
        == (ops.euler(ops.d2_tilde(p), 0) - ops.d2_tilde(ops.euler(p, 0))) / 2))
    return reps


def _type_b_identities(ops, basis, alpha, n, a):
    al = Fraction(alpha)
    reps = []

    def all_hold(name, fn):
        for p in basis:
            if not fn(p):
                return _ok(name, False, n=n, alpha=str(al), a=str(a),
                           witness=repr(p))
        return _ok(name, True, n=n, alpha=str(al), a=str(a))

    reps.append(all_hold(
        "b-commutativity",
        lambda p: all(ops.b_op(ops.b_op(p, j), i) == ops.b_op(ops.b_op(p, i), j)
                      for i in range(n) for j in range(i + 1, n))))
    reps.append(all_hold(
        "l-commutativity",
        lambda p: all(ops.l_op(ops.l_op(p, j), i) == ops.l_op(ops.l_op(p, i), j)
                      for i in range(n) for j in range(i + 1, n))))
    def hecke_l(p):
        for i in range(n - 1):
            if ops.l_op(ops.s(p, i), i) - ops.s(ops.l_op(p, i + 1), i) != p:
                return False
            if ops.l_op(ops.s(p, i), i + 1) - ops.s(ops.l_op(p, i), i) != -p:
                return False
        for i in range(n):
            for j in range(n - 1):
                if j in (i - 1, i):
                    continue
                if ops.l_op(ops.s(p, j), i) != ops.s(ops.l_op(p, i), j):
                    return False
        return True

    reps.append(all_hold("l-hecke-relations", hecke_l))
    reps.append(all_hold(
        "cherednik-b-commutators",
        lambda p: all(
            (ops.cherednik(ops.b_op(p, i), j) - ops.b_op(ops.cherednik(p, j), i)
             == ops.b_op(ops.swap(p, i, j), min(i, j)))
            for i in range(n) for j in range(n) if i != j)))
    reps.append(all_hold(
        "cherednik-b-commutator-diagonal",
        lambda p: all(
            ops.cherednik(ops.b_op(p, j), j) - ops.b_op(ops.cherednik(p, j), j)
            == -al * ops.b_op(p, j)
            - sum((ops.swap(ops.b_op(p, j), j, k) for k in range(j)),
                  SparsePoly.zero(n))
            - sum((ops.b_op(ops.swap(p, j, k), j) for k in range(j + 1, n)),
                  SparsePoly.zero(n))
            for j in range(n))))
    reps.append(all_hold(
        "b-laplacian-commutator",
        lambda p: all(
            ops.cherednik(ops.laplacian_B(p), i) - ops.laplacian_B(ops.cherednik(p, i))
            == -4 * al * ops.b_op(p, i)
            for i in range(n))))
    reps.append(all_hold(
        "b-lowering-intertwining",
        lambda p: all(
            ops.cherednik(ops.psi_hat(p), j) == ops.psi_hat(ops.cherednik(p, j - 1))
            for j in range(1, n))
        and ops.cherednik(ops.psi_hat(p), 0)
        == ops.psi_hat(ops.cherednik(p, n - 1)) - al * ops.psi_hat(p)))
    reps.append(all_hold(
        "laguerre-ladder-intertwining",
        lambda p: all(
            ops.l_op(ops.psi_hat_star(p), i) == ops.psi_hat_star(ops.l_op(p, i + 1))
            for i in range(n - 1))
        and ops.l_op(ops.psi_hat_star(p), n - 1)
        == ops.psi_hat_star(ops.l_op(p, 0)) + al * ops.psi_hat_star(p)
        and all(ops.l_op(ops.psi_hat(p), i) == ops.psi_hat(ops.l_op(p, i - 1))
                for i in range(1, n))
        and ops.l_op(ops.psi_hat(p), 0)
        == ops.psi_hat(ops.l_op(p, n - 1)) - al * ops.psi_hat(p)))
    return reps


# ---------------------------------------------------------------------------
# jack


def suite_jack(alphas=DEFAULT_ALPHAS, max_weight=4, max_n=3):
    reps = []
    for alpha in alphas:
        for n in range(1, max_n + 1):
            reps.extend(_jack_checks(JackBasis.shared(n, alpha), max_weight))
    return reps


def _jack_checks(jb, max_weight):
    n, al = jb.n, jb.alpha
    reps = []
    etas = comb.compositions_up_to(n, max_weight)

    def rep(check, ok, **info):
        return _ok(check, ok, n=n, alpha=str(al), **info)

    ok = True
    for eta in etas:
        E = jb.E(eta)
        bars = comb.eta_bar_vec(eta, al)
        if any(jb.ops.cherednik(E, i) != bars[i] * E for i in range(n)):
            ok = False
            break
        lead = E.coeff(eta)
        if lead != 1:
            ok = False
            break
        if any(nu != eta and not comb.precedes(nu, eta) for nu in E.terms):
            ok = False
            break
        if any(c <= 0 for c in E.terms.values()):
            ok = False
            break
    reps.append(rep("jack-eigen-triangular-positive", ok,
                    range=f"|eta|<={max_weight}"))

    reps.append(rep("jack-oracle-equivalence",
                    all(jb.E(eta) == jb.E_oracle(eta) for eta in etas)))

    reps.append(rep("jack-evaluation-all-ones",
                    all(jb.E(eta).eval_exact([1] * n) == jb.eval_ones(eta)
                        for eta in etas)))

    # multiplying by the full product of variables shifts the label
    ok = True
    for eta in etas:
        for p in (1, 2):
            shifted = comb.add_to_all(eta, p)
            xs = SparsePoly.monomial(n, (p,) * n)
            if xs * jb.E(eta) != jb.E(shifted):
                ok = False
    reps.append(rep("jack-label-shift", ok))

    # inversion: (x1...xn)^m E_eta(1/x) = E_(m - reversed eta)(reversed x)
    ok = True
    for eta in etas:
        m = max(eta)
        lhs = SparsePoly.monomial(n, (m,) * n) * jb.E(eta).invert_vars()
        target = tuple(m - x for x in comb.reversed_eta(eta))
        rhs = jb.E(target).permute_vars(tuple(range(n - 1, -1, -1)))
        if lhs != rhs:
            ok = False
    reps.append(rep("jack-inversion", ok))

    # transposition action, all three cases
    ok = True
    for eta in etas:
        E = jb.E(eta)
        for i in range(n - 1):
            got = jb.ops.s(E, i)
            if eta[i] == eta[i + 1]:
                want = E
            else:
                gap = comb.delta_gap(eta, i, al)
                if eta[i] > eta[i + 1]:
                    want = E / gap + (1 - 1 / gap ** 2) * jb.E(comb.si_map(eta, i))
                else:
                    want = E / gap + jb.E(comb.si_map(eta, i))
            if got != want:
                ok = False
    reps.append(rep("jack-transposition-action", ok))

    # raising and lowering constants on the plain basis
    ok = True
    for eta in etas:
        if jb.ops.phi(jb.E(eta)) != jb.E(comb.phi_map(eta)):
            ok = False
        low = jb.ops.phi_hat(jb.E(eta))
        if eta[-1] == 0:
            if not low.is_zero:
                ok = False
        else:
            down = comb.phi_hat_map(eta)
            c = (comb.d_prime_const(eta, al)
                 / comb.d_prime_const(down, al) / al)
            if low != c * jb.E(down):
                ok = False
    reps.append(rep("jack-ladder-constants", ok))

    # constants recursions along the ladder and transpositions
    ok = True
    for eta in etas:
        up = comb.phi_map(eta)
        bar1 = comb.eta_bar(eta, 0, al)
        if comb.d_const(up, al) / comb.d_const(eta, al) != bar1 + al + n:
            ok = False
        if comb.e_const(up, al) / comb.e_const(eta, al) != bar1 + al + n:
            ok = False
        if comb.d_prime_const(up, al) / comb.d_prime_const(eta, al) != bar1 + al + n - 1:
            ok = False
        if comb.eta_bar_vec(up, al) != tuple(
                list(comb.eta_bar_vec(eta, al)[1:]) + [bar1 + al]):
            ok = False
        if eta[-1] >= 1:
            down = comb.phi_hat_map(eta)
            if (comb.d_prime_const(eta, al) / comb.d_prime_const(down, al)
                    != comb.eta_bar(eta, n - 1, al) + n - 1):
                ok = False
        for i in range(n - 1):
            if eta[i] > eta[i + 1]:
                gap = comb.delta_gap(eta, i, al)
                sw = comb.si_map(eta, i)
                if comb.e_const(sw, al) != comb.e_const(eta, al):
                    ok = False
                if comb.d_const(sw, al) / comb.d_const(eta, al) != (gap + 1) / gap:
                    ok = False
                if comb.d_prime_const(sw, al) / comb.d_prime_const(eta, al) != gap / (gap - 1):
                    ok = False
        # generalized factorial recursions at a generic parameter
        c = Fraction(5, 3)
        if comb.gen_fact(c, comb.si_map(eta, 0) if n > 1 else eta, al) != comb.gen_fact(c, eta, al):
            ok = False
        if comb.gen_fact(c, up, al) / comb.gen_fact(c, eta, al) != c + bar1 / al:
            ok = False
        if eta[-1] >= 1:
            down = comb.phi_hat_map(eta)
            if (comb.gen_fact(c, eta, al) / comb.gen_fact(c, down, al)
                    != c - 1 + comb.eta_bar(eta, n - 1, al) / al):
                ok = False
        if comb.e_const(eta, al) != al ** sum(eta) * comb.gen_fact(
                Fraction(n) / al + 1, eta, al):
            ok = False
    reps.append(rep("jack-constant-recursions", ok))

    # symmetric basis consistency
    ok = True
    for w in range(min(max_weight, 4) + 1):
        for kappa in comb.partitions(w, n):
            kpad = tuple(kappa) + (0,) * (n - len(kappa))
            J = jb.J(kappa)
            if symmetrize(J) != factorial(n) * J:
                ok = False
            jk = comb.hook_norm_j(kpad, al)
            if J.coeff(kpad) != jk / comb.d_prime_const(kpad, al):
                ok = False
    for eta in etas:
        if symmetrize(jb.E(eta)) != jb.a_sym_const(eta) * jb.J(comb.eta_plus(eta)):
            ok = False
    reps.append(rep("jack-symmetric-basis", ok))
    return reps


# ---------------------------------------------------------------------------
# hermite / laguerre


def suite_hermite(alphas=DEFAULT_ALPHAS, max_weight=4, max_n=3):
    reps = []
    for alpha in alphas:
        for n in range(1, max_n + 1):
            reps.extend(_hermite_checks(shared_hermite(n, alpha), max_weight))
    return reps


def _hermite_checks(hb, max_weight):
    jb = hb.jack
    n, al = jb.n, jb.alpha
    etas = comb.compositions_up_to(n, max_weight)
    reps = []

    def rep(check, ok, **info):
        return _ok(check, ok, n=n, alpha=str(al), **info)

    ok = True
    for eta in etas:
        E = hb.E(eta)
        bars = comb.eta_bar_vec(eta, al)
        if any(hb.ops.h_op(E, i) != bars[i] * E for i in range(n)):
            ok = False
        ham = hb.ops.laplacian_A(E) - 2 * hb.ops.euler(E, 1)
        if ham != -2 * sum(eta) * E:
            ok = False
    reps.append(rep("hermite-eigen", ok))

    ok = True
    for eta in etas:
        E = hb.E(eta)
        for i in range(n - 1):
            got = hb.ops.s(E, i)
            if eta[i] == eta[i + 1]:
                want = E
            else:
                gap = comb.delta_gap(eta, i, al)
                if eta[i] > eta[i + 1]:
                    want = E / gap + (1 - 1 / gap ** 2) * hb.E(comb.si_map(eta, i))
                else:
                    want = E / gap + hb.E(comb.si_map(eta, i))
            if got != want:
                ok = False
    reps.append(rep("hermite-transposition-action", ok))

    ok = True
    for eta in etas:
        if hb.raise_op(eta) != 2 * hb.E(comb.phi_map(eta)):
            ok = False
        low = hb.lower_op(eta)
        c = hb.lower_constant(eta)
        if eta[-1] == 0:
            if not low.is_zero or c != 0:
                ok = False
        elif low != c * hb.E(comb.phi_hat_map(eta)):
            ok = False
        up = comb.phi_map(eta)
        if (hb.norm_ratio(up) / hb.norm_ratio(eta)
                != comb.d_prime_const(up, al)
                / (2 * al * comb.d_prime_const(eta, al))):
            ok = False
    reps.append(rep("hermite-ladder", ok))

    ok = True
    same_weight = {}
    for eta in etas:
        same_weight.setdefault(sum(eta), []).append(eta)
    for group in same_weight.values():
        for eta in group:
            row = hb.pairing_row(jb.E(eta))
            for nu in group:
                got = sum((c * row[e] for e, c in jb.E(nu).terms.items()),
                          Fraction(0))
                want = (comb.d_prime_const(eta, al) * comb.e_const(eta, al)
                        / comb.d_const(eta, al) / al ** sum(eta)
                        if nu == eta else Fraction(0))
                if got != want:
                    ok = False
    reps.append(rep("hermite-pairing-values", ok,
                    range=f"|eta|<={max_weight}"))

    ok = True
    r2 = _radius_squared(n)
    for eta in etas:
        comps = hb.harmonic_components(eta)
        rebuilt = SparsePoly.zero(n)
        for m, c in comps:
            if not hb.ops.laplacian_A(c).is_zero:
                ok = False
            rebuilt = rebuilt + r2 ** m * c
        if rebuilt != jb.E(eta):
            ok = False
        if hb.from_harmonics(eta, comps) != hb.E(eta):
            ok = False
    reps.append(rep("hermite-harmonic-decomposition", ok))
    return reps


def suite_laguerre(alphas=DEFAULT_ALPHAS, max_weight=4, max_n=3,
                   a_set=DEFAULT_A_SET):
    reps = []
    for alpha in alphas:
        for n in range(1, max_n + 1):
            for a in a_set:
                reps.extend(_laguerre_checks(shared_laguerre(n, alpha, a),
                                             max_weight))
    return reps


def _laguerre_checks(lb, max_weight):
    jb = lb.jack
    n, al = jb.n, jb.alpha
    etas = comb.compositions_up_to(n, max_weight)
    reps = []

    def rep(check, ok, **info):
        return _ok(check, ok, n=n, alpha=str(al), a=str(lb.a), **info)

    ok = True
    for eta in etas:
        E = lb.E(eta)
        bars = comb.eta_bar_vec(eta, al)
        if any(lb.ops.l_op(E, i) != bars[i] * E for i in range(n)):
            ok = False
        ham = lb.ops.laplacian_B(E) - 4 * lb.ops.euler(E, 1)
        if ham != -4 * sum(eta) * E:
            ok = False
    reps.append(rep("laguerre-eigen", ok))

    ok = True
    for eta in etas:
        E = lb.E(eta)
        for i in range(n - 1):
            got = lb.ops.s(E, i)
            if eta[i] == eta[i + 1]:
                want = E
            else:
                gap = comb.delta_gap(eta, i, al)
                if eta[i] > eta[i + 1]:
                    want = E / gap + (1 - 1 / gap ** 2) * lb.E(comb.si_map(eta, i))
                else:
                    want = E / gap + lb.E(comb.si_map(eta, i))
            if got != want:
                ok = False
    reps.append(rep("laguerre-transposition-action", ok))

    ok = True
    for eta in etas:
        if lb.raise_op(eta) != lb.E(comb.phi_map(eta)):
            ok = False
        low = lb.lower_op(eta)
        c = lb.lower_constant(eta)
        if eta[-1] == 0:
            if not low.is_zero or c != 0:
                ok = False
        elif low != c * lb.E(comb.phi_hat_map(eta)):
            ok = False
    reps.append(rep("laguerre-ladder", ok))

    ok = all(lb.at_zero(eta) == lb.E(eta).eval_exact([0] * n) for eta in etas)
    reps.append(rep("laguerre-value-at-origin", ok))

    ok = True
    same_weight = {}
    for eta in etas:
        same_weight.setdefault(sum(eta), []).append(eta)
    aq = lb.shifted_a
    for group in same_weight.values():
        for eta in group:
            row = lb.pairing_row(jb.E(eta))
            for nu in group:
                got = sum((c * row[e] for e, c in jb.E(nu).terms.items()),
                          Fraction(0))
                want = (Fraction(4) ** sum(eta) * comb.gen_fact(aq, eta, al)
                        * comb.d_prime_const(eta, al) * comb.e_const(eta, al)
                        / comb.d_const(eta, al) / al ** sum(eta)
                        if nu == eta else Fraction(0))
                if got != want:
                    ok = False
    reps.append(rep("laguerre-pairing-values", ok,
                    range=f"|eta|<={max_weight}"))

    ok = True
    r2 = _radius_squared(n, degree=1)
    for eta in etas:
        comps = lb.harmonic_components(eta)
        rebuilt = SparsePoly.zero(n)
        for m, c in comps:
            if not lb.ops.laplacian_B(c).is_zero:
                ok = False
            rebuilt = rebuilt + r2 ** m * c
        if rebuilt != jb.E(eta):
            ok = False
        if lb.from_harmonics(eta, comps) != lb.E(eta):
            ok = False
    reps.append(rep("laguerre-harmonic-decomposition", ok))
    return reps


# ---------------------------------------------------------------------------
# kernels


def suite_kernels(alphas=DEFAULT_ALPHAS, sizes=((2, 5), (3, 4)),
                  a=Fraction(1, 2)):
    reps = []
    for alpha in alphas:
        for n, D in sizes:
            jb = JackBasis.shared(n, alpha)
            for name in kernels.IDENTITY_CHECKS:
                if name.endswith("summation") and n != 2:
                    continue
                reps.append(kernels.verify_kernel_identity(name, jb, D, a=a))
    return reps


def suite_binomials(alphas=DEFAULT_ALPHAS, max_weight=4, max_n=3):
    """Defining expansion, n-independence, and the orbit sum rules."""
    reps = []
    for alpha in alphas:
        for n in range(2, max_n + 1):
            jb = JackBasis.shared(n, alpha)
            ok = True
            for eta in comb.compositions_up_to(n, max_weight):
                shifted = jb.E(eta).shift_by_one()
                total = SparsePoly.zero(n)
                for w2 in range(sum(eta) + 1):
                    for nu in comb.compositions(n, w2):
                        b = kernels.binomial_coeff(jb, eta, nu)
                        if b:
                            total = total + (b * jb.eval_ones(eta)
                                             / jb.eval_ones(nu)) * jb.E(nu)
                if total != shifted:
                    ok = False
            reps.append(_ok("binomial-defining-expansion", ok, n=n,
                            alpha=str(alpha)))
            ok = True
            for eta in comb.compositions_up_to(n, max_weight):
                for w2 in range(sum(eta) + 1):
                    for nu in comb.compositions(n, w2):
                        got = kernels.binomial_n_independence(
                            eta, nu, alpha, n, n + 1)
                        if got["status"] != "pass":
                            ok = False
            reps.append(_ok("binomial-n-independence", ok, n=n,
                            alpha=str(alpha), n_pair=[n, n + 1]))
            reps.append(kernels.check_binomial_sum_rules(jb, max_weight))
    return reps


# ---------------------------------------------------------------------------
# constant-term


def suite_ct(k_set=(1, 2), max_weight=3, max_n=3):
    reps = []
    for k in k_set:
        alpha = Fraction(1, k)
        for n in range(2, max_n + 1):
            jb = JackBasis.shared(n, alpha)
            etas = comb.compositions_up_to(n, max_weight)
            ok = True
            for i, eta in enumerate(etas):
                E = jb.E(eta)
                if ct_inner(E, E, k) != ct_norm_formula(eta, k):
                    ok = False
                for nu in etas[i + 1:]:
                    if ct_inner(E, jb.E(nu), k) != 0:
                        ok = False
            reps.append(_ok("ct-orthogonality-and-norms", ok, n=n, k=k,
                            alpha=str(alpha)))
            # isometry of the raising cycle and the transposition recursion
            ok = True
            for eta in comb.compositions_up_to(n, max_weight - 1):
                E = jb.E(eta)
                up = jb.ops.phi(E)
                if ct_inner(up, up, k) != ct_inner(E, E, k):
                    ok = False
            for eta in etas:
                E = jb.E(eta)
                for i in range(n - 1):
                    if eta[i] < eta[i + 1]:
                        sw = comb.si_map(eta, i)
                        gap = comb.delta_gap(eta, i, alpha)
                        lhs = ct_inner(jb.E(sw), jb.E(sw), k)
                        if lhs != (1 - 1 / gap ** 2) * ct_inner(E, E, k):
                            ok = False
            reps.append(_ok("ct-recursions", ok, n=n, k=k, alpha=str(alpha)))
            for eta in etas:
                for a in (0, 1, 2):
                    for b in (0, 1, 2):
                        reps.append(kadell_ratio_check(jb, eta, a, b, k))
                reps.append(norm_relation_check(jb, eta, k))
    return reps


def suite_sahi(alphas=(Fraction(1), Fraction(2), Fraction(7, 5)), max_weight=3,
               max_n=3):
    reps = []
    for alpha in alphas:
        for n in range(2, max_n + 1):
            jb = JackBasis.shared(n, alpha)
            hb = shared_hermite(n, alpha)
            si = SahiInner(n, alpha, max_weight)
            etas = comb.compositions_up_to(n, max_weight)
            ok = True
            for eta in etas:
                for nu in etas:
                    if sum(eta) != sum(nu):
                        continue
                    got = si.inner(jb.E(eta), jb.E(nu))
                    want = (comb.d_prime_const(eta, alpha)
                            / comb.d_const(eta, alpha)
                            if eta == nu else Fraction(0))
                    if got != want:
                        ok = False
            reps.append(_ok("sahi-inner-basis-values", ok, n=n,
                            alpha=str(alpha)))
            ok = True
            for w in range(max_weight + 1):
                for lam in comb.partitions(w, n):
                    lam_pad = tuple(lam) + (0,) * (n - len(lam))
                    orbit = sorted(set(permutations(lam_pad)))
                    f = jb.E(orbit[0]) + 2 * jb.E(orbit[-1])
                    g = jb.E(orbit[len(orbit) // 2]) - 3 * jb.E(orbit[0])
                    fac = comb.gen_fact(Fraction(n) / alpha + 1, lam_pad, alpha)
                    if hb.pairing(f, g) != fac * si.inner(f, g):
                        ok = False
            reps.append(_ok("sahi-pairing-proportionality", ok, n=n,
                            alpha=str(alpha)))
    return reps


# ---------------------------------------------------------------------------
# numeric


def suite_numeric(alphas=(Fraction(1), Fraction(2)), a_set=DEFAULT_A_SET,
                  max_weight=3, D=6):
    reps = list(quad.check_classical_reductions())
    for alpha in alphas:
        for n in (1, 2):
            reps.append(quad.check_ground_state_H(n, alpha))
            for a in a_set:
                reps.append(quad.check_ground_state_L(n, alpha, a))
        hb = shared_hermite(2, alpha)
        reps.extend(quad.check_gram_H(hb, max_weight))
        for a in a_set:
            reps.extend(quad.check_gram_L(shared_laguerre(2, alpha, a),
                                          max_weight))
    # transform and beta-integral spot checks
    for n in (1, 2):
        hb = shared_hermite(n, Fraction(1))
        lb = shared_laguerre(n, Fraction(1), Fraction(1, 2))
        spot = [(0,) * n, (1,) + (0,) * (n - 1), (2, 1)[:n] if n > 1 else (2,)]
        for eta in spot:
            reps.append(quad.check_hermite_transform(hb, eta, D))
            reps.append(quad.check_hermite_transform_imaginary(hb, eta, D))
            reps.append(quad.check_laguerre_transform(lb, eta, D))
            for which in ("laguerre", "jack"):
                reps.append(quad.check_laplace_transform(lb, eta, which))
        for alpha in alphas:
            jb = JackBasis.shared(n, alpha)
            for eta in spot:
                for lam1, lam2 in ((Fraction(1, 2), 0), (Fraction(2), 2)):
                    reps.append(quad.check_selberg_ratio(jb, eta, lam1, lam2))
    return reps


SUITES = {
    "operators": suite_operators,
    "jack": suite_jack,
    "hermite": suite_hermite,
    "laguerre": suite_laguerre,
    "kernels": suite_kernels,
    "binomials": suite_binomials,
    "ct": suite_ct,
    "sahi": suite_sahi,
    "numeric": suite_numeric,
}


def run_suite(name, **kwargs):
    """Run one suite (or 'all'); returns (all_passed, reports)."""
    if name == "all":
        reports = []
        for fn in SUITES.values():
            reports.extend(fn(**_accepted(fn, kwargs)))
    else:
        try:
            fn = SUITES[name]
        except KeyError:
            raise ValueError(f"unknown suite {name!r}") from None
        reports = fn(**_accepted(fn, kwargs))
    return all(r["status"] == "pass" for r in reports), reports


def _accepted(fn, kwargs):
    import inspect

    sig = inspect.signature(fn)
    return {k: v for k, v in kwargs.items() if k in sig.parameters and v is not None}
