"""Construction of the non-symmetric Jack basis and its symmetrization.

The basis polynomials E_eta are built by the raising/transposition
recursion; an independent oracle recovers the same polynomials by solving
the joint eigenproblem of the Cherednik operators directly on monomials.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from . import combinat as comb
from .linalg import solve_exact
from .operators import Operators
from .poly import SparsePoly, symmetrize


_shared = {}


class JackBasis:
    """Cache of non-symmetric Jack polynomials for fixed (n, alpha).

    Cached values are immutable; recomputation is deterministic, so
    concurrent use only ever races identical insertions.
    """

    @classmethod
    def shared(cls, n, alpha):
        """Process-wide memoized instance (bases are append-only caches)."""
        key = (n, Fraction(alpha))
        got = _shared.get(key)
        if got is None:
            got = _shared[key] = cls(n, alpha)
        return got

    def __init__(self, n, alpha):
        alpha = Fraction(alpha)
        if alpha <= 0:
            raise ValueError("alpha must be positive")
        self.n = n
        self.alpha = alpha
        self.ops = Operators(n, alpha)
        self._cache = {}
        self._j_cache = {}

    # -- the recursion ---------------------------------------------------

    def E(self, eta):
        """The monic simultaneous eigenfunction labelled by eta."""
        eta = tuple(eta)
        if len(eta) != self.n:
            raise ValueError("composition length must equal the variable count")
        if any(x < 0 for x in eta):
            raise ValueError("composition parts must be non-negative")
        got = self._cache.get(eta)
        if got is not None:
            return got
        if sum(eta) == 0:
            poly = SparsePoly.one(self.n)
        elif eta[-1] >= 1:
            # undo the raising map: eta = phi(lowered)
            lowered = comb.phi_hat_map(eta)
            poly = self.ops.phi(self.E(lowered))
        else:
            # swap at the last descent; the swapped label is strictly smaller
            i = max(i for i in range(self.n - 1) if eta[i] > eta[i + 1])
            nu = comb.si_map(eta, i)
            gap = comb.delta_gap(nu, i, self.alpha)
            e_nu = self.E(nu)
            poly = self.ops.s(e_nu, i) - e_nu / gap
        self._cache[eta] = poly
        return poly

    def F(self, eta):
        """The d-rescaled polynomial d_eta * E_eta."""
        return comb.d_const(eta, self.alpha) * self.E(tuple(eta))

    # -- independent oracle ------------------------------------------------

    def E_oracle(self, eta):
        """Solve the joint Cherednik eigenproblem directly on monomials.

        Uses only the divided-difference form of the operators and exact
        linear algebra, independently of the recursion above.
        """
        eta = tuple(eta)
        w = sum(eta)
        basis = [nu for nu in comb.compositions(self.n, w)
                 if nu == eta or comb.precedes(nu, eta)]
        basis.sort(key=comb.order_key)
        index = {nu: t for t, nu in enumerate(basis)}
        m = len(basis)
        evec = comb.eta_bar_vec(eta, self.alpha)

        rows, rhs = [], []
        # normalization row: coefficient of x^eta is 1
        row = [Fraction(0)] * m
        row[index[eta]] = Fraction(1)
        rows.append(row)
        rhs.append(Fraction(1))
        for i in range(self.n):
            # action of the i-th operator on each basis monomial
            cols = []
            for nu in basis:
                img = self.ops.cherednik_direct(SparsePoly.monomial(self.n, nu), i)
                col = [Fraction(0)] * m
                for e, c in img.terms.items():
                    t = index.get(e)
                    if t is None:
                        raise ArithmeticError(
                            "operator image left the triangular span; operator bug")
                    col[t] = c
                cols.append(col)
            for t in range(m):
                row = [cols[s][t] for s in range(m)]
                row[t] -= evec[i]
                rows.append(row)
                rhs.append(Fraction(0))
        sol = solve_exact(rows, rhs)
        return SparsePoly(self.n, {nu: sol[index[nu]] for nu in basis})

    # -- evaluations and constants -----------------------------------------

    def eval_ones(self, eta):
        """Exact value at the all-ones point: e_eta / d_eta."""
        eta = tuple(eta)
        return comb.e_const(eta, self.alpha) / comb.d_const(eta, self.alpha)

    def a_sym_const(self, eta):
        """Constant relating Sym E_eta to the symmetric polynomial J."""
        eta = tuple(eta)
        kappa = comb.eta_plus(eta)
        return (factorial(self.n) * comb.e_const(eta, self.alpha)
                / comb.d_const(eta, self.alpha) / self.J_ones(kappa))

    # -- symmetric basis -----------------------------------------------------

    def J(self, kappa):
        """Symmetric polynomial indexed by a partition, in the hook-product
        normalization consistent with the orbit sum of E_eta / d'_eta."""
        kappa = tuple(kappa)
        if list(kappa) != sorted(kappa, reverse=True):
            raise ValueError("J is indexed by partitions")
        if len(kappa) > self.n:
            raise ValueError("partition has more parts than variables")
        kappa = kappa + (0,) * (self.n - len(kappa))
        got = self._j_cache.get(kappa)
        if got is not None:
            return got
        total = SparsePoly.zero(self.n)
        seen = set()
        for eta in _distinct_permutations(kappa):
            if eta in seen:
                continue
            seen.add(eta)
            total = total + self.E(eta) / comb.d_prime_const(eta, self.alpha)
        out = comb.hook_norm_j(kappa, self.alpha) * total
        self._j_cache[kappa] = out
        return out

    def J_ones(self, kappa):
        return self.J(kappa).eval_exact([1] * self.n)

    def sym_of_E(self, eta):
        return symmetrize(self.E(tuple(eta)))

    # -- change of basis -------------------------------------------------------

    def expand_in_E(self, p):
        """Expand a polynomial in the E basis; returns {eta: coefficient}.

        Peels the triangular leading terms degree by degree in descending
        order, so only exact subtraction is needed.
        """
        if not p.is_laurent_free():
            raise ValueError("can only expand genuine polynomials")
        out = {}
        residual = p
        while not residual.is_zero:
            eta = max(residual.terms, key=comb.order_key)
            c = residual.terms[eta]
            out[eta] = c
            residual = residual - c * self.E(eta)
            if eta in residual.terms:
                raise ArithmeticError("peeling failed to clear the leading term")
        return out


def _distinct_permutations(eta):
    from itertools import permutations

    return set(permutations(eta))
