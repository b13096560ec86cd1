"""Exact sparse multivariate Laurent polynomials over the rationals.

Polynomials are stored as a map from integer exponent vectors (length-n
tuples, negative entries allowed) to nonzero ``Fraction`` coefficients.
Everything here is pure and exact; floats never appear.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from math import comb

ZERO = Fraction(0)
ONE = Fraction(1)


class SparsePoly:
    """A sparse Laurent polynomial in a fixed number of variables.

    Instances are treated as immutable: all operations return new
    polynomials and never mutate their arguments, so values can be
    cached and shared freely.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        if n < 1:
            raise ValueError("need at least one variable")
        self.n = n
        clean = {}
        if terms:
            for exps, c in terms.items():
                if not isinstance(c, Fraction):
                    c = Fraction(c)
                if c != 0:
                    if len(exps) != n:
                        raise ValueError(
                            f"exponent vector {exps} has length {len(exps)}, expected {n}")
                    clean[tuple(exps)] = c
        self.terms = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, n):
        return cls(n)

    @classmethod
    def constant(cls, n, c):
        return cls(n, {(0,) * n: Fraction(c)})

    @classmethod
    def one(cls, n):
        return cls.constant(n, 1)

    @classmethod
    def variable(cls, n, i):
        """The monomial x_i (0-based index)."""
        e = [0] * n
        e[i] = 1
        return cls(n, {tuple(e): ONE})

    @classmethod
    def monomial(cls, n, exps, coeff=1):
        return cls(n, {tuple(exps): Fraction(coeff)})

    # -- basic queries -------------------------------------------------

    @property
    def is_zero(self):
        return not self.terms

    def coeff(self, exps):
        return self.terms.get(tuple(exps), ZERO)

    def constant_term(self):
        """Coefficient of the zero exponent vector (0 if absent)."""
        return self.terms.get((0,) * self.n, ZERO)

    def total_degree(self):
        """Maximum exponent sum over terms (0 for the zero polynomial)."""
        return max((sum(e) for e in self.terms), default=0)

    def is_homogeneous(self):
        degrees = {sum(e) for e in self.terms}
        return len(degrees) <= 1

    def is_laurent_free(self):
        """True if no exponent is negative (a genuine polynomial)."""
        return all(min(e) >= 0 for e in self.terms) if self.terms else True

    def sorted_terms(self):
        """Terms in canonical order: descending lexicographic exponents."""
        return sorted(self.terms.items(), key=lambda t: t[0], reverse=True)

    # -- ring operations ----------------------------------------------

    def _check(self, other):
        if self.n != other.n:
            raise ValueError(f"ambient dimension mismatch: {self.n} vs {other.n}")

    def __add__(self, other):
        if not isinstance(other, SparsePoly):
            other = SparsePoly.constant(self.n, other)
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, ZERO) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return SparsePoly(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return SparsePoly(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, SparsePoly):
            other = SparsePoly.constant(self.n, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, SparsePoly):
            c = Fraction(other)
            if c == 0:
                return SparsePoly.zero(self.n)
            return SparsePoly(self.n, {e: v * c for e, v in self.terms.items()})
        self._check(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, ZERO) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return SparsePoly(self.n, out)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return self * (ONE / Fraction(scalar))

    def __pow__(self, m):
        if not isinstance(m, int) or m < 0:
            raise ValueError("exponent must be a non-negative integer")
        out = SparsePoly.one(self.n)
        base = self
        while m:
            if m & 1:
                out = out * base
            m >>= 1
            if m:
                base = base * base
        return out

    def __eq__(self, other):
        if isinstance(other, SparsePoly):
            return self.n == other.n and self.terms == other.terms
        return self.is_zero if other == 0 else self == SparsePoly.constant(self.n, other)

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    # -- substitutions and reindexings ----------------------------------

    def swap_vars(self, i, j):
        """Exchange variables i and j."""
        if i == j:
            return self
        out = {}
        for e, c in self.terms.items():
            le = list(e)
            le[i], le[j] = le[j], le[i]
            out[tuple(le)] = c
        return SparsePoly(self.n, out)

    def permute_vars(self, sigma):
        """Substitute x_i -> x_{sigma[i]} for every variable simultaneously."""
        out = {}
        for e, c in self.terms.items():
            ne = [0] * self.n
            for i, ei in enumerate(e):
                ne[sigma[i]] = ei
            key = tuple(ne)
            out[key] = out.get(key, ZERO) + c
        return SparsePoly(self.n, out)

    def negate_var(self, i):
        """Substitute x_i -> -x_i."""
        return SparsePoly(
            self.n, {e: (c if e[i] % 2 == 0 else -c) for e, c in self.terms.items()})

    def negate_all_vars(self):
        """Substitute x_i -> -x_i for every i."""
        return SparsePoly(
            self.n,
            {e: (c if sum(e) % 2 == 0 else -c) for e, c in self.terms.items()})

    def invert_vars(self):
        """Substitute x_i -> 1/x_i (exponent negation)."""
        return SparsePoly(self.n, {tuple(-x for x in e): c for e, c in self.terms.items()})

    def scale_exponents(self, m):
        """Substitute x_i -> x_i^m (used to write y-variable results in x^2)."""
        return SparsePoly(self.n, {tuple(m * x for x in e): c for e, c in self.terms.items()})

    def shift_by_one(self, only=None):
        """Substitute x_i -> x_i + 1 (for every variable, or a chosen subset)."""
        p = self
        for i in (range(self.n) if only is None else only):
            out = {}
            for e, c in p.terms.items():
                k = e[i]
                if k < 0:
                    raise ValueError("shift by one needs non-negative exponents")
                for j in range(k + 1):
                    ne = list(e)
                    ne[i] = j
                    key = tuple(ne)
                    s = out.get(key, ZERO) + c * comb(k, j)
                    if s:
                        out[key] = s
                    else:
                        out.pop(key, None)
            p = SparsePoly(self.n, out)
        return p

    def diff(self, i):
        """Partial derivative with respect to x_i."""
        out = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            ne = list(e)
            ne[i] -= 1
            out[tuple(ne)] = c * e[i]
        return SparsePoly(self.n, out)

    def eval_exact(self, point):
        """Evaluate at a point of rationals, exactly.

        Raises on a zero coordinate hitting a negative exponent.
        """
        if len(point) != self.n:
            raise ValueError("point has wrong length")
        point = [Fraction(x) for x in point]
        total = ZERO
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                if k == 0:
                    continue
                if x == 0:
                    if k < 0:
                        raise ValueError("pole: evaluation at 0 with negative exponent")
                    v = ZERO
                    break
                v *= x ** k
            total += v
        return total

    def filter_terms(self, keep):
        """Sub-polynomial of the terms whose exponent vector satisfies ``keep``."""
        return SparsePoly(self.n, {e: c for e, c in self.terms.items() if keep(e)})

    # -- serialization --------------------------------------------------

    def to_json_dict(self):
        """Canonical JSON form with coefficients as decimal strings."""
        return {
            "n": self.n,
            "terms": [[list(e), str(c.numerator), str(c.denominator)]
                      for e, c in self.sorted_terms()],
        }

    @classmethod
    def from_json_dict(cls, d):
        terms = {tuple(e): Fraction(int(num), int(den)) for e, num, den in d["terms"]}
        return cls(d["n"], terms)

    def __repr__(self):
        if self.is_zero:
            return "SparsePoly(0)"
        bits = []
        for e, c in self.sorted_terms():
            mono = "*".join(f"x{i}^{k}" if k != 1 else f"x{i}"
                            for i, k in enumerate(e) if k != 0)
            bits.append(f"{c}" if not mono else f"{c}*{mono}")
        return "SparsePoly(" + " + ".join(bits) + ")"


# -- module-level helpers ----------------------------------------------


def symmetrize(p):
    """Sum of p over all permutations of its variables (not averaged)."""
    total = SparsePoly.zero(p.n)
    for sigma in permutations(range(p.n)):
        total = total + p.permute_vars(sigma)
    return total


def rising(c, k):
    """Rising factorial c (c+1) ... (c+k-1) as an exact Fraction."""
    c = Fraction(c)
    out = ONE
    for m in range(k):
        out *= c + m
    return out


def series_binomial(c, degree):
    """Taylor coefficients of (1-t)^(-c) through t^degree."""
    c = Fraction(c)
    out = [ONE]
    for k in range(1, degree + 1):
        out.append(out[-1] * (c + k - 1) / k)
    return out


def exp_truncated(p, cap, deg=None):
    """exp(p) truncated to terms with deg(exponents) <= cap.

    ``p`` must have no constant term and strictly positive degree in the
    chosen grading, so truncation commutes with the series.
    """
    if deg is None:
        deg = sum
    if p.constant_term() != 0:
        raise ValueError("exp series needs a polynomial without constant term")
    result = SparsePoly.one(p.n)
    term = SparsePoly.one(p.n)
    m = 0
    while True:
        m += 1
        term = (term * p).filter_terms(lambda e: deg(e) <= cap) / m
        if term.is_zero:
            break
        result = result + term
    return result


def geometric_substitution(p, var_indices, cap, deg=None):
    """Substitute x_v -> x_v/(1-x_v) for each v in var_indices, truncated.

    Exponents of the substituted variables must be non-negative; truncation
    keeps terms with deg(exponents) <= cap.
    """
    if deg is None:
        deg = sum
    out = p
    for v in var_indices:
        acc = {}
        for e, c in out.terms.items():
            k = e[v]
            if k < 0:
                raise ValueError("geometric substitution needs non-negative exponents")
            if k == 0:
                acc[e] = acc.get(e, ZERO) + c
                continue
            # x^k/(1-x)^k = sum_m C(k-1+m, m) x^(k+m); the grading must
            # count variable v, so m <= cap - k bounds the expansion
            for m in range(max(0, cap - k) + 1):
                ne = list(e)
                ne[v] = k + m
                key = tuple(ne)
                if deg(key) > cap:
                    continue
                s = acc.get(key, ZERO) + c * comb(k - 1 + m, m)
                if s:
                    acc[key] = s
                else:
                    acc.pop(key, None)
        out = SparsePoly(p.n, acc).filter_terms(lambda e: deg(e) <= cap)
    return out
