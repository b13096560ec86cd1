"""Tiny exact linear solver over the rationals."""

from __future__ import annotations

from fractions import Fraction


def solve_exact(rows, rhs):
    """Solve a consistent (possibly overdetermined) linear system exactly.

    ``rows`` is a list of equal-length coefficient lists, ``rhs`` the
    right-hand sides.  Raises if the system is inconsistent or the
    solution is not unique.
    """
    m = len(rows[0])
    aug = [list(map(Fraction, row)) + [Fraction(b)] for row, b in zip(rows, rhs)]
    pivot_rows = []
    r = 0
    for col in range(m):
        pivot = next((k for k in range(r, len(aug)) if aug[k][col] != 0), None)
        if pivot is None:
            raise ArithmeticError("singular system: no pivot for a column")
        aug[r], aug[pivot] = aug[pivot], aug[r]
        pr = aug[r]
        inv = Fraction(1) / pr[col]
        aug[r] = [v * inv for v in pr]
        for k in range(len(aug)):
            if k != r and aug[k][col] != 0:
                f = aug[k][col]
                aug[k] = [a - f * b for a, b in zip(aug[k], aug[r])]
        pivot_rows.append(col)
        r += 1
    for k in range(r, len(aug)):
        if aug[k][m] != 0:
            raise ArithmeticError("inconsistent linear system")
    out = [Fraction(0)] * m
    for row_idx, col in enumerate(pivot_rows):
        out[col] = aug[row_idx][m]
    return out
