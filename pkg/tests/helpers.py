"""Independent oracles and random-instance builders shared by the tests.

Everything here deliberately avoids the code paths it is used to check:
determinants come from the permutation expansion, generalized binomial rows
from plain list convolution, q-binomials from the q-Pascal recurrence.
"""

from __future__ import annotations

import random
from itertools import combinations, permutations

from tripos.algebra import QPoly
from tripos.properties import is_q_tp2, is_tp_r


def naive_det(m):
    """Permutation-expansion determinant (exact, O(n!))."""
    n = len(m)
    if n == 0:
        return 1
    total = 0
    for perm in permutations(range(n)):
        term = 1
        for i, j in enumerate(perm):
            term *= m[i][j]
        inversions = sum(
            1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b]
        )
        total += -term if inversions % 2 else term
    return total


def naive_first_negative_minor(m, r):
    """Brute-force scan of all minors of order <= r, in the checker's order."""
    nrows, ncols = len(m), len(m[0])
    for order in range(1, min(r, nrows, ncols) + 1):
        for rows in combinations(range(nrows), order):
            for cols in combinations(range(ncols), order):
                d = naive_det([[m[i][j] for j in cols] for i in rows])
                if d < 0:
                    return rows, cols, d
    return None


def convolve(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def expansion_bisnomial_row(n, s):
    """Coefficients of (1 + x + ... + x^s)^n by repeated list convolution."""
    row = [1]
    base = [1] * (s + 1)
    for _ in range(n):
        row = convolve(row, base)
    return row


def gaussian_binomial(n, k):
    """q-binomial coefficient via the q-Pascal recurrence, as a QPoly."""
    if k < 0 or k > n:
        return QPoly.ZERO
    table = {(0, 0): QPoly.ONE}
    for m in range(1, n + 1):
        for j in range(0, min(m, k) + 1):
            if j == 0 or j == m:
                table[(m, j)] = QPoly.ONE
            else:
                table[(m, j)] = table[(m - 1, j - 1)] + QPoly([0] * j + [1]) * table[(m - 1, j)]
    return table[(n, k)]


# -- random structured instances -----------------------------------------------


def random_bidiagonal(rng: random.Random, size: int, lower: bool, hi: int = 4):
    m = [[0] * size for _ in range(size)]
    for i in range(size):
        m[i][i] = rng.randint(0, hi)
    for i in range(size - 1):
        if lower:
            m[i + 1][i] = rng.randint(0, hi)
        else:
            m[i][i + 1] = rng.randint(0, hi)
    return m


def random_tp2_matrix(rng: random.Random, size: int):
    """Product of nonnegative bidiagonal factors; verified TP2 before use."""
    from tripos.algebra import mat_mul

    m = random_bidiagonal(rng, size, lower=rng.random() < 0.5)
    for _ in range(rng.randint(1, 2)):
        m = mat_mul(m, random_bidiagonal(rng, size, lower=rng.random() < 0.5))
    assert is_tp_r(m, 2).holds
    return m


def random_nonneg_poly(rng: random.Random, max_deg: int = 2, hi: int = 3) -> QPoly:
    return QPoly([rng.randint(0, hi) for _ in range(rng.randint(1, max_deg + 1))])


def random_q_tp2_matrix(rng: random.Random, size: int):
    """Product of bidiagonal polynomial factors; verified q-TP2 before use."""
    from tripos.algebra import mat_mul

    def factor():
        lower = rng.random() < 0.5
        m = [[QPoly.ZERO] * size for _ in range(size)]
        for i in range(size):
            m[i][i] = random_nonneg_poly(rng)
        for i in range(size - 1):
            if lower:
                m[i + 1][i] = random_nonneg_poly(rng)
            else:
                m[i][i + 1] = random_nonneg_poly(rng)
        return m

    m = factor()
    if rng.random() < 0.7:
        m = mat_mul(m, factor())
    assert is_q_tp2(m).holds
    return m


def has_internal_zero_gap(values) -> bool:
    """True when two or more consecutive zeros sit between positive entries.

    The classical log-concave <=> PF_2 equivalence fails exactly on such
    sequences (e.g. 2,0,0,1 is literally log-concave but not PF_2), so the
    randomized equivalence tests exclude them.
    """
    positives = [i for i, v in enumerate(values) if v > 0]
    if len(positives) < 2:
        return False
    for a, b in zip(positives, positives[1:]):
        if b - a >= 3 and all(v == 0 for v in values[a + 1:b]):
            return True
    return False
