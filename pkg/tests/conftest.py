"""Shared fixtures and independent oracles for the test suite.

The oracle helpers here deliberately avoid the library code paths they
are used to check: brute-force box enumeration instead of Fincke-Pohst,
characteristic-polynomial sign counting instead of congruence pivoting,
direct cohomology-ring products instead of the closed Chern formula.
"""

from __future__ import annotations

import itertools
import sys
from fractions import Fraction
from math import isqrt
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

import pytest

from k3moduli import lattices


@pytest.fixture(scope="session")
def U():
    return lattices.hyperbolic_U()


@pytest.fixture(scope="session")
def K3():
    return lattices.k3_lattice()


@pytest.fixture(scope="session")
def MUKAI():
    return lattices.mukai_lattice()


# ---------------------------------------------------------------------------
# oracle: brute-force short vectors


def _floor_sqrt_frac(f: Fraction) -> int:
    assert f >= 0
    return isqrt(f.numerator * f.denominator) // f.denominator


def _frac_inverse(m):
    """Plain Gauss-Jordan inverse, independent of k3moduli.linalg."""
    n = len(m)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(m)]
    for col in range(n):
        piv = next(i for i in range(col, n) if aug[i][col])
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col]:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[col])]
    return [row[n:] for row in aug]


def box_short_vectors(gram, bound):
    """All nonzero x with x.gram.x <= bound, one per sign pair, sorted.

    Box bounds come from the inverse Gram diagonal: for positive definite
    G and x with x^T G x <= B, Cauchy-Schwarz in the G-inner product gives
    x_i^2 <= B * (G^{-1})_{ii}.
    """
    n = len(gram)
    gram = [[Fraction(x) for x in row] for row in gram]
    bound = Fraction(bound)
    inv = _frac_inverse(gram)
    limits = [_floor_sqrt_frac(bound * inv[i][i]) for i in range(n)]
    out = set()
    for x in itertools.product(*(range(-l, l + 1) for l in limits)):
        if not any(x):
            continue
        q = sum(x[i] * gram[i][j] * x[j] for i in range(n) for j in range(n))
        if q <= bound:
            out.add(max(x, tuple(-t for t in x)))
    return sorted(out)


# ---------------------------------------------------------------------------
# oracle: characteristic polynomial signature


def charpoly(m):
    """Coefficients of det(t*I - m), highest degree first (Faddeev-LeVerrier)."""
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    coeffs = [Fraction(1)]
    mk = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for k in range(1, n + 1):
        if k > 1:
            prev = [[mk[i][j] + (coeffs[-1] if i == j else 0) for j in range(n)]
                    for i in range(n)]
            mk = [[sum(a[i][t] * prev[t][j] for t in range(n)) for j in range(n)]
                  for i in range(n)]
        else:
            mk = a
        trace = sum(mk[i][i] for i in range(n))
        coeffs.append(-trace / k)
    return coeffs


def signature_by_descartes(m):
    """(pos, neg, zero) from sign changes of the characteristic polynomial.

    Valid because symmetric matrices have only real eigenvalues, for which
    Descartes' rule is exact.
    """
    n = len(m)
    coeffs = charpoly(m)
    zero = 0
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
        zero += 1
    signs = [1 if c > 0 else -1 for c in coeffs if c != 0]
    pos = sum(1 for a, b in zip(signs, signs[1:]) if a != b)
    return pos, n - pos - zero, zero


# ---------------------------------------------------------------------------
# random exact data


def random_fraction(rng, num=6, den=4) -> Fraction:
    return Fraction(rng.randint(-num, num), rng.randint(1, den))


def random_symmetric(rng, n, lo=-5, hi=5):
    m = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            m[i][j] = m[j][i] = rng.randint(lo, hi)
    return tuple(map(tuple, m))


def random_even_gram(rng, n, scale=4):
    m = [[0] * n for _ in range(n)]
    for i in range(n):
        m[i][i] = 2 * rng.randint(-scale, scale)
        for j in range(i + 1, n):
            m[i][j] = m[j][i] = rng.randint(-scale, scale)
    return tuple(map(tuple, m))


def random_pos_def(rng, n, entry=10):
    """Random positive-definite integer Gram, entries bounded by ``entry``.

    Strict diagonal dominance with positive diagonal guarantees positive
    definiteness while keeping the entries small.
    """
    g = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            g[i][j] = g[j][i] = rng.randint(-3, 3)
    for i in range(n):
        off = sum(abs(g[i][j]) for j in range(n) if j != i)
        g[i][i] = off + rng.randint(1, max(1, entry - off))
    return tuple(map(tuple, g))
