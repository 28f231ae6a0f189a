"""Exact linear algebra over the integers and rationals.

Everything here works with arbitrary-precision ``int`` and
``fractions.Fraction`` values; no floating point is used anywhere.
Matrices are immutable tuples of row tuples, vectors are row tuples.
Provided primitives:

* Hermite and Smith normal forms with unimodular transforms,
* saturated integer kernels and orthogonal complements,
* Fincke-Pohst enumeration of short vectors of a positive-definite form,
* exact signature (inertia) and discriminant groups of symmetric forms.

Conventions (fixed project-wide):

* ``hnf(m)`` returns ``(h, u)`` with ``u @ m == h``, pivots positive and
  entries above a pivot reduced into ``[0, pivot)``.
* ``snf(m)`` returns ``(s, u, v)`` with ``u @ m @ v == s`` diagonal,
  ``d1 | d2 | ...`` and all ``di >= 0``.
* ``kernel_basis(m)`` is a canonical (HNF) basis of ``{x : m @ x^T = 0}``,
  always saturated.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt
from typing import Sequence

from .errors import InputError, PreconditionError

IntVec = tuple[int, ...]
IntMatrix = tuple[IntVec, ...]
RatVec = tuple[Fraction, ...]
RatMatrix = tuple[RatVec, ...]


# ---------------------------------------------------------------------------
# construction helpers


def intmat(rows: Sequence[Sequence[int]]) -> IntMatrix:
    """Normalize nested sequences to an integer matrix, rejecting ragged input."""
    out = tuple(tuple(int(x) for x in row) for row in rows)
    if out and any(len(row) != len(out[0]) for row in out):
        raise InputError("ragged matrix")
    return out


def ratmat(rows: Sequence[Sequence]) -> RatMatrix:
    out = tuple(tuple(Fraction(x) for x in row) for row in rows)
    if out and any(len(row) != len(out[0]) for row in out):
        raise InputError("ragged matrix")
    return out


def _exact(x):
    if isinstance(x, int):
        return x
    f = Fraction(x)
    return int(f) if f.denominator == 1 else f


def exactmat(rows: Sequence[Sequence]):
    """Normalize entries to int where possible, Fraction otherwise.

    Keeping integral entries as plain ints makes the frequent
    certification products run in integer arithmetic.
    """
    out = tuple(tuple(_exact(x) for x in row) for row in rows)
    if out and any(len(row) != len(out[0]) for row in out):
        raise InputError("ragged matrix")
    return out


def identity(n: int) -> IntMatrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def as_int_matrix(m):
    """The same matrix with plain int entries, or None if any denominator > 1."""
    out = []
    for row in m:
        new = []
        for x in row:
            if isinstance(x, int):
                new.append(x)
            elif x.denominator == 1:
                new.append(int(x))
            else:
                return None
        out.append(tuple(new))
    return tuple(out)


def transpose(m):
    return tuple(zip(*m)) if m else ()


def matmul(a, b):
    """Matrix product; entries may mix int and Fraction."""
    if a and b and len(a[0]) != len(b):
        raise InputError("matrix dimension mismatch in product")
    bt = transpose(b)
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def mat_vec(m, v):
    """``m @ v`` with ``v`` read as a column; returns a row tuple."""
    if m and len(m[0]) != len(v):
        raise InputError("matrix/vector dimension mismatch")
    return tuple(sum(x * y for x, y in zip(row, v)) for row in m)


def vec_mat(v, m):
    """``v @ m`` with ``v`` read as a row; returns a row tuple."""
    if m and len(v) != len(m):
        raise InputError("vector/matrix dimension mismatch")
    return tuple(sum(v[i] * m[i][j] for i in range(len(v))) for j in range(len(m[0]) if m else 0))


def bilinear(gram, u, v):
    """Evaluate ``u . gram . v^T`` exactly."""
    if len(u) != len(gram) or len(v) != len(gram):
        raise InputError("vector length does not match Gram matrix rank")
    return sum(u[i] * sum(gram[i][j] * v[j] for j in range(len(v))) for i in range(len(u)))


def gram_of_rows(gram, rows) -> tuple:
    """Gram matrix of the given row vectors with respect to ``gram``."""
    return tuple(tuple(bilinear(gram, x, y) for y in rows) for x in rows)


def is_symmetric(m) -> bool:
    return all(m[i][j] == m[j][i] for i in range(len(m)) for j in range(i))


def vec_content(v) -> int:
    """gcd of the entries (0 for the zero vector)."""
    g = 0
    for x in v:
        g = gcd(g, abs(int(x)))
    return g


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (x, y, g) with x*a + y*b == g == gcd(a, b)."""
    x, nx = 1, 0
    y, ny = 0, 1
    g, ng = a, b
    while ng:
        q = g // ng
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
        g, ng = ng, g - q * ng
    return x, y, g


# ---------------------------------------------------------------------------
# normal forms


def _row_sub(a: list, i: int, j: int, q: int) -> None:
    if q:
        ai, aj = a[i], a[j]
        a[i] = [x - q * y for x, y in zip(ai, aj)]


def hnf(m: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    """Row Hermite normal form.

    Returns ``(h, u)`` with ``u`` unimodular and ``u @ m == h`` in staircase
    form: pivots positive, strictly increasing pivot columns, entries above
    each pivot reduced into ``[0, pivot)``, zero rows at the bottom.
    """
    a = [list(row) for row in m]
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    u = [list(row) for row in identity(nrows)]
    pr = 0
    for col in range(ncols):
        if pr == nrows:
            break
        while True:
            nz = [i for i in range(pr, nrows) if a[i][col]]
            if len(nz) <= 1:
                break
            nz.sort(key=lambda i: abs(a[i][col]))
            base = nz[0]
            for i in nz[1:]:
                q = a[i][col] // a[base][col]
                _row_sub(a, i, base, q)
                _row_sub(u, i, base, q)
        nz = [i for i in range(pr, nrows) if a[i][col]]
        if not nz:
            continue
        i0 = nz[0]
        if i0 != pr:
            a[pr], a[i0] = a[i0], a[pr]
            u[pr], u[i0] = u[i0], u[pr]
        if a[pr][col] < 0:
            a[pr] = [-x for x in a[pr]]
            u[pr] = [-x for x in u[pr]]
        for i in range(pr):
            q = a[i][col] // a[pr][col]
            _row_sub(a, i, pr, q)
            _row_sub(u, i, pr, q)
        pr += 1
    return tuple(map(tuple, a)), tuple(map(tuple, u))


def snf(m: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Smith normal form.

    Returns ``(s, u, v)`` with ``u, v`` unimodular, ``u @ m @ v == s``
    diagonal, each diagonal entry nonnegative and dividing the next.
    """
    a = [list(row) for row in m]
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    u = [list(row) for row in identity(nrows)]
    v = [list(row) for row in identity(ncols)]

    def row_op(i, j):
        # clear a[j][t] against pivot a[i][t] with a unimodular 2-row transform
        p, q = a[i][t], a[j][t]
        if q % p == 0:
            _row_sub(a, j, i, q // p)
            _row_sub(u, j, i, q // p)
            return
        x, y, g = _xgcd(p, q)
        pg, qg = p // g, q // g
        a[i], a[j] = (
            [x * r + y * s_ for r, s_ in zip(a[i], a[j])],
            [-qg * r + pg * s_ for r, s_ in zip(a[i], a[j])],
        )
        u[i], u[j] = (
            [x * r + y * s_ for r, s_ in zip(u[i], u[j])],
            [-qg * r + pg * s_ for r, s_ in zip(u[i], u[j])],
        )

    def col_op(i, j):
        p, q = a[t][i], a[t][j]
        if q % p == 0:
            f = q // p
            for row in a:
                row[j] -= f * row[i]
            for row in v:
                row[j] -= f * row[i]
            return
        x, y, g = _xgcd(p, q)
        pg, qg = p // g, q // g
        for row in a:
            row[i], row[j] = x * row[i] + y * row[j], -qg * row[i] + pg * row[j]
        for row in v:
            row[i], row[j] = x * row[i] + y * row[j], -qg * row[i] + pg * row[j]

    t = 0
    while t < min(nrows, ncols):
        pivot = next(
            ((i, j) for i in range(t, nrows) for j in range(t, ncols) if a[i][j]),
            None,
        )
        if pivot is None:
            break
        i0, j0 = pivot
        if i0 != t:
            a[t], a[i0] = a[i0], a[t]
            u[t], u[i0] = u[i0], u[t]
        if j0 != t:
            for row in a:
                row[t], row[j0] = row[j0], row[t]
            for row in v:
                row[t], row[j0] = row[j0], row[t]
        while True:
            for i in range(t + 1, nrows):
                if a[i][t]:
                    row_op(t, i)
            for j in range(t + 1, ncols):
                if a[t][j]:
                    col_op(t, j)
            if any(a[i][t] for i in range(t + 1, nrows)):
                continue
            bad = next(
                ((i, j) for i in range(t + 1, nrows) for j in range(t + 1, ncols)
                 if a[i][j] % a[t][t]),
                None,
            )
            if bad is None:
                break
            _row_sub(a, t, bad[0], -1)
            _row_sub(u, t, bad[0], -1)
        t += 1
    for i in range(min(nrows, ncols)):
        if a[i][i] < 0:
            a[i] = [-x for x in a[i]]
            u[i] = [-x for x in u[i]]
    return tuple(map(tuple, a)), tuple(map(tuple, u)), tuple(map(tuple, v))


def rank(m: IntMatrix) -> int:
    h, _ = hnf(m)
    return sum(1 for row in h if any(row))


# ---------------------------------------------------------------------------
# kernels, saturation, complements


def kernel_basis(m: IntMatrix) -> IntMatrix:
    """Canonical saturated basis of ``{x : m @ x^T = 0}``.

    The rows returned are the HNF of the integer kernel, so the output is
    deterministic and spans a primitive sublattice.
    """
    mt = transpose(m)
    h, u = hnf(mt)
    rows = tuple(u[i] for i in range(len(h)) if not any(h[i]))
    if not rows:
        return ()
    return hnf(rows)[0]


def saturation(basis: IntMatrix, dim: int) -> IntMatrix:
    """Saturated (primitive) closure of the row span inside ``Z^dim``."""
    if not basis:
        return ()
    if len(basis[0]) != dim:
        raise InputError("basis vectors do not have the ambient length")
    ker = kernel_basis(basis)
    if not ker:
        return identity(dim)
    return kernel_basis(ker)


def is_saturated(basis: IntMatrix) -> bool:
    """True when the rows span a primitive sublattice (unit invariant factors)."""
    if not basis:
        return True
    s, _, _ = snf(basis)
    k = min(len(basis), len(basis[0]))
    diag = [s[i][i] for i in range(k)]
    nz = [d for d in diag if d]
    return len(nz) == len(basis) and all(d == 1 for d in nz)


def orthogonal_complement(ambient_gram: IntMatrix, vectors: IntMatrix) -> IntMatrix:
    """Saturated basis of ``{x : (x, v_i) = 0 for all i}`` w.r.t. ``ambient_gram``."""
    n = len(ambient_gram)
    if not vectors:
        return identity(n)
    return kernel_basis(matmul(vectors, ambient_gram))


# ---------------------------------------------------------------------------
# rational solving


def rat_solve(a, b):
    """One exact solution ``x`` of ``a @ x = b`` (matrices of columns), or None.

    ``a`` is r-by-c, ``b`` is r-by-k; the result is c-by-k with Fraction
    entries. Underdetermined systems get the solution with free variables
    set to zero.
    """
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    k = len(b[0]) if b else 0
    aug = [[Fraction(x) for x in row_a] + [Fraction(x) for x in row_b]
           for row_a, row_b in zip(a, b)]
    pivots: list[tuple[int, int]] = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, nrows) if aug[i][col]), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = 1 / aug[r][col]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(nrows):
            if i != r and aug[i][col]:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append((r, col))
        r += 1
        if r == nrows:
            break
    for i in range(r, nrows):
        if any(aug[i][ncols:]):
            return None
    x = [[Fraction(0)] * k for _ in range(ncols)]
    for row, col in pivots:
        x[col] = aug[row][ncols:]
    return tuple(tuple(row) for row in x)


def solve_left(a, b):
    """One exact rational solution ``x`` of ``x @ a = b`` for a row vector b, or None."""
    sol = rat_solve(transpose(a), transpose((b,)))
    if sol is None:
        return None
    return tuple(row[0] for row in sol)


def rat_inverse(m) -> RatMatrix:
    n = len(m)
    inv = rat_solve(m, identity(n))
    if inv is None:
        raise InputError("matrix is singular")
    return inv


def inverse_unimodular(m: IntMatrix) -> IntMatrix:
    """Exact inverse of a unimodular integer matrix."""
    inv = rat_inverse(m)
    if any(x.denominator != 1 for row in inv for x in row):
        raise InputError("matrix is not unimodular")
    return tuple(tuple(int(x) for x in row) for row in inv)


def complete_primitive(y: IntVec) -> IntMatrix:
    """A unimodular matrix whose first row is the primitive vector ``y``."""
    if vec_content(y) != 1:
        raise InputError("vector is not primitive")
    _, u = hnf(tuple((x,) for x in y))
    v = transpose(inverse_unimodular(u))
    assert v[0] == tuple(y)
    return v


# ---------------------------------------------------------------------------
# quadratic-form invariants


def signature(gram: IntMatrix) -> tuple[int, int, int]:
    """Exact inertia ``(pos, neg, zero)`` of a symmetric matrix.

    Uses symmetric congruence pivoting over the rationals; a zero diagonal
    with a nonzero off-diagonal entry is repaired by adding the partner
    row and column, which keeps the transform congruent.
    """
    if not is_symmetric(gram):
        raise InputError("signature requires a symmetric matrix")
    n = len(gram)
    a = [[Fraction(x) for x in row] for row in gram]
    alive = list(range(n))
    pos = neg = zero = 0
    while alive:
        i = next((i for i in alive if a[i][i]), None)
        if i is None:
            pair = next(
                ((i, j) for i in alive for j in alive if j != i and a[i][j]), None
            )
            if pair is None:
                zero += len(alive)
                break
            i, j = pair
            for k in range(n):
                a[i][k] += a[j][k]
            for k in range(n):
                a[k][i] += a[k][j]
            continue
        if a[i][i] > 0:
            pos += 1
        else:
            neg += 1
        alive.remove(i)
        d = a[i][i]
        for k in alive:
            if a[k][i]:
                f = a[k][i] / d
                for l in alive:
                    a[k][l] -= f * a[i][l]
                a[k][i] = Fraction(0)
        for l in alive:
            a[i][l] = Fraction(0)
    return pos, neg, zero


def discriminant_group(gram: IntMatrix) -> tuple[int, ...]:
    """Invariant factors ``> 1`` of ``coker(gram)``; empty for unimodular forms."""
    if not is_symmetric(gram):
        raise InputError("discriminant group requires a symmetric matrix")
    n = len(gram)
    s, _, _ = snf(gram)
    diag = [s[i][i] for i in range(n)]
    if any(d == 0 for d in diag):
        raise PreconditionError("Gram matrix is degenerate")
    return tuple(d for d in diag if d > 1)


# ---------------------------------------------------------------------------
# short vectors (Fincke-Pohst)


def _floor_sqrt(f: Fraction) -> int:
    """floor(sqrt(f)) for a nonnegative rational, computed exactly."""
    if f < 0:
        raise InputError("negative radicand")
    return isqrt(f.numerator * f.denominator) // f.denominator


def _sqrt_range(center: Fraction, radius_sq: Fraction) -> tuple[int, int]:
    """All integers x with (x - center)^2 <= radius_sq, as [lo, hi]."""
    if radius_sq < 0:
        return 0, -1
    a, b = center.numerator, center.denominator
    s = _floor_sqrt(radius_sq * b * b)  # floor(b * sqrt(radius_sq))
    hi = (a + s) // b
    lo = -((-a + s) // b)
    return lo, hi


def short_vectors(gram, bound) -> tuple[IntVec, ...]:
    """All nonzero integer vectors with ``x . gram . x^T <= bound``.

    One representative per ``{x, -x}`` pair (first nonzero entry positive),
    sorted lexicographically. The Gram matrix must be symmetric positive
    definite; this is detected exactly by the rational Cholesky-type
    decomposition and violations raise :class:`PreconditionError`.
    """
    n = len(gram)
    q = [[Fraction(x) for x in row] for row in gram]
    if not is_symmetric(q):
        raise InputError("short_vectors requires a symmetric matrix")
    bound = Fraction(bound)
    # Gaussian decomposition q(x) = sum_i q[i][i] (x_i + sum_{j>i} q[i][j] x_j)^2
    for i in range(n):
        if q[i][i] <= 0:
            raise PreconditionError("Gram matrix is not positive definite")
        for j in range(i + 1, n):
            q[j][i] = q[i][j]
            q[i][j] = q[i][j] / q[i][i]
        for k in range(i + 1, n):
            for l in range(k, n):
                q[k][l] -= q[k][i] * q[i][l]
    if n == 0 or bound < 0:
        return ()

    found: set[IntVec] = set()
    x = [0] * n

    def descend(i: int, remaining: Fraction) -> None:
        shift = sum(q[i][j] * x[j] for j in range(i + 1, n))
        lo, hi = _sqrt_range(-shift, remaining / q[i][i])
        for xi in range(lo, hi + 1):
            x[i] = xi
            rest = remaining - q[i][i] * (xi + shift) ** 2
            if i == 0:
                vec = tuple(x)
                if any(vec):
                    neg = tuple(-t for t in vec)
                    found.add(max(vec, neg))
            else:
                descend(i - 1, rest)
        x[i] = 0

    descend(n - 1, bound)
    return tuple(sorted(found))
