"""Exact integer and rational linear algebra on small dense matrices.

Matrices are tuples of tuples (rows) of Python ints or Fractions; vectors are
tuples.  Everything is exact: no floating point is used anywhere in this
package.  Sizes stay tiny (at most ~25 rows/columns), so the algorithms favour
clarity over asymptotics.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import gcd
from typing import Iterable, Optional, Sequence

IntMatrix = tuple[tuple[int, ...], ...]
IntVector = tuple[int, ...]
RatMatrix = tuple[tuple[Fraction, ...], ...]


def mat(rows: Iterable[Iterable[int]]) -> IntMatrix:
    m = tuple(tuple(int(x) for x in row) for row in rows)
    if m and any(len(row) != len(m[0]) for row in m):
        raise ValueError("ragged matrix")
    return m


def identity(n: int) -> IntMatrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def zeros(r: int, c: int) -> IntMatrix:
    return tuple((0,) * c for _ in range(r))


def shape(a: Sequence[Sequence]) -> tuple[int, int]:
    return (len(a), len(a[0]) if a else 0)


def transpose(a):
    return tuple(zip(*a)) if a else ()


def matmul(a, b):
    if not a or not b:
        return ()
    bt = transpose(b)
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def mat_vec(a, v):
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def vec_add(u, v):
    return tuple(x + y for x, y in zip(u, v))


def vec_scale(c, v):
    return tuple(c * x for x in v)


def vec_dot(u, v):
    return sum(x * y for x, y in zip(u, v))


def vec_content(v) -> int:
    """gcd of the entries (0 for the zero vector)."""
    g = 0
    for x in v:
        g = gcd(g, abs(x))
    return g


def primitive_vector(v: Sequence) -> IntVector:
    """Scale a rational vector to a primitive integer vector, keeping direction."""
    fracs = [Fraction(x) for x in v]
    den = 1
    for f in fracs:
        den = den * f.denominator // gcd(den, f.denominator)
    ints = [int(f * den) for f in fracs]
    g = vec_content(ints)
    if g == 0:
        return tuple(0 for _ in ints)
    return tuple(x // g for x in ints)


def sign_canonical(v: Sequence[int]) -> IntVector:
    """Flip the sign so the first nonzero entry is positive."""
    for x in v:
        if x != 0:
            return tuple(v) if x > 0 else tuple(-y for y in v)
    return tuple(v)


def det(a: Sequence[Sequence[int]]) -> int:
    """Determinant by fraction-free (Bareiss) elimination."""
    n = len(a)
    if n == 0:
        return 1
    if len(a[0]) != n:
        raise ValueError("determinant of non-square matrix")
    m = [list(row) for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[-1][-1]


def rank(a: Sequence[Sequence]) -> int:
    """Rank over the rationals."""
    m = [[Fraction(x) for x in row] for row in a]
    rows, cols = len(m), len(m[0]) if m else 0
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        r += 1
        if r == rows:
            break
    return r


def hnf(a: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    """Hermite normal form h = u*a with u unimodular.

    Pivots are positive and entries above each pivot are reduced into
    [0, pivot).  The row/column orientation is an internal convention and is
    relied upon nowhere outside this module.
    """
    rows, cols = shape(a)
    m = [list(row) for row in a]
    u = [list(row) for row in identity(rows)]
    r = 0
    for c in range(cols):
        piv = None
        for i in range(r, rows):
            if m[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        u[r], u[piv] = u[piv], u[r]
        # euclidean elimination below the pivot
        while True:
            nz = [i for i in range(r + 1, rows) if m[i][c] != 0]
            if not nz:
                break
            i = min(nz + [r], key=lambda k: abs(m[k][c]))
            if i != r:
                m[r], m[i] = m[i], m[r]
                u[r], u[i] = u[i], u[r]
            for i in range(r + 1, rows):
                q = m[i][c] // m[r][c]
                if q:
                    m[i] = [x - q * y for x, y in zip(m[i], m[r])]
                    u[i] = [x - q * y for x, y in zip(u[i], u[r])]
        if m[r][c] < 0:
            m[r] = [-x for x in m[r]]
            u[r] = [-x for x in u[r]]
        for i in range(r):
            q = m[i][c] // m[r][c]
            if q:
                m[i] = [x - q * y for x, y in zip(m[i], m[r])]
                u[i] = [x - q * y for x, y in zip(u[i], u[r])]
        r += 1
        if r == rows:
            break
    return tuple(map(tuple, m)), tuple(map(tuple, u))


def snf(a: IntMatrix) -> tuple[int, ...]:
    """Elementary divisors d_1 | d_2 | ... (nonnegative, zeros trailing)."""
    rows, cols = shape(a)
    n = min(rows, cols)
    if n == 0:
        return ()
    m = [list(row) for row in a]

    def reduce_at(k: int) -> None:
        while True:
            piv = None
            best = None
            for i in range(k, rows):
                for j in range(k, cols):
                    if m[i][j] != 0 and (best is None or abs(m[i][j]) < best):
                        best = abs(m[i][j])
                        piv = (i, j)
            if piv is None:
                return
            i0, j0 = piv
            m[k], m[i0] = m[i0], m[k]
            for row in m:
                row[k], row[j0] = row[j0], row[k]
            dirty = False
            for i in range(k + 1, rows):
                q = m[i][k] // m[k][k]
                if q:
                    m[i] = [x - q * y for x, y in zip(m[i], m[k])]
                if m[i][k] != 0:
                    dirty = True
            for j in range(k + 1, cols):
                q = m[k][j] // m[k][k]
                if q:
                    for row in m:
                        row[j] -= q * row[k]
                if m[k][j] != 0:
                    dirty = True
            if not dirty:
                # divisibility fix-up: pivot must divide the rest of the block
                bad = None
                for i in range(k + 1, rows):
                    for j in range(k + 1, cols):
                        if m[i][j] % m[k][k] != 0:
                            bad = i
                            break
                    if bad is not None:
                        break
                if bad is None:
                    return
                m[k] = [x + y for x, y in zip(m[k], m[bad])]

    for k in range(n):
        reduce_at(k)
    divisors = [abs(m[k][k]) for k in range(n)]
    return tuple(divisors)


def kernel_basis(a: IntMatrix, cols: Optional[int] = None) -> tuple[IntVector, ...]:
    """Basis of the integer kernel {x : a*x = 0}; the lattice is saturated.

    `cols` must be supplied when `a` has no rows.
    """
    rows, ncols = shape(a)
    if ncols == 0:
        ncols = cols if cols is not None else 0
    if rows == 0:
        return tuple(identity(ncols))
    # column-HNF via hnf of the transpose: a * u^T has zero columns exactly
    # where h has zero rows, and the matching rows of u span the kernel.
    h, u = hnf(transpose(a))
    return tuple(tuple(row) for hrow, row in zip(h, u) if all(x == 0 for x in hrow))


def saturate(vectors: Sequence[IntVector], ambient: Optional[int] = None) -> tuple[IntVector, ...]:
    """Basis of the saturation (Q-span intersected with Z^N) of the span."""
    vecs = [tuple(v) for v in vectors]
    if not vecs:
        return ()
    n = len(vecs[0])
    orth = kernel_basis(tuple(vecs), cols=n)
    return kernel_basis(orth, cols=n)


def solve_rational(a, b) -> Optional[tuple[Fraction, ...]]:
    """One solution x of a*x = b over Q, or None if inconsistent."""
    rows, cols = shape(a)
    m = [[Fraction(x) for x in row] + [Fraction(bv)] for row, bv in zip(a, b)]
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    for i in range(r, rows):
        if m[i][cols] != 0:
            return None
    x = [Fraction(0)] * cols
    for i, c in enumerate(pivots):
        x[c] = m[i][cols]
    return tuple(x)


def invert_unimodular(a: IntMatrix) -> IntMatrix:
    """Exact inverse of a matrix with determinant +-1."""
    d = det(a)
    if d not in (1, -1):
        raise ValueError(f"matrix is not unimodular (determinant {d})")
    n = len(a)
    adj = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = tuple(
                tuple(a[r][c] for c in range(n) if c != j) for r in range(n) if r != i
            )
            adj[j][i] = (-1) ** (i + j) * det(minor)
    return tuple(tuple(x * d for x in row) for row in adj)


def invert_rational(a) -> RatMatrix:
    """Exact inverse of a nonsingular square matrix over Q."""
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            raise ValueError("matrix is singular")
        m[c], m[piv] = m[piv], m[c]
        inv = 1 / m[c][c]
        m[c] = [x * inv for x in m[c]]
        for i in range(n):
            if i != c and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return tuple(tuple(row[n:]) for row in m)


def max_minors(a: IntMatrix, r: int) -> tuple[int, ...]:
    """All r x r minors, in lexicographic order of (row subset, column subset)."""
    rows, cols = shape(a)
    if r > rows or r > cols:
        return ()
    out = []
    for rsel in itertools.combinations(range(rows), r):
        for csel in itertools.combinations(range(cols), r):
            out.append(det(tuple(tuple(a[i][j] for j in csel) for i in rsel)))
    return tuple(out)


def f2_kernel(columns: Sequence[int]) -> list[int]:
    """Nonzero kernel vectors of an F2 matrix given by column bitmasks.

    `columns[j]` encodes the j-th column; kernel vectors are returned as
    bitmasks over the column indices (bit j set means column j participates).
    """
    pivots: dict[int, tuple[int, int]] = {}
    kernel_gens = []
    for j, mask in enumerate(columns):
        comb = 1 << j
        while mask:
            top = mask.bit_length() - 1
            if top in pivots:
                pm, pc = pivots[top]
                mask ^= pm
                comb ^= pc
            else:
                pivots[top] = (mask, comb)
                break
        if mask == 0:
            kernel_gens.append(comb)
    out = set()
    for bits in range(1, 1 << len(kernel_gens)):
        v = 0
        b = bits
        idx = 0
        while b:
            if b & 1:
                v ^= kernel_gens[idx]
            b >>= 1
            idx += 1
        out.add(v)
    out.discard(0)
    return sorted(out)


def lattice_index(vectors: Sequence[IntVector]) -> int:
    """Index of the span of `vectors` inside its saturation (0 if empty)."""
    if not vectors:
        return 0
    idx = 1
    for d in snf(tuple(tuple(v) for v in vectors)):
        if d:
            idx *= d
    return idx
