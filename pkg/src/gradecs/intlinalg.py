"""Integer and rational matrix utilities: Smith normal form, solving,
kernels and lattice saturation.

Matrices are lists of lists (row major) of ints or Fractions. Everything
is exact; sizes here are tiny (rank <= 9), so the classic cubic
elimination algorithms are plenty.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def _clear_denominators(v) -> list[int]:
    fr = [Fraction(x) for x in v]
    den = 1
    for x in fr:
        den = den * x.denominator // gcd(den, x.denominator)
    return [int(x * den) for x in fr]


def identity_matrix(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(A, B):
    n, k, m = len(A), len(B), len(B[0]) if B else 0
    out = [[0] * m for _ in range(n)]
    for i in range(n):
        Ai = A[i]
        for t in range(k):
            a = Ai[t]
            if a:
                Bt = B[t]
                row = out[i]
                for j in range(m):
                    row[j] += a * Bt[j]
    return out


def mat_vec(A, v):
    return [sum(a * x for a, x in zip(row, v)) for row in A]


def mat_transpose(A):
    return [list(col) for col in zip(*A)]


def mat_eq(A, B) -> bool:
    return len(A) == len(B) and all(ra == rb for ra, rb in zip(A, B))


def mat_pow(A, n: int):
    result = identity_matrix(len(A))
    base = A
    while n:
        if n & 1:
            result = mat_mul(result, base)
        base = mat_mul(base, base)
        n >>= 1
    return result


def det(A) -> Fraction:
    """Determinant by fraction-free-ish Gaussian elimination."""
    n = len(A)
    M = [[Fraction(x) for x in row] for row in A]
    sign = 1
    for col in range(n):
        pivot = next((r for r in range(col, n) if M[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            M[col], M[pivot] = M[pivot], M[col]
            sign = -sign
        for r in range(col + 1, n):
            if M[r][col]:
                f = M[r][col] / M[col][col]
                for c in range(col, n):
                    M[r][c] -= f * M[col][c]
    result = Fraction(sign)
    for i in range(n):
        result *= M[i][i]
    return result


def smith_normal_form(A):
    """Return (D, U, V) with U*A*V = D diagonal, d1 | d2 | ..., U, V unimodular.

    Diagonal entries are the nonnegative invariant factors (zeros last).
    """
    n = len(A)
    m = len(A[0]) if n else 0
    D = [list(row) for row in A]
    U = identity_matrix(n)
    V = identity_matrix(m)

    def swap_rows(i, j):
        if i != j:
            D[i], D[j] = D[j], D[i]
            U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        if i != j:
            for row in D:
                row[i], row[j] = row[j], row[i]
            for row in V:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, c):
        D[dst] = [a + c * b for a, b in zip(D[dst], D[src])]
        U[dst] = [a + c * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, c):
        for row in D:
            row[dst] += c * row[src]
        for row in V:
            row[dst] += c * row[src]

    t = 0
    k = min(n, m)
    while t < k:
        # Smallest-magnitude nonzero pivot in the remaining submatrix.
        pivot = None
        best = None
        for i in range(t, n):
            for j in range(t, m):
                v = abs(D[i][j])
                if v and (best is None or v < best):
                    best = v
                    pivot = (i, j)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        while True:
            # Reduce column t, then row t; a nonzero remainder becomes a
            # strictly smaller pivot, so this terminates.
            restart = False
            for i in range(t + 1, n):
                if D[i][t]:
                    q = D[i][t] // D[t][t]
                    if q:
                        add_row(i, t, -q)
                    if D[i][t]:
                        swap_rows(t, i)
                        restart = True
                        break
            if restart:
                continue
            for j in range(t + 1, m):
                if D[t][j]:
                    q = D[t][j] // D[t][t]
                    if q:
                        add_col(j, t, -q)
                    if D[t][j]:
                        swap_cols(t, j)
                        restart = True
                        break
            if restart:
                continue
            # Pivot must divide every remaining entry for the d_i | d_{i+1}
            # chain; if not, fold the offending row in and keep reducing.
            offender = None
            for i in range(t + 1, n):
                for j in range(t + 1, m):
                    if D[i][j] % D[t][t] != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            add_row(t, offender, 1)
        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]
        t += 1
    return D, U, V


def invariant_factors(A) -> list[int]:
    """Nontrivial invariant factors (> 1 entries keep zeros) of A's cokernel
    restricted to its torsion part: Smith diagonal entries not equal to 1."""
    D, _, _ = smith_normal_form(A)
    k = min(len(D), len(D[0]) if D else 0)
    return [D[i][i] for i in range(k) if D[i][i] != 1]


def mat_inverse_fraction(A):
    """Exact inverse of a square matrix over the rationals."""
    n = len(A)
    M = [[Fraction(x) for x in row] + [Fraction(1 if i == j else 0) for j in range(n)]
         for i, row in enumerate(A)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if M[r][col] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("singular matrix")
        M[col], M[pivot] = M[pivot], M[col]
        pv = M[col][col]
        M[col] = [x / pv for x in M[col]]
        for r in range(n):
            if r != col and M[r][col]:
                f = M[r][col]
                M[r] = [x - f * y for x, y in zip(M[r], M[col])]
    return [row[n:] for row in M]


def solve_fraction(A, b):
    """Solve A x = b exactly over the rationals; A square invertible."""
    return mat_vec(mat_inverse_fraction(A), [Fraction(x) for x in b])


def rational_kernel_basis(A):
    """Basis of the rational kernel of A (rows are equations)."""
    if not A:
        return []
    rows = len(A)
    cols = len(A[0])
    M = [[Fraction(x) for x in row] for row in A]
    pivots = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if M[i][c] != 0), None)
        if pivot is None:
            continue
        M[r], M[pivot] = M[pivot], M[r]
        pv = M[r][c]
        M[r] = [x / pv for x in M[r]]
        for i in range(rows):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * cols
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -M[i][fc]
        basis.append(v)
    return basis


def saturated_sublattice_basis(vectors, n: int) -> list[list[int]]:
    """Integer basis of (Q-span of `vectors`) intersected with Z^n.

    `vectors` are integer (or rational) vectors of length n. The result is a
    basis of the saturation, i.e. the largest sublattice of Z^n with the same
    rational span.
    """
    if not vectors:
        return []
    # Clear denominators row by row; span is unchanged.
    rows = [_clear_denominators(v) for v in vectors]
    # Saturation = kernel-of-kernel: the forms vanishing on the span are
    # ker(rows); the saturation is the integer kernel of those forms.
    K = rational_kernel_basis(rows)
    if not K:
        return identity_matrix(n)
    return integer_kernel_basis(K, n)


def integer_kernel_basis(equations, n: int) -> list[list[int]]:
    """Basis of {x in Z^n : E x = 0} for rational equation rows E."""
    rows = [_clear_denominators(v) for v in equations]
    D, U, V = smith_normal_form(rows)
    k = min(len(rows), n)
    rank = sum(1 for i in range(k) if D[i][i] != 0)
    # x = V y; equations become D y = 0 => y_i = 0 for i < rank.
    basis = []
    for j in range(rank, n):
        basis.append([V[i][j] for i in range(n)])
    return basis
