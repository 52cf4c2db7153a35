"""Dense exact linear algebra over a :class:`~oreq.scalars.Field`.

Matrices are lists of rows of raw field values.
"""

from __future__ import annotations

from .errors import InconsistentOverdetermined, SingularSystem

__all__ = ["identity", "matmul", "matvec", "inverse", "solve", "rank"]


def identity(F, n):
    return [[F.one if i == j else F.zero for j in range(n)] for i in range(n)]


def matmul(F, A, B):
    cols = len(B[0]) if B else 0
    out = []
    for row in A:
        nz = [(k, a) for k, a in enumerate(row) if a != 0]
        out.append([F.reduce(sum(a * B[k][j] for k, a in nz)) for j in range(cols)])
    return out


def matvec(F, A, v):
    return [F.reduce(sum(a * x for a, x in zip(row, v))) for row in A]


def _eliminate(F, M, ncols):
    """In-place reduced row echelon form on the first ``ncols`` columns.

    Returns the list of pivot columns.
    """
    pivots = []
    r = 0
    nrows = len(M)
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = F.inv(M[r][c])
        M[r] = [F.reduce(x * inv) for x in M[r]]
        for i in range(nrows):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [F.reduce(x - f * y) for x, y in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


def rank(F, A) -> int:
    M = [list(row) for row in A]
    return len(_eliminate(F, M, len(M[0]) if M else 0))


def inverse(F, A):
    n = len(A)
    M = [list(row) + e for row, e in zip(A, identity(F, n))]
    if len(_eliminate(F, M, n)) < n:
        raise SingularSystem("matrix is not invertible")
    return [row[n:] for row in M]


def solve(F, A, b):
    """Unique solution of ``A x = b``; A may be overdetermined (more rows)."""
    nrows = len(A)
    ncols = len(A[0]) if A else 0
    M = [list(row) + [bi] for row, bi in zip(A, b)]
    pivots = _eliminate(F, M, ncols)
    if len(pivots) < ncols:
        raise SingularSystem(f"rank {len(pivots)} < {ncols} unknowns")
    for i in range(ncols, nrows):
        if M[i][ncols] != 0:
            raise InconsistentOverdetermined(f"row {i} is inconsistent")
    return [M[i][ncols] for i in range(ncols)]
