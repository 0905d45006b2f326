"""Dense exact linear algebra over a :class:`~rankcodes.field.FieldCtx`.

Matrices are lists of rows of field elements (ints).  All routines are
plain Gaussian elimination with first-nonzero pivoting, so results are
deterministic.
"""

from __future__ import annotations

import functools
from typing import Sequence

from .field import FieldCtx, FieldError

Matrix = list[list[int]]


class LinAlgError(ValueError):
    pass


class SingularMatrixError(LinAlgError):
    pass


class InconsistentSystemError(LinAlgError):
    pass


class UnderdeterminedSystemError(LinAlgError):
    pass


def identity(size: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(size)] for i in range(size)]


def zeros(rows: int, cols: int) -> Matrix:
    return [[0] * cols for _ in range(rows)]


def transpose(M: Sequence[Sequence[int]]) -> Matrix:
    return [list(col) for col in zip(*M)]


def matmul(ctx: FieldCtx, A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> Matrix:
    Bt = transpose(B)
    return [[ctx.dot(row, col) for col in Bt] for row in A]


def vecmat(ctx: FieldCtx, v: Sequence[int], M: Sequence[Sequence[int]]) -> list[int]:
    """Row vector times matrix."""
    return [ctx.dot(v, col) for col in transpose(M)]


def matvec(ctx: FieldCtx, M: Sequence[Sequence[int]], v: Sequence[int]) -> list[int]:
    return [ctx.dot(row, v) for row in M]


def _echelon(ctx: FieldCtx, M: Sequence[Sequence[int]]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns."""
    R = [list(row) for row in M]
    if not R:
        return R, []
    rows, cols = len(R), len(R[0])
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if R[i][c]), None)
        if piv is None:
            continue
        R[r], R[piv] = R[piv], R[r]
        inv = ctx.inv(R[r][c])
        R[r] = [ctx.mul(inv, x) for x in R[r]]
        for i in range(rows):
            if i != r and R[i][c]:
                f = R[i][c]
                R[i] = [ctx.sub(x, ctx.mul(f, y)) for x, y in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return R, pivots


def rank(ctx: FieldCtx, M: Sequence[Sequence[int]]) -> int:
    return len(_echelon(ctx, M)[1])


def invert(ctx: FieldCtx, M: Sequence[Sequence[int]]) -> Matrix:
    size = len(M)
    if any(len(row) != size for row in M):
        raise LinAlgError("only square matrices can be inverted")
    aug = [list(row) + e for row, e in zip(M, identity(size))]
    R, pivots = _echelon(ctx, aug)
    if pivots[:size] != list(range(size)):
        raise SingularMatrixError("matrix is singular")
    return [row[size:] for row in R]


def solve(ctx: FieldCtx, A: Sequence[Sequence[int]], b: Sequence[int]) -> list[int]:
    """The unique x with A x = b.

    Raises :class:`InconsistentSystemError` when no solution exists and
    :class:`UnderdeterminedSystemError` when it is not unique.
    """
    if len(A) != len(b):
        raise LinAlgError(f"{len(A)} equations but {len(b)} right-hand sides")
    cols = len(A[0]) if A else 0
    aug = [list(row) + [bi] for row, bi in zip(A, b)]
    R, pivots = _echelon(ctx, aug)
    if cols in pivots:
        raise InconsistentSystemError("system has no solution")
    if len(pivots) < cols:
        raise UnderdeterminedSystemError(
            f"solution space has dimension {cols - len(pivots)}")
    return [R[i][cols] for i in range(cols)]


@functools.lru_cache(maxsize=None)
def _coordinate_frame(ctx: FieldCtx, sub_deg: int) -> tuple[int, ...]:
    # F_{p^sub_deg}-basis (1, x, ..., x^(m-1)) of the top field and its trace dual
    if sub_deg < 1 or ctx.degree % sub_deg:
        raise FieldError(f"{sub_deg} does not divide the field degree {ctx.degree}")
    m = ctx.degree // sub_deg
    basis = [1]
    for _ in range(m - 1):
        basis.append(ctx.mul(basis[-1], ctx.p))  # the integer p encodes x
    gram = [[ctx.trace(ctx.mul(a, b), sub_deg) for b in basis] for a in basis]
    ginv = invert(ctx, gram)
    dual = tuple(ctx.sum(ctx.mul(ginv[k][j], basis[k]) for k in range(m))
                 for j in range(m))
    return dual


def subfield_coordinates(ctx: FieldCtx, a: int, sub_deg: int) -> list[int]:
    """Coordinates of a over F_{p^sub_deg} in the basis 1, x, ..., x^(m-1)."""
    if sub_deg == 1:
        # over the prime field these are just the stored digits
        out = []
        for _ in range(ctx.degree):
            a, r = divmod(a, ctx.p)
            out.append(r)
        return out
    dual = _coordinate_frame(ctx, sub_deg)
    return [ctx.trace(ctx.mul(a, d), sub_deg) for d in dual]


def rank_over_subfield(ctx: FieldCtx, v: Sequence[int], sub_deg: int) -> int:
    """Dimension of the F_{p^sub_deg}-span of the entries of v."""
    if sub_deg < 1 or ctx.degree % sub_deg:
        raise FieldError(f"{sub_deg} does not divide the field degree {ctx.degree}")
    cols = [subfield_coordinates(ctx, a, sub_deg) for a in v]
    if not cols:
        return 0
    return rank(ctx, cols)
