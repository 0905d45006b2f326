"""Evaluation bases: Moore matrices, dual and Hermitian dual bases, normal elements."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from . import linalg
from .field import FieldCtx


def moore_matrix(ctx: FieldCtx, points: Sequence[int], shift: int = 0,
                 u: Optional[int] = None) -> linalg.Matrix:
    """n x n matrix with entry (i, j) = points_i^(q^(u*(j+shift)))."""
    u = ctx.u if u is None else u
    n = len(points)
    return [[ctx.frobenius(a, u * (j + shift)) for j in range(n)] for a in points]


def is_basis(ctx: FieldCtx, points: Sequence[int], u: Optional[int] = None) -> bool:
    """True when the points form an F_{q^u}-basis of the top field."""
    if len(points) != ctx.n:
        return False
    return linalg.rank(ctx, moore_matrix(ctx, points, 0, u)) == ctx.n


@dataclass(frozen=True)
class EvalBasis:
    """Basis points plus the cached Moore matrix of the evaluation points.

    The evaluation points are ``points[i] ** (q^(u*shift))``.
    """

    ctx: FieldCtx
    points: tuple[int, ...]
    shift: int = 0
    moore: linalg.Matrix = field(default=None, repr=False, compare=False)
    moore_inv: linalg.Matrix = field(default=None, repr=False, compare=False)

    @property
    def eval_points(self) -> list[int]:
        return [self.ctx.frobenius(a, self.ctx.u * self.shift) for a in self.points]


def make_eval_basis(ctx: FieldCtx, points: Sequence[int], shift: int = 0) -> EvalBasis:
    points = tuple(points)
    if len(points) != ctx.n:
        raise ValueError(f"need {ctx.n} basis points, got {len(points)}")
    M = moore_matrix(ctx, points, shift)
    try:
        Minv = linalg.invert(ctx, M)
    except linalg.SingularMatrixError:
        raise ValueError("basis points are linearly dependent") from None
    return EvalBasis(ctx, points, shift, M, Minv)


def _base_degree(ctx: FieldCtx) -> int:
    return ctx.u * ctx.s


def dual_basis(ctx: FieldCtx, points: Sequence[int]) -> list[int]:
    """The trace-dual basis relative to F_{q^u}.

    Solves Tr(points_i * dual_j) = delta_ij by inverting the trace Gram
    matrix.
    """
    deg = _base_degree(ctx)
    gram = [[ctx.trace(ctx.mul(a, b), deg) for b in points] for a in points]
    try:
        ginv = linalg.invert(ctx, gram)
    except linalg.SingularMatrixError:
        raise ValueError("points do not form a basis") from None
    n = len(points)
    return [ctx.sum(ctx.mul(ginv[k][j], points[k]) for k in range(n))
            for j in range(n)]


def hermitian_dual_basis(ctx: FieldCtx, points: Sequence[int]) -> list[int]:
    """Basis beta with Tr_{q^2n/q^2}(points_i^q * beta_j) = delta_ij.

    Taken as gamma_j^q where gamma is the ordinary dual basis: then
    points_i^q * gamma_j^q = (points_i * gamma_j)^q and the trace commutes
    with the q-power.
    """
    if ctx.u != 2:
        raise ValueError("Hermitian dual bases live in F_{q^2n} (u=2)")
    return [ctx.frobenius(g, 1) for g in dual_basis(ctx, points)]


def normal_basis(ctx: FieldCtx, w: int, u: Optional[int] = None) -> list[int]:
    u = ctx.u if u is None else u
    return [ctx.frobenius(w, u * i) for i in range(ctx.n)]


def find_normal_element(ctx: FieldCtx, u: Optional[int] = None) -> int:
    """First element, in integer order, whose Frobenius orbit is a basis."""
    u = ctx.u if u is None else u
    for w in range(1, ctx.order):
        if is_basis(ctx, normal_basis(ctx, w, u), u):
            return w
    raise ArithmeticError("no normal element found")  # unreachable
