"""Linearized (q^u-)polynomials L(x) = sum_i c_i x^(q^(u*i)) of q-degree < n."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from . import linalg
from .field import FieldCtx


@dataclass(frozen=True)
class LinearizedPoly:
    ctx: FieldCtx
    coeffs: tuple[int, ...]
    u: int = 1

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.coeffs))

    @property
    def n(self) -> int:
        return len(self.coeffs)

    def __call__(self, x: int) -> int:
        return evaluate(self, x)

    def __add__(self, other: "LinearizedPoly") -> "LinearizedPoly":
        return LinearizedPoly(self.ctx, [self.ctx.add(a, b) for a, b in
                                         zip(self.coeffs, other.coeffs)], self.u)

    def __sub__(self, other: "LinearizedPoly") -> "LinearizedPoly":
        return LinearizedPoly(self.ctx, [self.ctx.sub(a, b) for a, b in
                                         zip(self.coeffs, other.coeffs)], self.u)

    def is_zero(self) -> bool:
        return not any(self.coeffs)


def zero_poly(ctx: FieldCtx, u: Optional[int] = None) -> LinearizedPoly:
    u = ctx.u if u is None else u
    return LinearizedPoly(ctx, (0,) * ctx.n, u)


def evaluate(L: LinearizedPoly, x: int) -> int:
    ctx = L.ctx
    acc = 0
    for i, c in enumerate(L.coeffs):
        if c:
            acc = ctx.add(acc, ctx.mul(c, ctx.frobenius(x, L.u * i)))
    return acc


def dickson(L: LinearizedPoly) -> linalg.Matrix:
    """Dickson matrix with entry (i, j) = c_{(i-j) mod n}^(q^(u*j)).

    Column j is column 0 cyclically shifted down by j and twisted by the
    j-th Frobenius power.
    """
    ctx, n, u = L.ctx, L.n, L.u
    return [[ctx.frobenius(L.coeffs[(i - j) % n], u * j) for j in range(n)]
            for i in range(n)]


def field_basis(ctx: FieldCtx) -> list[int]:
    """The monomial basis 1, x, ..., x^(n-1) of the top field over F_{q^u}."""
    out = [1]
    for _ in range(ctx.n - 1):
        out.append(ctx.mul(out[-1], ctx.p))
    return out


def map_rank(L: LinearizedPoly) -> int:
    """Rank of x -> L(x) as an F_{q^u}-linear map of the top field.

    Computed from the Dickson matrix and, independently, from the images of
    a basis; the two must agree.
    """
    ctx = L.ctx
    via_dickson = linalg.rank(ctx, dickson(L))
    images = [evaluate(L, b) for b in field_basis(ctx)]
    via_images = linalg.rank_over_subfield(ctx, images, L.u * ctx.s)
    if via_dickson != via_images:
        raise ArithmeticError(
            f"Dickson rank {via_dickson} != image rank {via_images}")
    return via_dickson


def interpolate(ctx: FieldCtx, points: Sequence[int], values: Sequence[int],
                u: Optional[int] = None, shift: int = 0,
                moore_inv: Optional[linalg.Matrix] = None) -> LinearizedPoly:
    """The unique L with L(points_i^(q^(u*shift))) = values_i.

    ``moore_inv`` may carry a precomputed inverse of the shifted Moore
    matrix of ``points``; otherwise it is built here.
    """
    from .bases import moore_matrix

    u = ctx.u if u is None else u
    if moore_inv is None:
        try:
            moore_inv = linalg.invert(ctx, moore_matrix(ctx, points, shift, u))
        except linalg.SingularMatrixError:
            raise linalg.SingularMatrixError(
                "interpolation points are linearly dependent") from None
    # values = M coeffs, so coeffs = M^-1 values
    return LinearizedPoly(ctx, linalg.matvec(ctx, moore_inv, values), u)
