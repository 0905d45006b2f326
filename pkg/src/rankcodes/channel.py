"""Rank-error channel: errors of exactly prescribed rank over F_{q^u}."""

from __future__ import annotations

import random
from typing import Sequence, Union

from . import linalg
from .codes import CodeSpec

Seed = Union[int, str]


def error_rank(spec: CodeSpec, e: Sequence[int]) -> int:
    """Rank of e over F_q (symmetric/alternating) or F_{q^2} (Hermitian)."""
    return linalg.rank_over_subfield(spec.ctx, e, spec.rank_degree)


def random_rank_error(spec: CodeSpec, t: int, seed: Seed) -> list[int]:
    """A length-n error of rank exactly t, determined by (spec, t, seed).

    e_i = sum_j a_j B[j][i] with a_1..a_t independent over F_{q^u} and B a
    rank-t t x n matrix over F_{q^u}; both are resampled until they are.
    """
    n = spec.n
    if not 0 <= t <= n:
        raise ValueError(f"error rank must be in [0, {n}], got {t}")
    ctx = spec.ctx
    deg = spec.rank_degree
    rng = random.Random(f"rank-error:{seed}")
    if t == 0:
        return [0] * n
    while True:
        a = [ctx.random_element(rng) for _ in range(t)]
        if linalg.rank_over_subfield(ctx, a, deg) == t:
            break
    while True:
        B = [[ctx.random_subfield_element(rng, deg) for _ in range(n)] for _ in range(t)]
        if linalg.rank(ctx, B) == t:
            break
    e = [ctx.sum(ctx.mul(a[j], B[j][i]) for j in range(t)) for i in range(n)]
    assert error_rank(spec, e) == t
    return e
