"""Brute-force references: exhaustive code census and nearest-codeword search.

Only meant for tiny parameters; every entry point refuses message spaces
larger than ``GUARD``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from . import linalg
from .channel import error_rank
from .codes import CodeSpec, codeword_matrix, encode

GUARD = 1 << 20


class GuardExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class CodeCensus:
    spec: CodeSpec
    code_size: int
    min_distance: int

    @property
    def bound(self) -> int:
        return self.spec.q ** self.spec.bound_exponent


def message_space_size(spec: CodeSpec) -> int:
    return (spec.ctx.p ** spec.message_degree) ** spec.k


def _check_guard(spec: CodeSpec, guard: int) -> None:
    size = message_space_size(spec)
    if size > guard:
        raise GuardExceeded(f"message space has {size} elements (guard {guard})")


def all_messages(spec: CodeSpec) -> Iterator[list[int]]:
    symbols = list(spec.ctx.subfield_elements(spec.message_degree))
    for f in itertools.product(symbols, repeat=spec.k):
        yield list(f)


def exhaustive_census(spec: CodeSpec, guard: int = GUARD) -> CodeCensus:
    """Size and minimum rank distance of the code, by enumeration.

    The codes are additive, so the minimum distance is the least rank of
    the matrix form of a nonzero codeword.
    """
    _check_guard(spec, guard)
    ctx = spec.ctx
    seen = set()
    min_rank = None
    for f in all_messages(spec):
        c = tuple(encode(spec, f))
        seen.add(c)
        if any(c):
            rk = linalg.rank(ctx, codeword_matrix(spec, c))
            if min_rank is None or rk < min_rank:
                min_rank = rk
    return CodeCensus(spec, len(seen), min_rank if min_rank is not None else 0)


def exhaustive_decode(spec: CodeSpec, r: Sequence[int],
                      guard: int = GUARD) -> tuple[int, list[list[int]]]:
    """(distance, messages) of every codeword at minimum rank distance from r."""
    _check_guard(spec, guard)
    ctx = spec.ctx
    best, winners = None, []
    for f in all_messages(spec):
        c = encode(spec, f)
        dist = error_rank(spec, [ctx.sub(a, b) for a, b in zip(r, c)])
        if best is None or dist < best:
            best, winners = dist, [f]
        elif dist == best:
            winners.append(f)
    return best, winners
