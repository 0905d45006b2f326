"""Interpolation-based unique decoding up to rank floor((d-1)/2).

Pipeline for a received word r = c + e:

1. beta = r (M^T)^-1, the coefficients of the polynomial interpolating r.
2. On the d-1 cyclic positions where every codeword polynomial has a zero
   coefficient, beta equals the coefficients g_i of the error polynomial.
3. The g_i satisfy the Frobenius-twisted recurrence
   g_i = sum_{m=1..t} lambda_m g_{i-m}^(q^(u*m)) at every index mod n,
   where t is the error rank; lambda is found from the known window by a
   skew Berlekamp-Massey synthesis.
4. The recurrence fills in the rest of g, ft = beta - g gives the message
   layout, and e is g evaluated at the evaluation points.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Optional, Sequence

from . import linalg
from .channel import error_rank
from .codes import CodeSpec, LayoutError, coeffs_from_word, compress_message, encode
from .field import FieldCtx
from .linearized import LinearizedPoly, evaluate


class DecodingFailure(Exception):
    pass


@dataclass(frozen=True)
class DecodeResult:
    status: str
    message: Optional[list[int]] = None
    error: Optional[list[int]] = None
    error_poly: Optional[LinearizedPoly] = None
    rank: Optional[int] = None
    reason: str = ""

    @property
    def ok(self) -> bool:
        return self.status == "ok"


def compute_beta(spec: CodeSpec, r: Sequence[int]) -> list[int]:
    return coeffs_from_word(spec, r)


def known_window(spec: CodeSpec) -> tuple[int, int]:
    """(start, length) of the cyclic window where g_i = beta_i."""
    return spec.window_start, spec.d - 1


def skew_bm(ctx: FieldCtx, seq: Sequence[int], u: Optional[int] = None, *,
            max_len: Optional[int] = None,
            counter: Optional[Counter] = None) -> tuple[int, list[int]]:
    """Shortest Frobenius-twisted LFSR generating ``seq``.

    Returns (t, lam) with seq[i] = sum_m lam[m-1] * seq[i-m]^(q^(u*m)) for
    t <= i < len(seq).  Raises :class:`DecodingFailure` when t exceeds
    ``max_len`` (default len(seq) // 2), where the answer stops being unique.

    This is Massey's algorithm with the shifted correction term x^k B(x)
    replaced by its skew analogue: coefficient B_j moves to position j+k
    and is raised to the (q^u)^k-th power, and the stored discrepancy is
    raised to the same power before dividing.
    """
    u = ctx.u if u is None else u
    N = len(seq)
    max_len = N // 2 if max_len is None else max_len
    ops = counter if counter is not None else Counter()

    def mul(a, b):
        ops["mul"] += 1
        return ctx.mul(a, b)

    def frob(a, k):
        ops["frob"] += 1
        return ctx.frobenius(a, u * k)

    C = [1]     # current connection polynomial, C_0 = 1
    B = [1]     # connection polynomial before the last length change
    L = 0
    shift = 1   # steps since B was current
    b = 1       # discrepancy B had when it was replaced
    for i in range(N):
        delta = seq[i]
        for j in range(1, min(len(C), i + 1)):
            if C[j] and seq[i - j]:
                delta = ctx.add(delta, mul(C[j], frob(seq[i - j], j)))
        if delta == 0:
            shift += 1
            continue
        ops["inv"] += 1
        coef = ctx.div(delta, frob(b, shift))
        newC = C + [0] * max(0, len(B) + shift - len(C))
        for j, Bj in enumerate(B):
            if Bj:
                newC[j + shift] = ctx.sub(newC[j + shift], mul(coef, frob(Bj, shift)))
        if 2 * L <= i:
            L, B, b, shift = i + 1 - L, C, delta, 1
        else:
            shift += 1
        C = newC
    while len(C) > 1 and C[-1] == 0:
        C.pop()
    assert len(C) <= L + 1
    if L > max_len:
        raise DecodingFailure(f"shortest recurrence has length {L} > {max_len}")
    lam = [ctx.neg(C[j]) if j < len(C) else 0 for j in range(1, L + 1)]
    return L, lam


def skew_bm_gaussian(ctx: FieldCtx, seq: Sequence[int], u: Optional[int] = None,
                     t_max: Optional[int] = None) -> tuple[int, list[int]]:
    """Reference solver: for t = 0, 1, ... solve the key equations directly."""
    u = ctx.u if u is None else u
    N = len(seq)
    t_max = N // 2 if t_max is None else t_max
    if not any(seq):
        return 0, []
    for t in range(1, t_max + 1):
        rows = [[ctx.frobenius(seq[i - m], u * m) for m in range(1, t + 1)]
                for i in range(t, N)]
        rhs = [seq[i] for i in range(t, N)]
        if not rows:
            break
        try:
            return t, linalg.solve(ctx, rows, rhs)
        except linalg.InconsistentSystemError:
            continue
        except linalg.UnderdeterminedSystemError:
            raise DecodingFailure(f"key equations for t={t} have no unique solution") from None
    raise DecodingFailure(f"no recurrence of length <= {t_max}")


def extend_recurrence(spec: CodeSpec, window: Sequence[int], lam: Sequence[int],
                      start: int) -> list[int]:
    """Place ``window`` at cyclic positions start.. and run the recurrence forward."""
    ctx, n, u = spec.ctx, spec.n, spec.u
    if len(window) < len(lam):
        raise ValueError("window shorter than the recurrence")
    g = [0] * n
    for i, w in enumerate(window):
        g[(start + i) % n] = w
    for step in range(len(window), n):
        i = (start + step) % n
        acc = 0
        for m, lm in enumerate(lam, start=1):
            if lm:
                acc = ctx.add(acc, ctx.mul(lm, ctx.frobenius(g[(i - m) % n], u * m)))
        g[i] = acc
    return g


def decode(spec: CodeSpec, r: Sequence[int]) -> DecodeResult:
    """Decode r; status "failure" means the error could not be corrected.

    An ok result always satisfies encode(message) + error == r with
    error of rank ``rank`` <= floor((d-1)/2).  A received word farther than
    that from the transmitted codeword may still land within the radius of
    another codeword, in which case that codeword is returned.
    """
    ctx = spec.ctx
    if len(r) != spec.n:
        raise ValueError(f"word must have length {spec.n}, got {len(r)}")
    beta = compute_beta(spec, r)
    start, length = known_window(spec)
    window = [beta[(start + i) % spec.n] for i in range(length)]
    try:
        if any(window):
            t, lam = skew_bm(ctx, window, spec.u, max_len=spec.radius)
        else:
            t, lam = 0, []
        g = extend_recurrence(spec, window, lam, start)
        ft = [ctx.sub(b, gi) for b, gi in zip(beta, g)]
        f = compress_message(spec, ft)
    except (DecodingFailure, LayoutError) as exc:
        return DecodeResult("failure", reason=str(exc))

    gpoly = LinearizedPoly(ctx, g, spec.u)
    e = [evaluate(gpoly, x) for x in spec.basis.eval_points]
    c = encode(spec, f)
    if [ctx.add(ci, ei) for ci, ei in zip(c, e)] != list(r):
        return DecodeResult("failure", reason="re-encoded word does not match")
    if error_rank(spec, e) != t:
        return DecodeResult("failure", reason="error rank differs from recurrence length")
    return DecodeResult("ok", f, e, gpoly, t)
