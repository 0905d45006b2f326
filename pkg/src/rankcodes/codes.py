"""Symmetric, alternating and Hermitian optimal d-codes.

A message f is laid out as the coefficient vector ``ft`` of a linearized
polynomial L, and the codeword is (L(theta_0), ..., L(theta_{n-1})) = ft M^T
where M is the Moore matrix of the evaluation points theta_i.

Layouts (indices mod n):

* symmetric, k = (n-d+2)/2:
  ft_0 = f_0, ft_j = f_j, ft_{n-j} = f_j^(q^(n-j)) for 1 <= j < k.
* alternating, d = 2e, k = (n-d+1)/2:
  ft_{e+j} = f_j, ft_{n-e-j} = -f_j^(q^(n-e-j)).
* Hermitian, opposite parity (evaluation points shifted by one q^2-power),
  kappa = (n-d+1)/2, c_j = f_j + eta f_{kappa+j}:
  ft_{n-1-j} = c_j^q, ft_j = c_j^(q^(2j+2)).
* Hermitian, n and d odd, m = (n+1)/2, kappa = (n-d)/2, c_j = f_j + eta f_{kappa+j}:
  ft_m = f_0^(q^(2m)), ft_{m-j} = c_j^q, ft_{m+j} = c_j^(q^(2(m+j))).
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from typing import Optional, Sequence

from . import linalg
from .bases import EvalBasis, find_normal_element, make_eval_basis, normal_basis
from .field import FieldCtx, make_field


class Family(str, enum.Enum):
    SYMMETRIC = "sym"
    ALTERNATING = "alt"
    HERMITIAN_MIXED = "herm-mixed"
    HERMITIAN_ODD = "herm-odd"

    @property
    def u(self) -> int:
        return 2 if self in (Family.HERMITIAN_MIXED, Family.HERMITIAN_ODD) else 1

    @property
    def hermitian(self) -> bool:
        return self.u == 2


class ParameterError(ValueError):
    pass


class LayoutError(ValueError):
    """A coefficient vector that is not the image of any message."""


@dataclass(frozen=True)
class CodeSpec:
    family: Family
    ctx: FieldCtx
    d: int
    k: int
    basis: EvalBasis
    eta: Optional[int] = None
    kappa: int = 0
    e: int = 0
    m: int = 0

    @property
    def n(self) -> int:
        return self.ctx.n

    @property
    def u(self) -> int:
        return self.ctx.u

    @property
    def q(self) -> int:
        return self.ctx.q

    @property
    def radius(self) -> int:
        """Unique decoding radius floor((d-1)/2)."""
        return (self.d - 1) // 2

    @property
    def message_degree(self) -> int:
        """Degree over F_p of the field message symbols live in (F_{q^n})."""
        return self.ctx.s * self.ctx.n

    @property
    def rank_degree(self) -> int:
        """Degree over F_p of F_{q^u}, the field ranks are measured over."""
        return self.ctx.s * self.ctx.u

    @property
    def window_start(self) -> int:
        """First index of the d-1 cyclic positions where ft is always zero."""
        n = self.n
        if self.family is Family.SYMMETRIC:
            return self.k % n
        if self.family is Family.ALTERNATING:
            return (n - self.e + 1) % n
        if self.family is Family.HERMITIAN_MIXED:
            return self.kappa % n
        return (self.m + self.kappa + 1) % n

    def window_indices(self) -> list[int]:
        return [(self.window_start + i) % self.n for i in range(self.d - 1)]

    @property
    def bound_exponent(self) -> int:
        """log_q of the size bound this code meets."""
        n, d = self.n, self.d
        if self.family is Family.SYMMETRIC:
            return n * (n - d + 2) // 2
        if self.family is Family.ALTERNATING:
            half = n // 2
            return n * (n - 1) // (2 * half) * (half - self.e + 1)
        return n * (n - d + 1)


def make_code_spec(family: Family | str, p: int, s: int, n: int, d: int, *,
                   basis: Optional[Sequence[int]] = None,
                   eta: Optional[int] = None,
                   modulus: Optional[Sequence[int]] = None) -> CodeSpec:
    """Validate parameters and build a code with its cached Moore inverse.

    ``basis`` defaults to the normal basis of the first normal element;
    ``eta`` (Hermitian only) defaults to the first element outside F_{q^n}.
    """
    family = Family(family)
    if not 1 <= d <= n:
        raise ParameterError(f"need 1 <= d <= n, got n={n}, d={d}")
    kappa = e = m = 0
    if family is Family.SYMMETRIC:
        if (n - d) % 2:
            raise ParameterError(
                "symmetric codes need n-d even; the n-d odd codes come from "
                "puncturing and are not supported")
        k = (n - d + 2) // 2
    elif family is Family.ALTERNATING:
        if n % 2 == 0:
            raise ParameterError("alternating codes need n odd")
        if d % 2 or not 2 <= d <= n - 1:
            raise ParameterError("alternating codes need d = 2e with 2 <= d <= n-1")
        e = d // 2
        k = (n - d + 1) // 2
    elif family is Family.HERMITIAN_MIXED:
        if (n - d) % 2 == 0:
            raise ParameterError("this Hermitian family needs n and d of opposite parity")
        kappa = (n - d + 1) // 2
        k = 2 * kappa
    else:
        if n % 2 == 0 or d % 2 == 0:
            raise ParameterError("this Hermitian family needs n and d odd")
        m = (n + 1) // 2
        kappa = (n - d) // 2
        k = 2 * kappa + 1

    ctx = make_field(p, s, n, family.u, modulus)
    if basis is None:
        basis = normal_basis(ctx, find_normal_element(ctx))
    shift = 1 if family is Family.HERMITIAN_MIXED else 0
    try:
        eb = make_eval_basis(ctx, basis, shift)
    except ValueError as exc:
        raise ParameterError(str(exc)) from None

    if family.hermitian:
        if eta is None:
            eta = next(a for a in range(ctx.order)
                       if not ctx.in_subfield(a, s * n))
        if not 0 <= eta < ctx.order or ctx.in_subfield(eta, s * n):
            raise ParameterError("eta must lie outside F_{q^n}")
    else:
        eta = None
    return CodeSpec(family, ctx, d, k, eb, eta, kappa, e, m)


# --------------------------------------------------------------------------
# layouts
# --------------------------------------------------------------------------

def _check_message(spec: CodeSpec, f: Sequence[int]) -> None:
    if len(f) != spec.k:
        raise LayoutError(f"message must have {spec.k} symbols, got {len(f)}")
    ctx = spec.ctx
    for a in f:
        if not 0 <= a < ctx.order:
            raise LayoutError(f"symbol {a} is not a field element")
        if spec.family.hermitian and not ctx.in_subfield(a, spec.message_degree):
            raise LayoutError(f"message symbol {a} is not in F_(q^n)")


def _combine(spec: CodeSpec, a: int, b: int) -> int:
    return spec.ctx.add(a, spec.ctx.mul(spec.eta, b))


def _split(spec: CodeSpec, c: int) -> tuple[int, int]:
    """Coordinates (a, b) of c = a + eta*b with a, b in F_{q^n}."""
    ctx = spec.ctx
    conj = lambda x: ctx.frobenius(x, ctx.n)  # generator of Gal(F_q^2n / F_q^n)
    b = ctx.div(ctx.sub(c, conj(c)), ctx.sub(spec.eta, conj(spec.eta)))
    a = ctx.sub(c, ctx.mul(spec.eta, b))
    return a, b


def expand_message(spec: CodeSpec, f: Sequence[int]) -> list[int]:
    """Coefficient vector ft of the codeword polynomial for message f."""
    _check_message(spec, f)
    ctx, n, fam = spec.ctx, spec.n, spec.family
    ft = [0] * n
    if fam is Family.SYMMETRIC:
        ft[0] = f[0]
        for j in range(1, spec.k):
            ft[j] = f[j]
            ft[n - j] = ctx.frobenius(f[j], n - j)
    elif fam is Family.ALTERNATING:
        e = spec.e
        for j in range(spec.k):
            ft[e + j] = f[j]
            ft[n - e - j] = ctx.neg(ctx.frobenius(f[j], n - e - j))
    elif fam is Family.HERMITIAN_MIXED:
        kappa = spec.kappa
        for j in range(kappa):
            c = _combine(spec, f[j], f[kappa + j])
            ft[n - 1 - j] = ctx.frobenius(c, 1)
            ft[j] = ctx.frobenius(c, 2 * j + 2)
    else:
        m, kappa = spec.m, spec.kappa
        ft[m % n] = ctx.frobenius(f[0], 2 * m)
        for j in range(1, kappa + 1):
            c = _combine(spec, f[j], f[kappa + j])
            ft[m - j] = ctx.frobenius(c, 1)
            ft[(m + j) % n] = ctx.frobenius(c, 2 * (m + j))
    return ft


def compress_message(spec: CodeSpec, ft: Sequence[int]) -> list[int]:
    """Inverse of :func:`expand_message`.

    Raises :class:`LayoutError` when ft has a nonzero entry where the layout
    forces zero or violates its conjugate symmetry.
    """
    ctx, n, fam = spec.ctx, spec.n, spec.family
    if len(ft) != n:
        raise LayoutError(f"coefficient vector must have length {n}")
    for i in spec.window_indices():
        if ft[i]:
            raise LayoutError(f"coefficient {i} must be zero")

    def expect(i: int, value: int) -> None:
        if ft[i % n] != value:
            raise LayoutError(f"coefficient {i % n} breaks the layout symmetry")

    if fam is Family.SYMMETRIC:
        f = [ft[j] for j in range(spec.k)]
        for j in range(1, spec.k):
            expect(n - j, ctx.frobenius(f[j], n - j))
        return f
    if fam is Family.ALTERNATING:
        e = spec.e
        f = [ft[e + j] for j in range(spec.k)]
        for j in range(spec.k):
            expect(n - e - j, ctx.neg(ctx.frobenius(f[j], n - e - j)))
        return f

    kappa = spec.kappa
    f = [0] * spec.k
    if fam is Family.HERMITIAN_MIXED:
        for j in range(kappa):
            c = ctx.frobenius(ft[n - 1 - j], -1)
            expect(j, ctx.frobenius(c, 2 * j + 2))
            f[j], f[kappa + j] = _split(spec, c)
        return f
    m = spec.m
    f0 = ctx.frobenius(ft[m % n], -2 * m)
    if not ctx.in_subfield(f0, spec.message_degree):
        raise LayoutError(f"coefficient {m % n} is not a conjugate of an F_(q^n) element")
    f[0] = f0
    for j in range(1, kappa + 1):
        c = ctx.frobenius(ft[m - j], -1)
        expect(m + j, ctx.frobenius(c, 2 * (m + j)))
        f[j], f[kappa + j] = _split(spec, c)
    return f


def encode(spec: CodeSpec, f: Sequence[int]) -> list[int]:
    return codeword_from_coeffs(spec, expand_message(spec, f))


def codeword_from_coeffs(spec: CodeSpec, ft: Sequence[int]) -> list[int]:
    """ft M^T, i.e. the polynomial with coefficients ft at the evaluation points."""
    return linalg.matvec(spec.ctx, spec.basis.moore, ft)


def coeffs_from_word(spec: CodeSpec, r: Sequence[int]) -> list[int]:
    """r (M^T)^-1: coefficients of the polynomial interpolating r."""
    if len(r) != spec.n:
        raise ValueError(f"word must have length {spec.n}, got {len(r)}")
    return linalg.matvec(spec.ctx, spec.basis.moore_inv, r)


# --------------------------------------------------------------------------
# matrix forms
# --------------------------------------------------------------------------

def codeword_matrix(spec: CodeSpec, c: Sequence[int]) -> linalg.Matrix:
    """Gram matrix A(i, j) = Tr(conj(alpha_j) * c_i) of the form behind c.

    The trace goes down to F_{q^u}; conj is the q-power for Hermitian codes
    and the identity otherwise.
    """
    ctx = spec.ctx
    alphas = spec.basis.points
    if spec.family.hermitian:
        alphas = [ctx.frobenius(a, 1) for a in alphas]
    deg = spec.rank_degree
    return [[ctx.trace(ctx.mul(a, ci), deg) for a in alphas] for ci in c]


def to_matrix_form(spec: CodeSpec, f: Sequence[int]) -> linalg.Matrix:
    return codeword_matrix(spec, encode(spec, f))


def codeword_from_matrix(spec: CodeSpec, A: Sequence[Sequence[int]]) -> list[int]:
    """Recover c from its Gram matrix with the (Hermitian) dual basis."""
    from .bases import dual_basis, hermitian_dual_basis

    ctx = spec.ctx
    points = list(spec.basis.points)
    dual = hermitian_dual_basis(ctx, points) if spec.family.hermitian \
        else dual_basis(ctx, points)
    return [ctx.dot(dual, row) for row in A]


def conjugate_transpose(spec: CodeSpec, A: Sequence[Sequence[int]]) -> linalg.Matrix:
    return [[spec.ctx.frobenius(x, 1) for x in col] for col in zip(*A)]


def has_family_shape(spec: CodeSpec, A: Sequence[Sequence[int]]) -> bool:
    """Symmetric, alternating (zero diagonal, A^T = -A) or Hermitian as required."""
    ctx = spec.ctx
    n = len(A)
    if spec.family is Family.SYMMETRIC:
        return all(A[i][j] == A[j][i] for i in range(n) for j in range(n))
    if spec.family is Family.ALTERNATING:
        return (all(A[i][i] == 0 for i in range(n)) and
                all(A[i][j] == ctx.neg(A[j][i]) for i in range(n) for j in range(n)))
    return [list(r) for r in A] == conjugate_transpose(spec, A)


def random_message(spec: CodeSpec, rng: random.Random) -> list[int]:
    return [spec.ctx.random_subfield_element(rng, spec.message_degree)
            for _ in range(spec.k)]
