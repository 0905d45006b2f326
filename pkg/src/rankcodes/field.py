"""Finite field towers F_p <= F_q <= F_{q^n} (<= F_{q^{2n}}).

Elements are plain ints.  The base-p digits of an element (little-endian)
are its coordinates in the monomial basis 1, x, x^2, ... modulo the
defining polynomial of the top field, so in F_{2^7} the element x^3 + x
is the integer 10.  Subfield elements are top-field elements fixed by the
appropriate Frobenius power; there is no separate representation.
"""

from __future__ import annotations

import functools
import itertools
import random
from typing import Iterator, Optional, Sequence

Element = int

# fields up to this order get exp/log tables for multiplication
_TABLE_LIMIT = 1 << 16
# discrete-log rendering ("z^k") is offered up to this order
_LOG_LIMIT = 1 << 20


class FieldError(ValueError):
    pass


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def prime_factors(m: int) -> list[int]:
    """Distinct prime factors of m, ascending."""
    out = []
    i = 2
    while i * i <= m:
        if m % i == 0:
            out.append(i)
            while m % i == 0:
                m //= i
        i += 1
    if m > 1:
        out.append(m)
    return out


# --------------------------------------------------------------------------
# dense polynomials over F_p, little-endian coefficient lists
# --------------------------------------------------------------------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: list[int], m: list[int], p: int) -> list[int]:
    a = _trim(list(a))
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
        _trim(a)
    return a


def _poly_mulmod(a: list[int], b: list[int], m: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_mod(out, m, p)


def _poly_powmod(a: list[int], e: int, m: list[int], p: int) -> list[int]:
    result = [1]
    base = _poly_mod(a, m, p)
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, m, p)
        base = _poly_mulmod(base, base, m, p)
        e >>= 1
    return result


def _poly_sub(a: list[int], b: list[int], p: int) -> list[int]:
    out = [0] * max(len(a), len(b))
    for i, ai in enumerate(a):
        out[i] = ai
    for i, bi in enumerate(b):
        out[i] = (out[i] - bi) % p
    return _trim(out)


def _poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _poly_mod(a, b, p)
    return a


def is_irreducible(coeffs: Sequence[int], p: int) -> bool:
    """Rabin's irreducibility test for a polynomial over F_p.

    ``coeffs`` is little-endian and must have a nonzero leading term.
    """
    f = _trim([c % p for c in coeffs])
    m = len(f) - 1
    if m < 1:
        return False
    if m == 1:
        return True
    x = [0, 1]

    def frob_x(k: int) -> list[int]:
        h = x
        for _ in range(k):
            h = _poly_powmod(h, p, f, p)
        return h

    if _poly_sub(frob_x(m), x, p):
        return False
    for r in prime_factors(m):
        g = _poly_gcd(f, _poly_sub(frob_x(m // r), x, p), p)
        if len(g) > 1:
            return False
    return True


@functools.lru_cache(maxsize=None)
def find_irreducible(p: int, degree: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible polynomial of ``degree``.

    Candidates are x^degree + c(x) with c enumerated by its integer value,
    so the result is reproducible across runs.
    """
    for c in range(p**degree):
        coeffs = list(_digits(c, p, degree)) + [1]
        if is_irreducible(coeffs, p):
            return tuple(coeffs)
    raise FieldError(f"no irreducible polynomial of degree {degree} over F_{p}")


def _digits(a: int, p: int, width: int) -> list[int]:
    out = []
    for _ in range(width):
        a, r = divmod(a, p)
        out.append(r)
    return out


def _undigits(ds: Sequence[int], p: int) -> int:
    a = 0
    for d in reversed(ds):
        a = a * p + d
    return a


# --------------------------------------------------------------------------
# the field context
# --------------------------------------------------------------------------

class FieldCtx:
    """The tower F_p <= F_q <= F_{q^{un}} with q = p^s and u in {1, 2}.

    Instances are immutable and hashed by identity; use :func:`make_field`
    to get a cached instance per parameter set.
    """

    def __init__(self, p: int, s: int, n: int, u: int = 1,
                 modulus: Optional[Sequence[int]] = None) -> None:
        if not is_prime(p):
            raise FieldError(f"p={p} is not prime")
        if s < 1 or n < 1 or u not in (1, 2):
            raise FieldError(f"bad tower parameters s={s}, n={n}, u={u}")
        degree = s * n * u
        if modulus is None:
            modulus = find_irreducible(p, degree)
        modulus = tuple(int(c) % p for c in modulus)
        while len(modulus) > 1 and modulus[-1] == 0:
            modulus = modulus[:-1]
        if len(modulus) - 1 != degree:
            raise FieldError(
                f"modulus has degree {len(modulus) - 1}, expected {degree}")
        if modulus[-1] != 1:
            raise FieldError("modulus must be monic")
        if not is_irreducible(modulus, p):
            raise FieldError("modulus is reducible over F_%d" % p)

        self.p = p
        self.s = s
        self.n = n
        self.u = u
        self.degree = degree
        self.q = p**s
        self.order = p**degree
        self.modulus = modulus
        self._modlist = list(modulus)
        self._modint = _undigits(modulus, p)
        self._exp: Optional[list[int]] = None
        self._log: Optional[list[int]] = None
        if self.order <= _TABLE_LIMIT:
            self._build_tables()

    def __repr__(self) -> str:
        return (f"FieldCtx(p={self.p}, s={self.s}, n={self.n}, u={self.u}, "
                f"modulus={list(self.modulus)})")

    # -- raw arithmetic ---------------------------------------------------

    def _mul_raw(self, a: int, b: int) -> int:
        if self.p == 2:
            r = 0
            top = 1 << self.degree
            mod = self._modint
            while b:
                if b & 1:
                    r ^= a
                b >>= 1
                a <<= 1
                if a & top:
                    a ^= mod
            return r
        p, D = self.p, self.degree
        prod = _poly_mulmod(_digits(a, p, D), _digits(b, p, D), self._modlist, p)
        return _undigits(prod, p)

    def _pow_raw(self, a: int, e: int) -> int:
        result = 1
        while e:
            if e & 1:
                result = self._mul_raw(result, a)
            a = self._mul_raw(a, a)
            e >>= 1
        return result

    @functools.cached_property
    def primitive(self) -> int:
        """Smallest element (by integer value) generating the multiplicative group."""
        N = self.order - 1
        if N == 1:
            return 1
        factors = prime_factors(N)
        for g in range(2, self.order):
            if all(self._pow_raw(g, N // r) != 1 for r in factors):
                return g
        raise FieldError("no primitive element found")  # unreachable

    def _build_tables(self) -> None:
        N = self.order - 1
        g = self.primitive
        exp = [0] * (2 * N)
        log = [0] * self.order
        x = 1
        for i in range(N):
            exp[i] = x
            log[x] = i
            x = self._mul_raw(x, g)
        exp[N:] = exp[:N]
        self._exp, self._log = exp, log

    @property
    def has_log(self) -> bool:
        return self.order <= _LOG_LIMIT

    # -- public arithmetic ------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        p, D = self.p, self.degree
        return _undigits([(x + y) % p for x, y in
                          zip(_digits(a, p, D), _digits(b, p, D))], p)

    def sub(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        p, D = self.p, self.degree
        return _undigits([(x - y) % p for x, y in
                          zip(_digits(a, p, D), _digits(b, p, D))], p)

    def neg(self, a: int) -> int:
        return self.sub(0, a)

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self._exp is not None:
            return self._exp[self._log[a] + self._log[b]]
        return self._mul_raw(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in a finite field")
        if self._exp is not None:
            return self._exp[(self.order - 1 - self._log[a]) % (self.order - 1)]
        return self._pow_raw(a, self.order - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        N = self.order - 1
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 0
        e %= N
        if self._exp is not None:
            return self._exp[self._log[a] * e % N]
        return self._pow_raw(a, e)

    def scalar(self, c: int) -> int:
        """The prime-field element c mod p."""
        return c % self.p

    def sum(self, xs) -> int:
        acc = 0
        for x in xs:
            acc = self.add(acc, x)
        return acc

    def dot(self, xs: Sequence[int], ys: Sequence[int]) -> int:
        acc = 0
        for x, y in zip(xs, ys):
            if x and y:
                acc = self.add(acc, self.mul(x, y))
        return acc

    # -- Frobenius, traces, subfields -------------------------------------

    def frob_p(self, a: int, k: int) -> int:
        """a^(p^k) for any integer k (taken mod the top degree)."""
        k %= self.degree
        if k == 0 or a == 0:
            return a
        N = self.order - 1
        if self._exp is not None:
            return self._exp[self._log[a] * pow(self.p, k, N) % N]
        return self._pow_raw(a, self.p**k)

    def frobenius(self, a: int, i: int) -> int:
        """a^(q^i); negative i gives the inverse automorphism."""
        return self.frob_p(a, self.s * i)

    def _check_degree(self, deg: int) -> None:
        if deg < 1 or self.degree % deg:
            raise FieldError(f"{deg} does not divide the field degree {self.degree}")

    def rel_trace(self, a: int, from_deg: int, to_deg: int) -> int:
        """Trace from F_{p^from_deg} down to F_{p^to_deg}."""
        self._check_degree(from_deg)
        self._check_degree(to_deg)
        if from_deg % to_deg:
            raise FieldError(f"{to_deg} does not divide {from_deg}")
        acc = 0
        x = a
        for _ in range(from_deg // to_deg):
            acc = self.add(acc, x)
            x = self.frob_p(x, to_deg)
        assert self.in_subfield(acc, to_deg)
        return acc

    def trace(self, a: int, to_deg: int) -> int:
        return self.rel_trace(a, self.degree, to_deg)

    def in_subfield(self, a: int, deg: int) -> bool:
        self._check_degree(deg)
        return self.frob_p(a, deg) == a

    @functools.lru_cache(maxsize=None)
    def subfield_basis(self, deg: int) -> tuple[int, ...]:
        """An F_p-basis (1, y, ..., y^(deg-1)) of the subfield F_{p^deg}."""
        self._check_degree(deg)
        y = self.pow(self.primitive, (self.order - 1) // (self.p**deg - 1))
        out = [1]
        for _ in range(deg - 1):
            out.append(self.mul(out[-1], y))
        return tuple(out)

    def subfield_elements(self, deg: int) -> Iterator[int]:
        """All elements of F_{p^deg}, in a fixed order starting with 0."""
        basis = self.subfield_basis(deg)
        for coeffs in itertools.product(range(self.p), repeat=deg):
            acc = 0
            for c, b in zip(reversed(coeffs), basis):
                for _ in range(c):
                    acc = self.add(acc, b)
            yield acc

    def random_element(self, rng: random.Random) -> int:
        return rng.randrange(self.order)

    def random_subfield_element(self, rng: random.Random, deg: int) -> int:
        acc = 0
        for b in self.subfield_basis(deg):
            for _ in range(rng.randrange(self.p)):
                acc = self.add(acc, b)
        return acc

    # -- discrete logs and text form --------------------------------------

    @functools.cached_property
    def _log_tables(self) -> tuple[list[int], dict[int, int]]:
        if not self.has_log:
            raise FieldError("discrete-log tables are limited to fields of order <= 2^20")
        if self._exp is not None:
            N = self.order - 1
            return self._exp[:N], {v: i for i, v in enumerate(self._exp[:N])}
        g = self.primitive
        exp, log = [], {}
        x = 1
        for i in range(self.order - 1):
            exp.append(x)
            log[x] = i
            x = self._mul_raw(x, g)
        return exp, log

    def log(self, a: int) -> int:
        """Discrete log of a nonzero element to the base :attr:`primitive`."""
        if a == 0:
            raise ValueError("log of zero")
        return self._log_tables[1][a]

    def zpow(self, k: int) -> int:
        """primitive^k."""
        if self.has_log:
            exp = self._log_tables[0]
            return exp[k % len(exp)]
        return self.pow(self.primitive, k)

    def to_text(self, a: int, logs: bool = False) -> str:
        if not logs:
            return str(a)
        if a == 0:
            return "0"
        return f"z^{self.log(a)}"

    def from_text(self, text: str) -> int:
        text = text.strip()
        if text.startswith("z^"):
            return self.zpow(int(text[2:]))
        a = int(text)
        if not 0 <= a < self.order:
            raise FieldError(f"element {a} out of range for a field of order {self.order}")
        return a


@functools.lru_cache(maxsize=None)
def _cached_field(p: int, s: int, n: int, u: int,
                  modulus: Optional[tuple[int, ...]]) -> FieldCtx:
    return FieldCtx(p, s, n, u, modulus)


def make_field(p: int, s: int, n: int, u: int = 1,
               modulus: Optional[Sequence[int]] = None) -> FieldCtx:
    """Build (or fetch from cache) the field context for the given tower.

    Without ``modulus`` the lexicographically smallest irreducible polynomial
    of degree s*n*u over F_p is used.
    """
    if modulus is None:
        if not is_prime(p):
            raise FieldError(f"p={p} is not prime")
        modulus = find_irreducible(p, s * n * u)
    return _cached_field(p, s, n, u, tuple(int(c) for c in modulus))
