"""Finite fields GF(p^m) defined by a caller-supplied irreducible modulus.

Elements are integers encoding the polynomial-basis coefficient vector
(base-p digits, least significant digit = constant term).  For p = 2 and
q <= 2^20 multiplication runs over precomputed log/antilog tables shared
with the numba kernels; larger binary fields fall back to shift-and-xor
reduction, odd characteristic to generic polynomial arithmetic.

Only characteristic 2 is exercised heavily; the odd-p path exists because
the product construction is stated over GF(p^n).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import errors
from ._kernels import _build_exp_table

TABLE_LIMIT = 1 << 20  # above this, binary fields use carry-less reduction


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


# ---------------------------------------------------------------------------
# polynomial helpers over GF(2), int encoded (bit i = coefficient of x^i)
# ---------------------------------------------------------------------------


def _deg2(f: int) -> int:
    return f.bit_length() - 1


def _polymod2(f: int, g: int) -> int:
    dg = _deg2(g)
    while _deg2(f) >= dg:
        f ^= g << (_deg2(f) - dg)
    return f


def _is_irreducible2(f: int, m: int) -> bool:
    # trial division by every monic polynomial of degree 1..m//2
    if f & 1 == 0:  # root at 0
        return False
    for d in range(1, m // 2 + 1):
        for g in range(1 << d, 1 << (d + 1)):
            if _polymod2(f, g) == 0:
                return False
    return True


# generic (odd p) polynomial helpers, coefficient tuples ascending


def _trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _polymod_p(f, g, p):
    f = list(f)
    dg = len(g) - 1
    glead_inv = pow(g[-1], -1, p)
    while len(f) - 1 >= dg and len(f) > 0:
        if f[-1] == 0:
            f.pop()
            continue
        shift = len(f) - 1 - dg
        factor = (f[-1] * glead_inv) % p
        for i, gc in enumerate(g):
            f[shift + i] = (f[shift + i] - factor * gc) % p
        f = list(_trim(f))
    return _trim(f)


def _is_irreducible_p(coeffs, p):
    m = len(coeffs) - 1
    if coeffs[0] == 0:
        return False
    for d in range(1, m // 2 + 1):
        # all monic degree-d polynomials
        for idx in range(p**d):
            g = []
            v = idx
            for _ in range(d):
                g.append(v % p)
                v //= p
            g.append(1)
            if not _polymod_p(coeffs, tuple(g), p):
                return False
    return True


def is_irreducible(p: int, coeffs) -> bool:
    """Exhaustive factor search; intended for degrees up to 20."""
    coeffs = tuple(int(c) % p for c in coeffs)
    if p == 2:
        f = 0
        for i, c in enumerate(coeffs):
            f |= c << i
        return _is_irreducible2(f, len(coeffs) - 1)
    return _is_irreducible_p(coeffs, p)


def irreducible_polynomials(p: int, m: int):
    """Yield all monic irreducible degree-m coefficient tuples (ascending)."""
    if p == 2:
        for f in range(1 << m, 1 << (m + 1)):
            if _is_irreducible2(f, m):
                yield tuple((f >> i) & 1 for i in range(m + 1))
    else:
        for idx in range(p**m):
            g = []
            v = idx
            for _ in range(m):
                g.append(v % p)
                v //= p
            g.append(1)
            if _is_irreducible_p(tuple(g), p):
                yield tuple(g)


class FieldSpec:
    """GF(p^m) with a fixed irreducible modulus.

    Immutable after construction; raw operations take and return plain
    ints, `element` wraps them for operator syntax.
    """

    def __init__(self, p: int, m: int, modulus):
        if not _is_prime(p):
            raise errors.BadParams(f"characteristic {p} is not prime")
        modulus = tuple(int(c) % p for c in modulus)
        if m < 1 or m > 20 or p**m > (TABLE_LIMIT if p == 2 else 1 << 16):
            raise errors.InvalidDegree(f"degree m={m} outside supported range")
        if len(modulus) != m + 1 or modulus[-1] != 1:
            raise errors.InvalidDegree(
                f"modulus must be monic of degree {m}, got {modulus}"
            )
        if not is_irreducible(p, modulus):
            raise errors.ReducibleModulus(f"modulus {modulus} factors over GF({p})")
        self.p = p
        self.m = m
        self.modulus = modulus
        self.q = p**m
        self.order = self.q - 1
        if p == 2:
            self.modulus_int = 0
            for i, c in enumerate(modulus):
                self.modulus_int |= c << i
            self._build_tables_2()
        else:
            self._mul_memo = {}

    # -- characteristic-2 fast path ----------------------------------------

    def _build_tables_2(self):
        q = self.q
        exp_t = np.zeros(2 * (q - 1), dtype=np.uint32)
        order = int(_build_exp_table(self.modulus_int, self.m, exp_t))
        if order != q - 1:
            # x is not primitive: walk the group with a primitive element
            g = self._find_generator()
            v = 1
            for i in range(q - 1):
                exp_t[i] = v
                v = self._clmul(v, g)
        exp_t[q - 1 : 2 * (q - 1)] = exp_t[: q - 1]
        log_t = np.zeros(q, dtype=np.uint32)
        log_t[exp_t[: q - 1]] = np.arange(q - 1, dtype=np.uint32)
        self.exp_table = exp_t
        self.log_table = log_t
        self.exp_table.flags.writeable = False
        self.log_table.flags.writeable = False

    def _clmul(self, a: int, b: int) -> int:
        top = 1 << self.m
        r = 0
        while b:
            if b & 1:
                r ^= a
            a <<= 1
            if a & top:
                a ^= self.modulus_int
            b >>= 1
        return r

    def _pow_clmul(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self._clmul(r, a)
            a = self._clmul(a, a)
            e >>= 1
        return r

    def _find_generator(self) -> int:
        n = self.order
        factors = []
        v = n
        d = 2
        while d * d <= v:
            if v % d == 0:
                factors.append(d)
                while v % d == 0:
                    v //= d
            d += 1
        if v > 1:
            factors.append(v)
        for g in range(2, self.q):
            if all(self._pow_clmul(g, n // f) != 1 for f in factors):
                return g
        raise AssertionError("no generator found in a field")

    # -- raw integer operations --------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        return self._digits_op(a, b, 1)

    def sub(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        return self._digits_op(a, b, -1)

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        return self._digits_op(0, a, -1)

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.p == 2:
            return int(
                self.exp_table[int(self.log_table[a]) + int(self.log_table[b])]
            )
        return self._mul_p(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise errors.DivByZero("inverse of zero")
        if self.p == 2:
            return int(self.exp_table[self.order - int(self.log_table[a])])
        return self.pow(a, self.order - 1)

    def div(self, a: int, b: int) -> int:
        if b == 0:
            raise errors.DivByZero("division by zero")
        if a == 0:
            return 0
        if self.p == 2:
            return int(
                self.exp_table[
                    int(self.log_table[a]) + self.order - int(self.log_table[b])
                ]
            )
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            if a == 0:
                raise errors.DivByZero("0 ** negative")
            a = self.inv(a)
            e = -e
        if a == 0:
            return 0 if e else 1
        if self.p == 2:
            return int(self.exp_table[(int(self.log_table[a]) * e) % self.order])
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    def frobenius(self, a: int, i: int = 1) -> int:
        """a ** (p^i); i taken mod m (Galois group is cyclic of order m)."""
        return self.pow(a, self.p ** (i % self.m))

    def log(self, a: int) -> int:
        if a == 0:
            raise errors.DivByZero("log of zero")
        if self.p != 2:
            raise errors.UnsupportedParams("log tables exist for p=2 only")
        return int(self.log_table[a])

    def antilog(self, i: int) -> int:
        if self.p != 2:
            raise errors.UnsupportedParams("log tables exist for p=2 only")
        return int(self.exp_table[i % self.order])

    # -- odd-characteristic helpers ------------------------------------------

    def _digits(self, a: int):
        out = []
        for _ in range(self.m):
            out.append(a % self.p)
            a //= self.p
        return out

    def _undigits(self, ds) -> int:
        v = 0
        for d in reversed(ds):
            v = v * self.p + d
        return v

    def _digits_op(self, a: int, b: int, sign: int) -> int:
        da, db = self._digits(a), self._digits(b)
        return self._undigits([(x + sign * y) % self.p for x, y in zip(da, db)])

    def _mul_p(self, a: int, b: int) -> int:
        key = (a, b) if a <= b else (b, a)
        hit = self._mul_memo.get(key)
        if hit is not None:
            return hit
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * self.m - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % self.p
        rem = _polymod_p(tuple(prod), self.modulus, self.p)
        v = self._undigits(list(rem) + [0] * (self.m - len(rem)))
        if len(self._mul_memo) < 1 << 16:
            self._mul_memo[key] = v
        return v

    # -- API ------------------------------------------------------------------

    @property
    def x(self) -> "FieldElement":
        """The class of the indeterminate (the modulus root)."""
        return FieldElement(self, self.p if self.m > 1 else self.p % self.q)

    def element(self, value: int) -> "FieldElement":
        if not 0 <= value < self.q:
            raise errors.BadParams(f"element {value} outside [0, {self.q})")
        return FieldElement(self, value)

    def __eq__(self, other):
        return (
            isinstance(other, FieldSpec)
            and self.p == other.p
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.p, self.modulus))

    def __repr__(self):
        return f"FieldSpec(GF({self.p}^{self.m}), modulus={list(self.modulus)})"


@dataclass(frozen=True)
class FieldElement:
    spec: FieldSpec
    value: int

    def _check(self, other) -> "FieldElement":
        if not isinstance(other, FieldElement):
            other = self.spec.element(int(other))
        if other.spec != self.spec:
            raise errors.FieldMismatch("elements from different fields")
        return other

    def __add__(self, other):
        other = self._check(other)
        return FieldElement(self.spec, self.spec.add(self.value, other.value))

    def __sub__(self, other):
        other = self._check(other)
        return FieldElement(self.spec, self.spec.sub(self.value, other.value))

    def __mul__(self, other):
        other = self._check(other)
        return FieldElement(self.spec, self.spec.mul(self.value, other.value))

    def __truediv__(self, other):
        other = self._check(other)
        return FieldElement(self.spec, self.spec.div(self.value, other.value))

    def __pow__(self, e: int):
        return FieldElement(self.spec, self.spec.pow(self.value, e))

    def __neg__(self):
        return FieldElement(self.spec, self.spec.neg(self.value))

    def __int__(self):
        return self.value

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"GF({self.spec.q}):{self.value:#x}"


def field_new(p: int, m: int, modulus) -> FieldSpec:
    """Build a field spec; raises ReducibleModulus / InvalidDegree."""
    return FieldSpec(p, m, modulus)


def arith(a: FieldElement, b: FieldElement, op: str) -> FieldElement:
    """Dispatch form of the binary operations (add, sub, mul, div)."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise errors.BadParams(f"unknown op {op!r}")


def element_pow(a: FieldElement, e: int) -> FieldElement:
    return a**e


@lru_cache(maxsize=64)
def _cached_field(p: int, m: int, modulus: tuple) -> FieldSpec:
    return FieldSpec(p, m, modulus)


def gf2m(m: int, modulus) -> FieldSpec:
    """Cached constructor for the common GF(2^m) case."""
    return _cached_field(2, m, tuple(int(c) & 1 for c in modulus))
