"""Finite fields GF(p^a) with table-driven arithmetic.

Elements are plain integers in ``[0, q)``.  The integer ``sum(c_i * p**i)``
encodes the polynomial ``sum(c_i * alpha**i)`` modulo the field's defining
polynomial, so ``0`` is zero, ``1`` is one and codes give a total order on
the field that every normalization downstream relies on.

For square fields GF(t^2) the conjugation ``x -> x**t`` and the norm
``x -> x**(t+1)`` are available.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

import numpy as np

__all__ = [
    "FieldSpec",
    "FieldElement",
    "make_field",
    "is_prime",
    "prime_power",
]

_MAX_ORDER = 1 << 16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_power(n: int) -> tuple[int, int] | None:
    """Return ``(p, e)`` with ``p**e == n``, or None if n is not a prime power."""
    if n < 2:
        return None
    for p in range(2, n + 1):
        if n % p == 0:
            if not is_prime(p):
                return None
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            return (p, e) if n == 1 else None
    return None


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# -- polynomials over F_p, coefficient lists low degree first -----------------

def _poly_mod(num: list[int], den: list[int], p: int) -> list[int]:
    num = list(num)
    inv_lead = pow(den[-1], p - 2, p)
    while len(num) >= len(den):
        factor = num[-1] * inv_lead % p
        shift = len(num) - len(den)
        for i, c in enumerate(den):
            num[shift + i] = (num[shift + i] - factor * c) % p
        num.pop()
        while num and num[-1] == 0:
            num.pop()
    return num


def _monics(p: int, degree: int):
    """Monic polynomials of a given degree, low-degree-first lexicographic order."""
    # itertools.product varies the last slot fastest; reverse so c_0 is the slowest
    for tail in itertools.product(range(p), repeat=degree):
        yield list(reversed(tail)) + [1]


def is_irreducible(poly: list[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    deg = len(poly) - 1
    for d in range(1, deg // 2 + 1):
        for m in _monics(p, d):
            if not _poly_mod(poly, m, p):
                return False
    return True


def _smallest_irreducible(p: int, a: int) -> tuple[int, ...]:
    if a == 1:
        return (0, 1)
    candidates = sorted(_monics(p, a))  # list comparison is low-degree-first
    for poly in candidates:
        if poly[0] != 0 and is_irreducible(poly, p):
            return tuple(poly)
    raise ArithmeticError(f"no irreducible polynomial of degree {a} over F_{p}")


class FieldSpec:
    """The field GF(p^a).

    Arithmetic is done on integer codes through log/antilog tables for the
    multiplicative group and a digit-wise addition table.  Instances are
    immutable once built and safe to share between threads.
    """

    def __init__(self, p: int, a: int, modulus: tuple[int, ...]):
        self.p = p
        self.a = a
        self.q = p**a
        self.modulus = modulus
        self.t = None
        if a % 2 == 0:
            self.t = p ** (a // 2)

        q = self.q
        self._digits = [self._to_digits(x) for x in range(q)]
        self._add = [[self._from_digits([(u + v) % p for u, v in zip(self._digits[x], self._digits[y])])
                      for y in range(q)] for x in range(q)]
        self._neg = [self._from_digits([(-u) % p for u in self._digits[x]]) for x in range(q)]

        self.generator = self._find_generator()
        self._exp = [0] * (2 * (q - 1))
        self._log = [0] * q
        x = 1
        for i in range(q - 1):
            self._exp[i] = x
            self._log[x] = i
            x = self._slow_mul(x, self.generator)
        for i in range(q - 1, 2 * (q - 1)):
            self._exp[i] = self._exp[i - (q - 1)]

    def __repr__(self) -> str:
        return f"GF({self.q})"

    def __eq__(self, other) -> bool:
        return isinstance(other, FieldSpec) and (self.p, self.a, self.modulus) == (
            other.p, other.a, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.a, self.modulus))

    # -- construction helpers ----------------------------------------------

    def _to_digits(self, x: int) -> list[int]:
        out = []
        for _ in range(self.a):
            x, r = divmod(x, self.p)
            out.append(r)
        return out

    def _from_digits(self, digits) -> int:
        x = 0
        for d in reversed(list(digits)):
            x = x * self.p + d
        return x

    def _slow_mul(self, x: int, y: int) -> int:
        p, a = self.p, self.a
        u, v = self._digits[x], self._digits[y]
        prod = [0] * (2 * a - 1)
        for i, ui in enumerate(u):
            if ui:
                for j, vj in enumerate(v):
                    prod[i + j] = (prod[i + j] + ui * vj) % p
        while prod and prod[-1] == 0:
            prod.pop()
        rem = _poly_mod(prod, list(self.modulus), p)
        return self._from_digits(rem + [0] * (a - len(rem)))

    def _slow_pow(self, x: int, e: int) -> int:
        result = 1
        while e:
            if e & 1:
                result = self._slow_mul(result, x)
            x = self._slow_mul(x, x)
            e >>= 1
        return result

    def _find_generator(self) -> int:
        if self.q == 2:
            return 1
        factors = _prime_factors(self.q - 1)
        for g in range(2, self.q):
            if all(self._slow_pow(g, (self.q - 1) // r) != 1 for r in factors):
                return g
        raise ArithmeticError("multiplicative group has no generator")

    # -- scalar arithmetic on codes ------------------------------------------

    def elements(self) -> range:
        return range(self.q)

    def _check(self, *xs: int) -> None:
        for x in xs:
            if not 0 <= x < self.q:
                raise ValueError(f"{x} is not an element of {self!r}")

    def add(self, x: int, y: int) -> int:
        return self._add[x][y]

    def sub(self, x: int, y: int) -> int:
        return self._add[x][self._neg[y]]

    def neg(self, x: int) -> int:
        return self._neg[x]

    def mul(self, x: int, y: int) -> int:
        if x == 0 or y == 0:
            return 0
        return self._exp[self._log[x] + self._log[y]]

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("zero has no inverse")
        return self._exp[(self.q - 1 - self._log[x]) % (self.q - 1)]

    def div(self, x: int, y: int) -> int:
        return self.mul(x, self.inv(y))

    def pow(self, x: int, e: int) -> int:
        if x == 0:
            if e < 0:
                raise ZeroDivisionError("zero has no inverse")
            return 1 if e == 0 else 0
        return self._exp[(self._log[x] * e) % (self.q - 1)]

    def arith(self, op: str, x, y):
        """Dispatch ``add|sub|mul|inv|pow`` on codes or FieldElements.

        ``y`` is an exponent for ``pow`` and ignored for ``inv``.
        """
        wrap = isinstance(x, FieldElement)
        if wrap:
            if x.field != self:
                raise ValueError("element belongs to a different field")
            x = x.code
        if isinstance(y, FieldElement):
            if y.field != self:
                raise ValueError("element belongs to a different field")
            y = y.code
        if op == "pow":
            self._check(x)
            out = self.pow(x, int(y))
        elif op == "inv":
            self._check(x)
            out = self.inv(x)
        elif op in ("add", "sub", "mul"):
            self._check(x, y)
            out = getattr(self, op)(x, y)
        else:
            raise ValueError(f"unknown operation {op!r}")
        return FieldElement(self, out) if wrap else out

    def log(self, x: int) -> int:
        if x == 0:
            raise ValueError("log of zero")
        return self._log[x]

    def exp(self, i: int) -> int:
        return self._exp[i % (self.q - 1)]

    def _require_square(self) -> int:
        if self.t is None:
            raise ValueError(f"{self!r} is not a square extension")
        return self.t

    def conjugate(self, x: int) -> int:
        """``x**t``; an involutive field automorphism of GF(t^2)."""
        return self.pow(x, self._require_square())

    def norm(self, x: int) -> int:
        """``x**(t+1)``, which lands in the subfield GF(t)."""
        return self.pow(x, self._require_square() + 1)

    def digits(self, x: int) -> list[int]:
        return list(self._digits[x])

    def element(self, code: int) -> FieldElement:
        self._check(code)
        return FieldElement(self, code)

    # -- numpy tables for the vectorized kernels -----------------------------

    @cached_property
    def add_table(self) -> np.ndarray:
        return np.array(self._add, dtype=np.int64)

    @cached_property
    def mul_table(self) -> np.ndarray:
        q = self.q
        return np.array([[self.mul(x, y) for y in range(q)] for x in range(q)], dtype=np.int64)

    @cached_property
    def neg_table(self) -> np.ndarray:
        return np.array(self._neg, dtype=np.int64)

    @cached_property
    def inv_table(self) -> np.ndarray:
        """Inverse table; entry 0 is 0 as a sentinel."""
        return np.array([0] + [self.inv(x) for x in range(1, self.q)], dtype=np.int64)

    @cached_property
    def digit_table(self) -> np.ndarray:
        """(q, a) array of base-p digits, low digit first."""
        return np.array(self._digits, dtype=np.int64)

    @cached_property
    def conj_table(self) -> np.ndarray:
        return np.array([self.conjugate(x) for x in range(self.q)], dtype=np.int64)

    @cached_property
    def norm_table(self) -> np.ndarray:
        return np.array([self.norm(x) for x in range(self.q)], dtype=np.int64)

    def vec_add(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return self.add_table[x, y]

    def vec_mul(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return self.mul_table[x, y]


@dataclass(frozen=True)
class FieldElement:
    """A field element carrying its field; convenient for interactive use."""

    field: FieldSpec
    code: int

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError("elements belong to different fields")
            return other.code
        self.field._check(int(other))
        return int(other)

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.code, self._other(other)))

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.code, self._other(other)))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.code, self._other(other)))

    __radd__ = __add__
    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.code))

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.div(self.code, self._other(other)))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.code, e))

    def inverse(self) -> FieldElement:
        return FieldElement(self.field, self.field.inv(self.code))

    def conjugate(self) -> FieldElement:
        return FieldElement(self.field, self.field.conjugate(self.code))

    def norm(self) -> FieldElement:
        return FieldElement(self.field, self.field.norm(self.code))

    def __int__(self) -> int:
        return self.code

    def __repr__(self) -> str:
        return f"{self.field!r}({self.code})"


_FIELD_CACHE: dict[tuple[int, int], FieldSpec] = {}


def make_field(p: int, a: int) -> FieldSpec:
    """Build (or fetch the cached) GF(p^a).

    The defining polynomial is the lexicographically smallest monic
    irreducible of degree ``a`` with coefficients compared low degree first.
    """
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"characteristic must be prime, got {p!r}")
    if not isinstance(a, int) or a < 1:
        raise ValueError(f"extension degree must be >= 1, got {a!r}")
    if p**a > _MAX_ORDER:
        raise OverflowError(f"GF({p}^{a}) is too large for table arithmetic")
    key = (p, a)
    if key not in _FIELD_CACHE:
        _FIELD_CACHE[key] = FieldSpec(p, a, _smallest_irreducible(p, a))
    return _FIELD_CACHE[key]


def square_field(t: int) -> FieldSpec:
    """GF(t^2) for a prime power t."""
    pe = prime_power(t)
    if pe is None:
        raise ValueError(f"t={t} is not a prime power")
    p, e = pe
    return make_field(p, 2 * e)
