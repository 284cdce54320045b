"""Finite fields GF(p^m) with elements encoded as integers.

An element of GF(p^m) is the integer whose base-p digits are the
coefficients (lowest degree first) of its residue polynomial modulo the
field's modulus.  So in GF(16) with modulus x^4 + x + 1, the element ``2``
is ``x`` and ``8`` is ``x^3``.

Scalar arithmetic goes through log/antilog tables built once per field.
The ``v*`` methods are numpy-vectorised versions used by the brute-force
enumerators.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

MAX_FIELD_SIZE = 1 << 16
MAX_EXTENSION_DEGREE = 8

# Primitive polynomials over GF(2), coefficients lowest degree first.
DEFAULT_BINARY_MODULI = {
    1: (0, 1),
    2: (1, 1, 1),
    3: (1, 1, 0, 1),
    4: (1, 1, 0, 0, 1),
    5: (1, 0, 1, 0, 0, 1),
    6: (1, 1, 0, 0, 0, 0, 1),
    7: (1, 1, 0, 0, 0, 0, 0, 1),
    8: (1, 0, 1, 1, 1, 0, 0, 0, 1),
}


class FieldError(ValueError):
    pass


class ElementOutOfRange(FieldError):
    pass


class InverseOfZero(ZeroDivisionError):
    pass


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p**0.5) + 1))


def _poly_divmod_remainder(a: list[int], b: Sequence[int], p: int) -> list[int]:
    """Remainder of a / b over GF(p); b must be monic-normalisable."""
    a = list(a)
    db = len(b) - 1
    inv_lead = pow(b[-1], p - 2, p)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] * inv_lead % p
        if c:
            for j in range(db + 1):
                a[i - db + j] = (a[i - db + j] - c * b[j]) % p
    return a[:db]


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Exhaustive trial division by every monic polynomial of degree <= m/2."""
    poly = list(poly)
    while len(poly) > 1 and poly[-1] % p == 0:
        poly.pop()
    m = len(poly) - 1
    if m < 1:
        return False
    if m == 1:
        return True
    for d in range(1, m // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            divisor = list(low) + [1]
            if not any(_poly_divmod_remainder(poly, divisor, p)):
                return False
    return True


def _smallest_irreducible(p: int, m: int) -> tuple[int, ...]:
    for value in range(p**m):
        low = [(value // p**i) % p for i in range(m)]
        cand = tuple(low) + (1,)
        if low[0] and is_irreducible(cand, p):
            return cand
    raise FieldError(f"no irreducible polynomial of degree {m} over GF({p})")


def _factor_primes(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


@dataclass(frozen=True)
class FieldSpec:
    """GF(p^m) defined by an explicit modulus (lowest-degree coefficient first).

    For m = 1 the modulus is the polynomial ``x`` (``(0, 1)``), i.e. plain
    arithmetic mod p.
    """

    p: int
    m: int = 1
    modulus: tuple[int, ...] | None = None
    _exp: list[int] = field(init=False, repr=False, compare=False)
    _log: list[int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        p, m = self.p, self.m
        if not _is_prime(p):
            raise FieldError(f"characteristic {p} is not prime")
        if not 1 <= m <= MAX_EXTENSION_DEGREE:
            raise FieldError(f"extension degree {m} outside 1..{MAX_EXTENSION_DEGREE}")
        if p**m > MAX_FIELD_SIZE:
            raise FieldError(f"field size {p}^{m} exceeds {MAX_FIELD_SIZE}")
        if self.modulus is None:
            if m == 1:
                mod = (0, 1)
            elif p == 2:
                mod = DEFAULT_BINARY_MODULI[m]
            else:
                mod = _smallest_irreducible(p, m)
        else:
            mod = tuple(int(c) % p for c in self.modulus)
            while len(mod) > 1 and mod[-1] == 0:
                mod = mod[:-1]
            if len(mod) - 1 != m:
                raise FieldError(f"modulus {mod} does not have degree {m}")
            if not is_irreducible(mod, p):
                raise FieldError(f"modulus {mod} is reducible over GF({p})")
            inv = pow(mod[-1], p - 2, p)
            mod = tuple(c * inv % p for c in mod)
            if m == 1:
                # constants never see a linear modulus
                mod = (0, 1)
        object.__setattr__(self, "modulus", mod)
        self._build_tables()

    @classmethod
    def from_q(cls, q: int, modulus: Sequence[int] | None = None) -> "FieldSpec":
        for p in range(2, q + 1):
            if q % p == 0:
                break
        else:
            raise FieldError(f"invalid field size {q}")
        m, rest = 0, q
        while rest % p == 0:
            rest //= p
            m += 1
        if rest != 1:
            raise FieldError(f"{q} is not a prime power")
        return cls(p, m, None if modulus is None else tuple(modulus))

    @property
    def q(self) -> int:
        return self.p**self.m

    # -- table construction ------------------------------------------------

    def _raw_mul(self, a: int, b: int) -> int:
        p, m, mod = self.p, self.m, self.modulus
        if m == 1:
            return a * b % p
        da = [(a // p**i) % p for i in range(m)]
        db = [(b // p**i) % p for i in range(m)]
        prod = [0] * (2 * m - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        rem = _poly_divmod_remainder(prod, mod, p) if len(prod) > m else prod
        return sum(c * p**i for i, c in enumerate(rem))

    def _build_tables(self):
        q = self.q
        order = q - 1
        primes = _factor_primes(order) if order > 1 else []
        for g in range(1, q):
            # generator test: g^(order/f) != 1 for every prime f | order
            powers = [1]
            for _ in range(order):
                powers.append(self._raw_mul(powers[-1], g))
            if powers[order] != 1:
                continue
            if all(powers[order // f] != 1 for f in primes):
                break
        else:
            raise FieldError("no multiplicative generator found")
        exp = powers[:order] * 2
        log = [0] * q
        for i in range(order):
            log[exp[i]] = i
        object.__setattr__(self, "_exp", exp)
        object.__setattr__(self, "_log", log)

    # -- scalar arithmetic --------------------------------------------------

    def check(self, a: int) -> int:
        if not isinstance(a, (int, np.integer)) or not 0 <= a < self.q:
            raise ElementOutOfRange(f"{a!r} is not an element of GF({self.q})")
        return int(a)

    def add(self, a: int, b: int) -> int:
        p = self.p
        if p == 2:
            return a ^ b
        if self.m == 1:
            return (a + b) % p
        out, scale = 0, 1
        while a or b:
            out += ((a % p + b % p) % p) * scale
            a //= p
            b //= p
            scale *= p
        return out

    def neg(self, a: int) -> int:
        p = self.p
        if p == 2:
            return a
        if self.m == 1:
            return -a % p
        out, scale = 0, 1
        while a:
            out += (-(a % p) % p) * scale
            a //= p
            scale *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise InverseOfZero(f"0 has no inverse in GF({self.q})")
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        if e == 0:
            return 1
        if a == 0:
            return 0
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def elements(self) -> range:
        return range(self.q)

    # -- vectorised arithmetic ------------------------------------------------

    def vadd(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        p = self.p
        if p == 2:
            return np.bitwise_xor(a, b)
        if self.m == 1:
            return (a + b) % p
        out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        scale = 1
        for _ in range(self.m):
            out += (((a // scale) % p + (b // scale) % p) % p) * scale
            scale *= p
        return out

    def vmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        exp = np.asarray(self._exp, dtype=np.int64)
        log = np.asarray(self._log, dtype=np.int64)
        prod = exp[log[a] + log[b]]
        return np.where((a == 0) | (b == 0), 0, prod)

    def multiples(self, vector: Sequence[int]) -> np.ndarray:
        """Table ``T`` of shape (q, len(vector)) with ``T[a] = a * vector``."""
        v = np.asarray(vector, dtype=np.int64)
        return self.vmul(np.arange(self.q, dtype=np.int64)[:, None], v[None, :])

    # -- serialisation ------------------------------------------------------

    def __str__(self) -> str:
        return f"q={self.q} poly={','.join(str(c) for c in self.modulus)}"

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """Inverse of ``str(spec)``: ``q=<int> poly=<comma-separated coeffs>``."""
        fields_ = dict(part.split("=", 1) for part in text.split())
        if "q" not in fields_:
            raise FieldError(f"missing q= in field header {text!r}")
        q = int(fields_["q"])
        poly = fields_.get("poly", "")
        modulus = tuple(int(c) for c in poly.split(",")) if poly else None
        return cls.from_q(q, modulus)


def GF(q: int, modulus: Sequence[int] | None = None) -> FieldSpec:
    return FieldSpec.from_q(q, modulus)


def field_arith(spec: FieldSpec, op: str, a: int, b: int | None = None) -> int:
    """Dispatch one of add/sub/mul/inv/pow; ``b`` is an exponent for pow."""
    spec.check(a)
    if op == "inv":
        return spec.inv(a)
    if op == "pow":
        return spec.pow(a, int(b))
    spec.check(b)
    if op == "add":
        return spec.add(a, b)
    if op == "sub":
        return spec.sub(a, b)
    if op == "mul":
        return spec.mul(a, b)
    raise ValueError(f"unknown field operation {op!r}")


def enumerate_elements(spec: FieldSpec) -> tuple[int, ...]:
    return tuple(range(spec.q))
