"""Tutte polynomials and the weight-enumerator transforms that specialise them.

Everything here consumes a :class:`RankSizeDistribution` (the table of
counts N[u][v] of coordinate sets of size u and rank v) and works in exact
integer arithmetic.  Enumerators are accumulated term by term as
``count * Z^(n-u) * (1-Z)^u * weight(k - v)`` where the weight is
``q^(k-v)`` for ordinary weights and a Gaussian binomial for the s-th
support weights.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import comb
from typing import Callable, Sequence

from .code import WeightDistribution
from .matroid import RankSizeDistribution


class NegativeCoefficient(ArithmeticError):
    pass


class NotDivisible(ArithmeticError):
    pass


def gaussian_binomial(t: int, s: int, q: int) -> int:
    """Number of s-dimensional subspaces of GF(q)^t; 0 when t < s."""
    if s < 0 or t < 0 or s > t:
        return 0
    num = den = 1
    for i in range(s):
        num *= q ** (t - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def _binomial_row(u: int) -> list[int]:
    """Coefficients of (1 - Z)^u."""
    return [(-1) ** j * comb(u, j) for j in range(u + 1)]


# --------------------------------------------------------------------------
# Bivariate polynomials


@dataclass(frozen=True)
class BivariatePolynomial:
    """Sparse integer polynomial in X, Y keyed by exponent pairs (i, j)."""

    coeffs: dict

    def __post_init__(self):
        object.__setattr__(self, "coeffs", {k: v for k, v in self.coeffs.items() if v})

    def __eq__(self, other):
        return isinstance(other, BivariatePolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __call__(self, x, y):
        return sum(c * x**i * y**j for (i, j), c in self.coeffs.items())

    def triples(self) -> list[tuple[int, int, int]]:
        return sorted((i, j, c) for (i, j), c in self.coeffs.items())

    def to_json(self) -> str:
        return json.dumps([[i, j, str(c)] for i, j, c in self.triples()])

    def __str__(self) -> str:
        def mono(var, e):
            return "" if e == 0 else var if e == 1 else f"{var}^{e}"

        terms = []
        for (i, j), c in sorted(self.coeffs.items(), key=lambda kv: (-(kv[0][0] + kv[0][1]), -kv[0][0])):
            body = mono("X", i) + mono("Y", j)
            if not body:
                terms.append(str(c))
            else:
                terms.append(body if c == 1 else f"{c}{body}")
        return " + ".join(terms).replace("+ -", "- ") or "0"


def _shifted_power(a: int) -> list[int]:
    """Coefficients of (V - 1)^a in V."""
    return [comb(a, i) * (-1) ** (a - i) for i in range(a + 1)]


def tutte_from_distribution(N: RankSizeDistribution) -> BivariatePolynomial:
    """T(X, Y) = sum_{u,v} N[u][v] (X-1)^(k-v) (Y-1)^(u-v)."""
    k = N.k
    coeffs: dict = {}
    for u, row in enumerate(N.N):
        for v, count in enumerate(row):
            if not count:
                continue
            xs, ys = _shifted_power(k - v), _shifted_power(u - v)
            for i, a in enumerate(xs):
                for j, b in enumerate(ys):
                    coeffs[(i, j)] = coeffs.get((i, j), 0) + count * a * b
    return BivariatePolynomial(coeffs)


def tutte_mds(n: int, k: int) -> BivariatePolynomial:
    """Tutte polynomial of the uniform matroid U(k, n)."""
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    coeffs: dict = {}
    for u in range(k + 1):
        for i, a in enumerate(_shifted_power(k - u)):
            coeffs[(i, 0)] = coeffs.get((i, 0), 0) + comb(n, u) * a
    for u in range(k + 1, n + 1):
        for j, b in enumerate(_shifted_power(u - k)):
            coeffs[(0, j)] = coeffs.get((0, j), 0) + comb(n, u) * b
    return BivariatePolynomial(coeffs)


# --------------------------------------------------------------------------
# Greene / Britz specialisations


def _specialise(N: RankSizeDistribution, weight: Callable[[int], int]) -> list[int]:
    n = N.n
    A = [0] * (n + 1)
    for u, row in enumerate(N.N):
        expansion = _binomial_row(u)
        for v, count in enumerate(row):
            if not count:
                continue
            c = count * weight(N.k - v)
            if not c:
                continue
            for j, b in enumerate(expansion):
                A[n - u + j] += c * b
    return A


def _nonnegative(A: Sequence[int], what: str):
    bad = [(w, a) for w, a in enumerate(A) if a < 0]
    if bad:
        raise NegativeCoefficient(f"{what}: negative coefficients at (w, A_w) = {bad}")


def greene_weight_enumerator(N: RankSizeDistribution, q: int, check: bool = True) -> WeightDistribution:
    """W(Z) = sum_U Z^(n-|U|) (1-Z)^|U| q^(k - rank U).

    A negative coefficient means no code over GF(q) has this matroid; it is
    raised unless ``check`` is False.
    """
    A = _specialise(N, lambda nullity: q**nullity)
    if check:
        _nonnegative(A, "Greene weight enumerator")
    return WeightDistribution(tuple(A), k=N.k, q=q)


def britz_support_weight_enumerator(N: RankSizeDistribution, q: int, s: int, check: bool = True) -> WeightDistribution:
    """W^(s)(Z) = sum_U Z^(n-|U|) (1-Z)^|U| [k - rank U choose s]_q."""
    if not 1 <= s <= N.k:
        raise ValueError(f"s={s} outside 1..{N.k}")
    A = _specialise(N, lambda nullity: gaussian_binomial(nullity, s, q))
    if check:
        _nonnegative(A, f"Britz support weights (s={s})")
    return WeightDistribution(tuple(A), k=N.k, q=q, s=s)


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_pow(a: list[int], e: int) -> list[int]:
    out = [1]
    for _ in range(e):
        out = _poly_mul(out, a)
    return out


def macwilliams_transform(W: WeightDistribution | Sequence[int], n: int, k: int, q: int, check: bool = True) -> WeightDistribution:
    """Dual weight distribution: (1/q^k) sum_i A_i (1-Z)^i (1+(q-1)Z)^(n-i)."""
    A = list(W)
    if len(A) != n + 1:
        raise ValueError(f"expected {n + 1} coefficients, got {len(A)}")
    if sum(A) != q**k:
        raise NotDivisible(f"distribution sums to {sum(A)}, not q^k = {q ** k}")
    P = [0] * (n + 1)
    for i, a in enumerate(A):
        if a:
            term = _poly_mul(_poly_pow([1, -1], i), _poly_pow([1, q - 1], n - i))
            for w, c in enumerate(term):
                P[w] += a * c
    size = q**k
    out = []
    for w, c in enumerate(P):
        if c % size:
            raise NotDivisible(f"coefficient {w} ({c}) not divisible by q^k = {size}")
        out.append(c // size)
    if check:
        _nonnegative(out, "MacWilliams transform")
    return WeightDistribution(tuple(out), k=n - k, q=q)
