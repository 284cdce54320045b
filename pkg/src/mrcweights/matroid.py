"""Matroids of codes and of maximally recoverable codes, and their rank-size tables.

Coordinate sets are handled in two forms: iterables of 1-based indices in the
public ``rank``/``is_independent`` interface, and bitmasks (bit ``j-1`` for
coordinate ``j``) for whole-ground-set enumeration, where every matroid can
produce a numpy table of ranks for all 2^n subsets.

Layouts of the two MRC families (local groups ``S_i`` of size r + 1):

* data-local, ``l = k/r`` groups, n = k + l + h: messages 1..k, local parities
  k+1..k+l, global parities k+l+1..n; ``S_i`` is the i-th block of r messages
  plus parity k+i.
* local, ``l = (k+h)/r`` groups, n = k + h + l: messages 1..k, global parities
  k+1..k+h, local parities k+h+1..n; ``S_i`` is the i-th block of r among the
  first k+h symbols plus parity k+h+i.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import comb
from typing import Iterable

import numpy as np

from .code import EnumerationTooLarge, IndexOutOfRange, LinearCode, Reducer, enumeration_limit

SUBSET_ENUM_MAX_N = 26

DATA_LOCAL = "data-local"
LOCAL = "local"


class ParamsOutOfScope(ValueError):
    pass


def binom(a: int, b: int) -> int:
    """C(a, b), zero outside 0 <= b <= a."""
    if a < 0 or b < 0 or b > a:
        return 0
    return comb(a, b)


@dataclass(frozen=True)
class MrcParams:
    """(k, r, h) of a data-local or local MRC, with its coordinate layout."""

    k: int
    r: int
    h: int
    variant: str = DATA_LOCAL

    def __post_init__(self):
        if self.variant not in (DATA_LOCAL, LOCAL):
            raise ValueError(f"unknown MRC variant {self.variant!r}")
        if self.k < 1 or self.r < 1 or self.h < 0:
            raise ParamsOutOfScope("need k >= 1, r >= 1, h >= 0")
        covered = self.k if self.variant == DATA_LOCAL else self.k + self.h
        if covered % self.r:
            raise ParamsOutOfScope(f"r={self.r} does not divide {covered}")

    @property
    def ell(self) -> int:
        covered = self.k if self.variant == DATA_LOCAL else self.k + self.h
        return covered // self.r

    @property
    def n(self) -> int:
        return self.k + self.h + self.ell

    @property
    def d_min(self) -> int:
        return self.h + 2

    @property
    def groups(self) -> tuple[frozenset, ...]:
        r, base = self.r, (self.k if self.variant == DATA_LOCAL else self.k + self.h)
        return tuple(
            frozenset(range(i * r + 1, (i + 1) * r + 1)) | {base + i + 1} for i in range(self.ell)
        )

    @property
    def global_parities(self) -> frozenset:
        if self.variant == DATA_LOCAL:
            return frozenset(range(self.k + self.ell + 1, self.n + 1))
        return frozenset(range(self.k + 1, self.k + self.h + 1))

    @property
    def ungrouped(self) -> frozenset:
        """Coordinates outside every local group (data-local globals; empty for local)."""
        covered = frozenset().union(*self.groups)
        return frozenset(range(1, self.n + 1)) - covered

    def __str__(self) -> str:
        return f"{self.variant} MRC (k={self.k}, r={self.r}, h={self.h}; n={self.n}, l={self.ell})"


def _mask(U: Iterable[int]) -> int:
    m = 0
    for j in U:
        m |= 1 << (j - 1)
    return m


def _popcount(arr: np.ndarray) -> np.ndarray:
    out = np.zeros(arr.shape, dtype=np.int64)
    a = arr.copy()
    while np.any(a):
        out += a & 1
        a >>= 1
    return out


class Matroid:
    n: int
    k: int

    def _rank_mask(self, mask: int) -> int:
        raise NotImplementedError

    def rank(self, U: Iterable[int]) -> int:
        U = set(U)
        for j in U:
            if not 1 <= j <= self.n:
                raise IndexOutOfRange(f"coordinate {j} outside 1..{self.n}")
        return self._rank_mask(_mask(U))

    def is_independent(self, U: Iterable[int]) -> bool:
        U = set(U)
        return self.rank(U) == len(U)

    def rank_table(self) -> np.ndarray:
        """Rank of every subset, indexed by bitmask."""
        self._guard()
        return np.array([self._rank_mask(m) for m in range(1 << self.n)], dtype=np.int64)

    def _guard(self):
        limit = enumeration_limit(1 << SUBSET_ENUM_MAX_N)
        if (1 << self.n) > limit:
            raise EnumerationTooLarge(f"2^{self.n} subsets exceeds guard {limit}")


class UniformMatroid(Matroid):
    def __init__(self, n: int, k: int):
        if not 0 <= k <= n:
            raise ValueError("need 0 <= k <= n")
        self.n, self.k = n, k

    def _rank_mask(self, mask: int) -> int:
        return min(bin(mask).count("1"), self.k)

    def rank_table(self) -> np.ndarray:
        self._guard()
        return np.minimum(_popcount(np.arange(1 << self.n, dtype=np.int64)), self.k)

    def __repr__(self):
        return f"UniformMatroid(n={self.n}, k={self.k})"


class CodeMatroid(Matroid):
    """Column matroid of a generator matrix."""

    def __init__(self, code: LinearCode):
        self.code = code
        self.n, self.k = code.n, code.k
        self._cols = code.columns()

    def _rank_mask(self, mask: int) -> int:
        red = Reducer(self.code.spec)
        rank = 0
        for j in range(self.n):
            if mask >> j & 1:
                nxt = red.extended(self._cols[j])
                if nxt is not None:
                    red, rank = nxt, rank + 1
        return rank

    def rank_table(self) -> np.ndarray:
        """Depth-first over subsets, carrying an echelon basis; one reduction per node."""
        self._guard()
        n, cols = self.n, self._cols
        table = np.zeros(1 << n, dtype=np.int64)

        def visit(j: int, mask: int, red: Reducer, rank: int):
            if j == n:
                table[mask] = rank
                return
            visit(j + 1, mask, red, rank)
            if rank == self.k:
                visit(j + 1, mask | 1 << j, red, rank)
                return
            nxt = red.extended(cols[j])
            if nxt is None:
                visit(j + 1, mask | 1 << j, red, rank)
            else:
                visit(j + 1, mask | 1 << j, nxt, rank + 1)

        visit(0, 0, Reducer(self.code.spec), 0)
        return table

    def __repr__(self):
        return f"CodeMatroid({self.code})"


class MrcMatroid(Matroid):
    """Rank min(k, sum_i min(|U & S_i|, r) + |U outside the groups|)."""

    variant: str

    def __init__(self, params: MrcParams):
        if params.variant != self.variant:
            raise ValueError(f"{type(self).__name__} needs {self.variant} params")
        self.params = params
        self.n, self.k = params.n, params.k
        self._group_masks = [_mask(S) for S in params.groups]
        self._free_mask = _mask(params.ungrouped)

    def _rank_mask(self, mask: int) -> int:
        r = self.params.r
        total = bin(mask & self._free_mask).count("1")
        total += sum(min(bin(mask & g).count("1"), r) for g in self._group_masks)
        return min(total, self.k)

    def rank_table(self) -> np.ndarray:
        self._guard()
        masks = np.arange(1 << self.n, dtype=np.int64)
        total = _popcount(masks & self._free_mask)
        for g in self._group_masks:
            total += np.minimum(_popcount(masks & g), self.params.r)
        return np.minimum(total, self.k)

    def __repr__(self):
        return f"{type(self).__name__}({self.params})"


class DataLocalMrcMatroid(MrcMatroid):
    variant = DATA_LOCAL


class LocalMrcMatroid(MrcMatroid):
    variant = LOCAL


def mrc_matroid(params: MrcParams) -> MrcMatroid:
    return DataLocalMrcMatroid(params) if params.variant == DATA_LOCAL else LocalMrcMatroid(params)


def rank(m: Matroid, U: Iterable[int]) -> int:
    return m.rank(U)


def is_independent(m: Matroid, U: Iterable[int]) -> bool:
    return m.is_independent(U)


# --------------------------------------------------------------------------
# Rank-size distributions


@dataclass(frozen=True)
class RankSizeDistribution:
    """N[u][v] = number of coordinate sets of size u and rank v."""

    n: int
    k: int
    N: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        N = tuple(tuple(int(x) for x in row) for row in self.N)
        if len(N) != self.n + 1 or any(len(row) != self.k + 1 for row in N):
            raise ValueError(f"N must be {self.n + 1} x {self.k + 1}")
        object.__setattr__(self, "N", N)

    def __getitem__(self, uv):
        u, v = uv
        return self.N[u][v]

    def row_sums_ok(self) -> bool:
        return all(sum(row) == comb(self.n, u) for u, row in enumerate(self.N))

    def bases(self) -> int:
        return self.N[self.k][self.k]

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "k": self.k, "N": [[str(x) for x in row] for row in self.N]})

    @classmethod
    def from_json(cls, text: str) -> "RankSizeDistribution":
        d = json.loads(text)
        return cls(d["n"], d["k"], tuple(tuple(int(x) for x in row) for row in d["N"]))


def _from_tables(n: int, k: int, ranks: np.ndarray, sizes: np.ndarray) -> RankSizeDistribution:
    flat = np.bincount(sizes * (k + 1) + ranks, minlength=(n + 1) * (k + 1))
    return RankSizeDistribution(n, k, tuple(tuple(int(x) for x in flat[u * (k + 1) : (u + 1) * (k + 1)]) for u in range(n + 1)))


def rank_size_distribution(m: Matroid, parts: int = 1, part: int = 0) -> RankSizeDistribution:
    """Exact N table by visiting every subset (optionally one contiguous slice of masks)."""
    ranks = m.rank_table()
    total = 1 << m.n
    lo, hi = total * part // parts, total * (part + 1) // parts
    masks = np.arange(lo, hi, dtype=np.int64)
    return _from_tables(m.n, m.k, ranks[lo:hi], _popcount(masks))


def _containment_counts(params: MrcParams, u: int) -> list[int]:
    """N_{u,b} = C(l, b) C(n - b(r+1), u - b(r+1)): (set, b contained groups) pairs."""
    l, r, n = params.ell, params.r, params.n
    return [binom(l, b) * binom(n - b * (r + 1), u - b * (r + 1)) for b in range(l + 2)]


def rank_size_counts_closed_form(params: MrcParams, as_printed: bool = False) -> RankSizeDistribution:
    """N table of an MRC matroid from group-containment counts, without enumeration.

    A u-set containing exactly b whole groups has rank min(k, u - b).  The
    number of such sets follows from the containment counts N_{u,b} by
    inclusion-exclusion, sum_{t >= b} (-1)^(t-b) C(t, b) N_{u,t}.

    ``as_printed=True`` uses the simpler differences N_{u,b} - N_{u,b+1} for
    "exactly b groups", which is only right while at most one group fits in
    a set; kept for diagnostics.
    """
    l, r, k, n = params.ell, params.r, params.k, params.n
    if params.variant == DATA_LOCAL and not l < r + 1:
        raise ParamsOutOfScope(f"closed-form counts need l < r + 1 (l={l}, r={r})")
    if params.variant == LOCAL and l != 2:
        raise ParamsOutOfScope("closed-form counts for local MRC cover two local groups only")
    table = [[0] * (k + 1) for _ in range(n + 1)]
    for u in range(n + 1):
        Nu = _containment_counts(params, u)
        for b in range(l + 1):
            if as_printed:
                exact_b = Nu[b] - Nu[b + 1]
            else:
                exact_b = sum((-1) ** (t - b) * binom(t, b) * Nu[t] for t in range(b, l + 1))
            if exact_b:
                table[u][min(k, u - b)] += exact_b
    return RankSizeDistribution(n, k, tuple(tuple(row) for row in table))


def ghw_from_matroid(m: Matroid) -> tuple[int, ...]:
    """d_s = min{|W| : k - rank([n] minus W) >= s}, i.e. the smallest support of an s-dim subcode."""
    ranks = m.rank_table()
    full = (1 << m.n) - 1
    masks = np.arange(1 << m.n, dtype=np.int64)
    sizes = _popcount(masks)
    dims = m.k - ranks[full ^ masks]
    best = np.full(m.n + 1, -1, dtype=np.int64)
    np.maximum.at(best, sizes, dims)
    out = []
    for s in range(1, m.k + 1):
        out.append(int(np.argmax(best >= s)))
    return tuple(out)
