"""Linear codes over GF(q) and the brute-force oracles used to check every formula.

Column indices in the public interface are 1-based, matching coordinates
``1..n`` of a codeword.  Generator matrices are stored as tuples of rows of
plain integers (field elements).

The enumerators iterate over message vectors (or over reduced row-echelon
bases of subcodes) in a fixed order.  Passing ``parts``/``part`` restricts the
work to one contiguous slice of that order, so a harness can run slices in
parallel and add the resulting distributions.
"""

from __future__ import annotations

import itertools
import json
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator, Sequence

import numpy as np

from .gf import FieldSpec

WEIGHT_ENUM_LIMIT = 1 << 28
SUBCODE_ENUM_LIMIT = 1 << 24
MDS_MAX_LENGTH = 24
_CHUNK = 1 << 15


class EnumerationTooLarge(RuntimeError):
    pass


class IndexOutOfRange(IndexError):
    pass


class CodeFormatError(ValueError):
    pass


def enumeration_limit(default: int) -> int:
    """Guard value, overridable through the MRC_MAX_ENUM environment variable."""
    override = os.environ.get("MRC_MAX_ENUM")
    return int(override) if override else default


def _guard(count: int, default: int, what: str):
    limit = enumeration_limit(default)
    if count > limit:
        raise EnumerationTooLarge(f"{what}: {count} items exceeds guard {limit}")


def _slice(total: int, parts: int, part: int) -> tuple[int, int]:
    if parts < 1 or not 0 <= part < parts:
        raise ValueError(f"invalid partition {part}/{parts}")
    return total * part // parts, total * (part + 1) // parts


# --------------------------------------------------------------------------
# Gaussian elimination


def row_reduce(spec: FieldSpec, rows: Sequence[Sequence[int]]) -> tuple[list[list[int]], list[int]]:
    """Reduced row-echelon form; returns (nonzero rows, pivot columns)."""
    mat = [list(r) for r in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots: list[int] = []
    top = 0
    for col in range(ncols):
        pivot_row = next((i for i in range(top, len(mat)) if mat[i][col]), None)
        if pivot_row is None:
            continue
        mat[top], mat[pivot_row] = mat[pivot_row], mat[top]
        inv = spec.inv(mat[top][col])
        mat[top] = [spec.mul(inv, x) for x in mat[top]]
        for i in range(len(mat)):
            c = mat[i][col]
            if i != top and c:
                mat[i] = [spec.sub(x, spec.mul(c, y)) for x, y in zip(mat[i], mat[top])]
        pivots.append(col)
        top += 1
        if top == len(mat):
            break
    return mat[:top], pivots


def matrix_rank(spec: FieldSpec, rows: Sequence[Sequence[int]]) -> int:
    return len(row_reduce(spec, rows)[1])


class Reducer:
    """Incremental span membership: reduce vectors against an echelon basis."""

    def __init__(self, spec: FieldSpec, basis=(), pivots=()):
        self.spec = spec
        self.basis = list(basis)
        self.pivots = list(pivots)

    def reduce(self, vec: Sequence[int]) -> list[int]:
        spec = self.spec
        v = list(vec)
        for row, piv in zip(self.basis, self.pivots):
            c = v[piv]
            if c:
                v = [spec.sub(x, spec.mul(c, y)) for x, y in zip(v, row)]
        return v

    def extended(self, vec: Sequence[int]) -> "Reducer | None":
        """New reducer with ``vec`` added, or None if it is already in the span."""
        v = self.reduce(vec)
        piv = next((i for i, x in enumerate(v) if x), None)
        if piv is None:
            return None
        inv = self.spec.inv(v[piv])
        v = [self.spec.mul(inv, x) for x in v]
        return Reducer(self.spec, self.basis + [v], self.pivots + [piv])


# --------------------------------------------------------------------------
# Codes and distributions


@dataclass(frozen=True)
class LinearCode:
    """An [n, k] code given by a full-rank k x n generator matrix."""

    spec: FieldSpec
    G: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        G = tuple(tuple(int(x) for x in row) for row in self.G)
        if not G or not G[0]:
            raise ValueError("generator matrix must be non-empty")
        n = len(G[0])
        if any(len(row) != n for row in G):
            raise ValueError("ragged generator matrix")
        for row in G:
            for x in row:
                self.spec.check(x)
        if matrix_rank(self.spec, G) != len(G):
            raise ValueError(f"generator matrix has rank < {len(G)}")
        object.__setattr__(self, "G", G)

    @property
    def n(self) -> int:
        return len(self.G[0])

    @property
    def k(self) -> int:
        return len(self.G)

    @property
    def q(self) -> int:
        return self.spec.q

    def column(self, j: int) -> tuple[int, ...]:
        """Column ``j`` (1-based)."""
        return tuple(row[j - 1] for row in self.G)

    def columns(self) -> list[tuple[int, ...]]:
        return [tuple(row[j] for row in self.G) for j in range(self.n)]

    def encode(self, message: Sequence[int]) -> tuple[int, ...]:
        spec = self.spec
        out = [0] * self.n
        for m, row in zip(message, self.G):
            if m:
                out = [spec.add(x, spec.mul(m, y)) for x, y in zip(out, row)]
        return tuple(out)

    def codewords(self) -> Iterator[tuple[int, ...]]:
        for msg in itertools.product(range(self.q), repeat=self.k):
            yield self.encode(msg)

    def __str__(self) -> str:
        return f"[{self.n},{self.k}] code over GF({self.q})"


@dataclass(frozen=True)
class WeightDistribution:
    """A[w] for w = 0..n: codeword counts, or s-dimensional subcode counts when ``s`` is set."""

    A: tuple[int, ...]
    k: int | None = None
    q: int | None = None
    s: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "A", tuple(int(a) for a in self.A))

    @property
    def n(self) -> int:
        return len(self.A) - 1

    def __getitem__(self, w: int) -> int:
        return self.A[w]

    def __len__(self) -> int:
        return len(self.A)

    def __iter__(self):
        return iter(self.A)

    def __add__(self, other: "WeightDistribution") -> "WeightDistribution":
        if self.n != other.n:
            raise ValueError("length mismatch")
        return WeightDistribution(tuple(a + b for a, b in zip(self.A, other.A)), self.k, self.q, self.s)

    def total(self) -> int:
        return sum(self.A)

    def min_weight(self) -> int | None:
        """Smallest positive w with A[w] > 0 (for s-distributions, smallest w overall)."""
        start = 1 if self.s is None else 0
        return next((w for w in range(start, len(self.A)) if self.A[w]), None)

    def polynomial(self, var: str = "Z") -> str:
        terms = []
        for w, a in enumerate(self.A):
            if a:
                terms.append(str(a) if w == 0 else f"{'' if a == 1 else a}{var}" + (f"^{w}" if w > 1 else ""))
        return " + ".join(terms) or "0"

    def to_dict(self, **extra) -> dict:
        d = {"n": self.n, "k": self.k, "q": self.q, "s": self.s, "A": [str(a) for a in self.A]}
        d.update(extra)
        return d

    def to_json(self, **extra) -> str:
        return json.dumps(self.to_dict(**extra), sort_keys=True)

    @classmethod
    def from_dict(cls, d: dict) -> "WeightDistribution":
        A = tuple(int(a) for a in d["A"])
        if "n" in d and d["n"] is not None and d["n"] != len(A) - 1:
            raise CodeFormatError("n does not match length of A")
        return cls(A, d.get("k"), d.get("q"), d.get("s"))

    @classmethod
    def from_json(cls, text: str) -> "WeightDistribution":
        return cls.from_dict(json.loads(text))


def _check_subset(n: int, U: Iterable[int]) -> list[int]:
    out = sorted(set(U))
    for j in out:
        if not 1 <= j <= n:
            raise IndexOutOfRange(f"coordinate {j} outside 1..{n}")
    return out


def rank_of_columns(code: LinearCode, U: Iterable[int]) -> int:
    """Rank of the columns of G indexed by U (1-based)."""
    cols = _check_subset(code.n, U)
    if not cols:
        return 0
    sub = [[row[j - 1] for j in cols] for row in code.G]
    return matrix_rank(code.spec, sub)


def puncture(code: LinearCode, E: Iterable[int]) -> LinearCode:
    """Restriction of the code to coordinates E, with a full-rank generator."""
    cols = _check_subset(code.n, E)
    if not cols:
        raise ValueError("cannot puncture to an empty coordinate set")
    sub = [[row[j - 1] for j in cols] for row in code.G]
    rows, _ = row_reduce(code.spec, sub)
    return LinearCode(code.spec, tuple(tuple(r) for r in rows))


def dual(code: LinearCode) -> LinearCode:
    """Generator of the dual code: a basis of the nullspace of G."""
    spec, n = code.spec, code.n
    rows, pivots = row_reduce(spec, code.G)
    if len(pivots) == n:
        raise ValueError("dual of the full space is the zero code")
    free = [j for j in range(n) if j not in pivots]
    basis = []
    for f in free:
        v = [0] * n
        v[f] = 1
        for row, piv in zip(rows, pivots):
            v[piv] = spec.neg(row[f])
        basis.append(tuple(v))
    return LinearCode(spec, tuple(basis))


def same_code(a: LinearCode, b: LinearCode) -> bool:
    """True when both generators span the same subspace."""
    if a.spec != b.spec or a.n != b.n or a.k != b.k:
        return False
    return row_reduce(a.spec, a.G)[0] == row_reduce(b.spec, b.G)[0]


# --------------------------------------------------------------------------
# Brute-force enumeration


def _combine(spec: FieldSpec, tables: list[np.ndarray], digits: list[np.ndarray], base=None) -> np.ndarray:
    acc = base
    for table, d in zip(tables, digits):
        term = table[d]
        acc = term if acc is None else spec.vadd(acc, term)
    return acc


def enumerate_weight_distribution(code: LinearCode, parts: int = 1, part: int = 0) -> WeightDistribution:
    """Exact A_0..A_n by encoding every message vector."""
    spec, n, k, q = code.spec, code.n, code.k, code.q
    total = q**k
    _guard(total, WEIGHT_ENUM_LIMIT, "weight enumeration")
    lo, hi = _slice(total, parts, part)
    tables = [spec.multiples(row) for row in code.G]
    counts = np.zeros(n + 1, dtype=np.int64)
    for start in range(lo, hi, _CHUNK):
        idx = np.arange(start, min(hi, start + _CHUNK), dtype=np.int64)
        digits = [(idx // q**i) % q for i in range(k)]
        words = _combine(spec, tables, digits)
        counts += np.bincount((words != 0).sum(axis=1), minlength=n + 1)
    return WeightDistribution(tuple(int(c) for c in counts), k=k, q=q)


def _echelon_shapes(k: int, s: int) -> list[tuple[tuple[int, ...], list[list[int]]]]:
    """Pivot sets of s x k RREF matrices with, per row, the free columns."""
    shapes = []
    for pivots in itertools.combinations(range(k), s):
        pset = set(pivots)
        free = [[c for c in range(p + 1, k) if c not in pset] for p in pivots]
        shapes.append((pivots, free))
    return shapes


def enumerate_support_weight_distribution(code: LinearCode, s: int, parts: int = 1, part: int = 0) -> WeightDistribution:
    """Exact A^(s)_w by visiting every s-dimensional subcode once.

    Each subcode is generated by R.G for a unique s x k reduced row-echelon
    matrix R; its support is the union of the supports of the rows of R.G.
    """
    spec, n, k, q = code.spec, code.n, code.k, code.q
    if not 1 <= s <= k:
        raise ValueError(f"s={s} outside 1..{k}")
    from .tutte import gaussian_binomial

    total = gaussian_binomial(k, s, q)
    _guard(total, SUBCODE_ENUM_LIMIT, "subcode enumeration")
    lo, hi = _slice(total, parts, part)
    tables = [spec.multiples(row) for row in code.G]
    counts = np.zeros(n + 1, dtype=np.int64)
    offset = 0
    for pivots, free in _echelon_shapes(k, s):
        nfree = sum(len(f) for f in free)
        size = q**nfree
        a, b = max(lo, offset), min(hi, offset + size)
        for start in range(a, b, _CHUNK):
            idx = np.arange(start - offset, min(b, start + _CHUNK) - offset, dtype=np.int64)
            support = np.zeros((len(idx), n), dtype=bool)
            pos = 0
            for p, cols in zip(pivots, free):
                digits = [(idx // q ** (pos + t)) % q for t in range(len(cols))]
                pos += len(cols)
                base = np.broadcast_to(tables[p][1], (len(idx), n))
                row = _combine(spec, [tables[c] for c in cols], digits, base)
                support |= row != 0
            counts += np.bincount(support.sum(axis=1), minlength=n + 1)
        offset += size
    return WeightDistribution(tuple(int(c) for c in counts), k=k, q=q, s=s)


def ghw_brute(code: LinearCode) -> tuple[int, ...]:
    """Generalized Hamming weights d_1..d_k from full subcode enumeration."""
    out = []
    for s in range(1, code.k + 1):
        dist = enumerate_support_weight_distribution(code, s)
        out.append(next(w for w, a in enumerate(dist.A) if a))
    return tuple(out)


def min_distance(code: LinearCode) -> int:
    return enumerate_weight_distribution(code).min_weight()


def is_mds(code: LinearCode) -> bool:
    """Every k columns independent, checked on whichever of C, C-perp has smaller dimension."""
    n, k = code.n, code.k
    if n > MDS_MAX_LENGTH:
        raise EnumerationTooLarge(f"MDS check limited to n <= {MDS_MAX_LENGTH}")
    if k == n:
        return True
    target = dual(code) if n - k < k else code
    cols = target.columns()
    for subset in itertools.combinations(range(n), target.k):
        if matrix_rank(code.spec, [cols[j] for j in subset]) < target.k:
            return False
    return True


def reed_solomon(spec: FieldSpec, n: int, k: int) -> LinearCode:
    """Vandermonde generator G[i][j] = a_j^i on the first n field elements (n <= q)."""
    if n > spec.q:
        raise ValueError("RS length cannot exceed q")
    points = list(range(n))
    return LinearCode(spec, tuple(tuple(spec.pow(a, i) for a in points) for i in range(k)))


# --------------------------------------------------------------------------
# Code file format


def format_code(code: LinearCode) -> str:
    lines = [str(code.spec), f"n={code.n} k={code.k}"]
    lines += [" ".join(str(x) for x in row) for row in code.G]
    return "\n".join(lines) + "\n"


def parse_code(text: str) -> LinearCode:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    try:
        spec = FieldSpec.parse(lines[0])
        dims = dict(part.split("=", 1) for part in lines[1].split())
        n, k = int(dims["n"]), int(dims["k"])
        rows = tuple(tuple(int(x) for x in ln.split()) for ln in lines[2 : 2 + k])
    except (IndexError, KeyError, ValueError) as exc:
        raise CodeFormatError(f"malformed code file: {exc}") from exc
    if len(rows) != k or any(len(r) != n for r in rows) or len(lines) != 2 + k:
        raise CodeFormatError(f"expected {k} rows of {n} elements")
    try:
        return LinearCode(spec, rows)
    except ValueError as exc:
        raise CodeFormatError(str(exc)) from exc


def write_code(code: LinearCode, path: str | Path):
    Path(path).write_text(format_code(code))


def read_code(path: str | Path) -> LinearCode:
    return parse_code(Path(path).read_text())
