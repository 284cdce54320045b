"""Concrete data-local and local MRC instances: seeded search plus exhaustive verification.

Generator layout (coordinates 1-based):

* data-local: messages ``1..k``, local parities ``k+1..k+l``, globals after.
* local: messages ``1..k``, globals ``k+1..k+h``, local parities after.

Local group ``S_i`` is the i-th block of ``r`` message (or global) symbols
together with its parity.  A code is maximally recoverable when every
puncturing to ``r`` symbols of each group, plus every ungrouped global, is an
MDS ``[k+h, k]`` code.

Randomness comes from xorshift64* seeded per attempt by splitmix64, so the
same ``(params, field, seed)`` always yields the same generator, in any
language that reproduces the two 64-bit recurrences below.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from math import comb, prod
from pathlib import Path

from .code import (
    EnumerationTooLarge,
    LinearCode,
    enumeration_limit,
    is_mds,
    min_distance,
    puncture,
    rank_of_columns,
    read_code,
    write_code,
)
from .formulas import singleton_locality_bound
from .gf import FieldSpec
from .matroid import DATA_LOCAL, LOCAL, MrcParams

MASK64 = (1 << 64) - 1
VERIFY_ENUM_LIMIT = 1 << 22
DEFAULT_MAX_ATTEMPTS = 1000


class ConstructionFailed(RuntimeError):
    def __init__(self, attempts: int, message: str = ""):
        self.attempts = attempts
        super().__init__(message or f"no MRC found in {attempts} attempts; try a larger field")


class LayoutMismatch(ValueError):
    """The generator does not have the coordinate layout the parameters describe."""


# --------------------------------------------------------------------------
# Pseudo-random source


def splitmix64(z: int) -> int:
    z = (z + 0x9E3779B97F4A7C15) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


class XorShift64Star:
    """xorshift64* (shifts 12, 25, 27; multiplier 0x2545F4914F6CDD1D)."""

    MULTIPLIER = 0x2545F4914F6CDD1D

    def __init__(self, seed: int):
        self.state = (seed & MASK64) or 1

    def next(self) -> int:
        x = self.state
        x ^= x >> 12
        x ^= (x << 25) & MASK64
        x ^= x >> 27
        self.state = x
        return (x * self.MULTIPLIER) & MASK64

    def below(self, bound: int) -> int:
        # the top 32 bits are the best-mixed; modulo bias is irrelevant here
        return (self.next() >> 32) % bound


def attempt_rng(seed: int, attempt: int) -> XorShift64Star:
    return XorShift64Star(splitmix64((seed + attempt) & MASK64))


# --------------------------------------------------------------------------
# Generator assembly


def _assemble(params: MrcParams, spec: FieldSpec, rng: XorShift64Star) -> LinearCode:
    k, r, h, ell, q = params.k, params.r, params.h, params.ell, spec.q
    identity = [tuple(int(i == j) for i in range(k)) for j in range(k)]
    global_cols = [tuple(rng.below(q) for _ in range(k)) for _ in range(h)]
    coeffs = [[1 + rng.below(q - 1) for _ in range(r)] for _ in range(ell)]

    # symbols covered by local groups, in group order
    covered = identity + (global_cols if params.variant == LOCAL else [])
    local_cols = []
    for i in range(ell):
        col = [0] * k
        for a, sym in zip(coeffs[i], covered[i * r : (i + 1) * r]):
            col = [spec.add(c, spec.mul(a, x)) for c, x in zip(col, sym)]
        local_cols.append(tuple(col))

    if params.variant == DATA_LOCAL:
        columns = identity + local_cols + global_cols
    else:
        columns = identity + global_cols + local_cols
    G = tuple(tuple(col[row] for col in columns) for row in range(k))
    return LinearCode(spec, G)


# --------------------------------------------------------------------------
# Verification


def _check_layout(code: LinearCode, params: MrcParams):
    if (code.n, code.k) != (params.n, params.k):
        raise LayoutMismatch(f"code is [{code.n}, {code.k}] but {params} needs [{params.n}, {params.k}]")
    for j in range(1, params.k + 1):
        if code.column(j) != tuple(int(i == j - 1) for i in range(params.k)):
            raise LayoutMismatch(f"coordinate {j} is not a systematic message column")
    for i, S in enumerate(params.groups, 1):
        if rank_of_columns(code, S) > params.r:
            raise LayoutMismatch(f"local group S_{i} = {sorted(S)} has rank > r = {params.r}")


def recovery_sets(params: MrcParams):
    """Every E with |E & S_i| = r for all i, together with the ungrouped coordinates."""
    extra = sorted(params.ungrouped)
    choices = [itertools.combinations(sorted(S), params.r) for S in params.groups]
    for picks in itertools.product(*choices):
        yield tuple(sorted(itertools.chain(extra, *picks)))


def _verify(code: LinearCode, params: MrcParams) -> bool:
    _check_layout(code, params)
    k, h = params.k, params.h
    work = prod(comb(len(S), params.r) for S in params.groups) * comb(k + h, min(k, h))
    limit = enumeration_limit(VERIFY_ENUM_LIMIT)
    if work > limit:
        raise EnumerationTooLarge(f"MR verification needs {work} minor checks (guard {limit})")
    for E in recovery_sets(params):
        sub = puncture(code, E)
        if sub.k != k or not is_mds(sub):
            return False
    return True


def verify_data_local_mrc(code: LinearCode, params: MrcParams) -> bool:
    if params.variant != DATA_LOCAL:
        raise LayoutMismatch("verify_data_local_mrc needs data-local parameters")
    return _verify(code, params)


def verify_local_mrc(code: LinearCode, params: MrcParams) -> bool:
    if params.variant != LOCAL:
        raise LayoutMismatch("verify_local_mrc needs local parameters")
    return _verify(code, params)


def verify_mrc(code: LinearCode, params: MrcParams) -> bool:
    return _verify(code, params)


# --------------------------------------------------------------------------
# Instances


@dataclass(frozen=True)
class MrcInstance:
    params: MrcParams
    code: LinearCode
    seed: int
    attempts: int
    verified: bool

    def sidecar(self) -> dict:
        p = self.params
        return {
            "params": {"k": p.k, "r": p.r, "h": p.h, "variant": p.variant},
            "seed": self.seed,
            "attempts": self.attempts,
            "verified": self.verified,
        }

    def is_optimal(self) -> bool:
        """Brute-force minimum distance equals h + 2 and meets the locality bound."""
        p = self.params
        d = min_distance(self.code)
        return d == p.d_min == singleton_locality_bound(p.n, p.k, p.r)


def construct_mrc(
    params: MrcParams, spec: FieldSpec, seed: int = 1, max_attempts: int = DEFAULT_MAX_ATTEMPTS
) -> MrcInstance:
    """Draw generators until one verifies; attempt ``t`` uses seed ``seed + t``."""
    for attempt in range(max_attempts):
        code = _assemble(params, spec, attempt_rng(seed, attempt))
        if _verify(code, params):
            return MrcInstance(params, code, seed, attempt + 1, True)
    raise ConstructionFailed(max_attempts)


def save_instance(instance: MrcInstance, path: str | Path) -> tuple[Path, Path]:
    """Write the code file and a ``<path>.json`` sidecar; returns both paths."""
    path = Path(path)
    side = path.with_name(path.name + ".json")
    write_code(instance.code, path)
    side.write_text(json.dumps(instance.sidecar(), sort_keys=True, indent=2) + "\n")
    return path, side


def load_instance(path: str | Path) -> MrcInstance:
    path = Path(path)
    meta = json.loads(path.with_name(path.name + ".json").read_text())
    p = meta["params"]
    params = MrcParams(int(p["k"]), int(p["r"]), int(p["h"]), p.get("variant", DATA_LOCAL))
    return MrcInstance(params, read_code(path), int(meta["seed"]), int(meta["attempts"]), bool(meta["verified"]))
