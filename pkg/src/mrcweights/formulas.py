"""Closed-form weight enumerators, GHWs and higher support weights of MRCs.

Each function evaluates a published expression term by term.  Binomials use
the zero convention of :func:`binom` at range boundaries; Gaussian binomials
vanish when the top argument is smaller than the bottom one.  Outputs are
checked for negative coefficients, which are raised rather than clamped.

Notation: ``n`` block length, ``k`` dimension, ``r`` locality, ``h`` number of
global parities, ``l`` number of local groups.
"""

from __future__ import annotations

from .code import WeightDistribution
from .matroid import ParamsOutOfScope, binom
from .tutte import NegativeCoefficient, gaussian_binomial


class SOutOfRange(ValueError):
    pass


def _result(A, k, q, s=None, check=True, what="closed form") -> WeightDistribution:
    if check:
        bad = [(w, a) for w, a in enumerate(A) if a < 0]
        if bad:
            raise NegativeCoefficient(f"{what}: negative coefficients {bad}")
    return WeightDistribution(tuple(A), k=k, q=q, s=s)


def singleton_locality_bound(n: int, k: int, r: int) -> int:
    """Largest minimum distance allowed for an [n, k] code with information locality r."""
    if r < 1:
        raise ValueError("r must be positive")
    return n - k - (-(-k // r)) + 2


def mds_weight_enumerators(n: int, k: int, q: int) -> WeightDistribution:
    """Weight distribution of any [n, k, n-k+1] MDS code over GF(q)."""
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    d = n - k + 1
    A = [0] * (n + 1)
    A[0] = 1
    for w in range(max(d, 1), n + 1):
        A[w] = binom(n, w) * sum(binom(w, j) * (-1) ** j * (q ** (k + w - n - j) - 1) for j in range(w - d + 1))
    return _result(A, k, q, what="MDS enumerator")


# --------------------------------------------------------------------------
# Data-local MRC, two local groups (k = 2r, n = 2r + 2 + h)


def _two_group_tail(n, k, r, q, w, j_lo, j_hi) -> int:
    return sum(
        2 * (q - 1) * binom(n - r - 1, n - w + j - r - 1) * binom(n - w + j, j) * (-1) ** j * q ** (k + w - n - j)
        for j in range(j_lo, j_hi + 1)
    )


def _uniform_part(n, k, q, w, j_hi) -> int:
    return sum(binom(n, w) * binom(w, j) * (-1) ** j * (q ** (k + w - n - j) - 1) for j in range(j_hi + 1))


def data_local_two_weight_enumerators(r: int, h: int, q: int, check: bool = True) -> WeightDistribution:
    """Weight distribution of a data-local MRC with two local groups."""
    if r < 1 or h < 0:
        raise ParamsOutOfScope("need r >= 1, h >= 0")
    k, n = 2 * r, 2 * r + 2 + h
    A = [0] * (n + 1)
    A[0] = 1
    A[h + 2] = 2 * binom(n - r - 1, r - 1) * (q - 1)
    for w in range(h + 3, r + h + 2):
        A[w] = _uniform_part(n, k, q, w, w - h - 3) + _two_group_tail(n, k, r, q, w, 0, w - h - 2)
    for w in range(max(r + h + 2, h + 3), n + 1):
        A[w] = _uniform_part(n, k, q, w, w - h - 3) + _two_group_tail(n, k, r, q, w, w - r - h - 1, w - h - 2)
    return _result(A, k, q, check=check, what="data-local two-group enumerator")


def data_local_two_dual_weight_enumerators(r: int, h: int, q: int, check: bool = True) -> WeightDistribution:
    """Weight distribution of the dual of a two-group data-local MRC."""
    if r < 1 or h < 0:
        raise ParamsOutOfScope("need r >= 1, h >= 0")
    k, n = 2 * r, 2 * r + 2 + h
    A = [0] * (n + 1)
    A[0] = 1

    def local_part(w, j_lo, j_hi):
        return sum(
            2 * binom(n - w + j, j) * binom(n - r - 1, w - j - r - 1) * (-1) ** j * (q - 1)
            for j in range(j_lo, j_hi + 1)
        )

    for w in range(r + 1, 2 * r + 1):
        A[w] = local_part(w, 0, w - r - 1)
    for w in range(2 * r + 1, n + 1):
        A[w] = sum(
            binom(n - w + j, j) * binom(n, w - j) * (-1) ** j * (q ** (w - j - k) - 1) for j in range(w - 2 * r)
        ) + local_part(w, w - 2 * r, w - r - 1)
    return _result(A, n - k, q, check=check, what="dual two-group enumerator")


# --------------------------------------------------------------------------
# Data-local MRC, l >= 3 local groups (tabulated expression)


def data_local_ell_weight_enumerators(ell: int, r: int, h: int, q: int, check: bool = True) -> WeightDistribution:
    """Weight distribution for l >= 3 local groups, evaluated as tabulated.

    The tabulated expression counts sets of rank u - b by N_{u,b} - N_{u,b+1},
    where N_{u,b} = C(l, b) C(n - b(r+1), u - b(r+1)).  That count is exact only
    when no set can contain two whole groups, so the result can differ from
    the Greene route (see :func:`table_discrepancies`).  Use
    ``greene_weight_enumerator(rank_size_counts_closed_form(...), q)`` for
    the exact distribution.
    """
    if ell < 3 or not ell < r + 1 or h < 0:
        raise ParamsOutOfScope(f"tabulated enumerator needs 3 <= l < r + 1 (l={ell}, r={r})")
    k = ell * r
    n = k + ell + h

    def N(u, b):
        if b < 0 or b * (r + 1) > u:
            return 0
        return binom(ell, b) * binom(n - b * (r + 1), u - b * (r + 1))

    def parity_block(w, j_lo, j_hi):
        # sets larger than k: rank k - b, weight q^b - 1
        total = 0
        for j in range(j_lo, j_hi + 1):
            u = n - w + j
            for b in range(1, w - j - h):
                total += (N(u, b + 1) - N(u, b + 2)) * binom(u, j) * (-1) ** j * (q**b - 1)
        return total

    def rank_block(w, j_lo, j_hi, b_hi):
        # sets of size <= k: rank u - b
        total = 0
        for j in range(max(j_lo, 0), j_hi + 1):
            u = n - w + j
            for b in range(b_hi + 1):
                total += (N(u, b) - N(u, b + 1)) * binom(u, j) * (-1) ** j * (q ** (k - (u - b)) - 1)
        return total

    A = [0] * (n + 1)
    A[0] = 1
    lr = ell * r
    for w in range(h + 2, n + 1):
        if w <= n - lr - 1:
            A[w] = parity_block(w, 0, w - h - 2)
        elif w <= n - (ell - 1) * (r + 1):
            A[w] = parity_block(w, w - n + lr + 1, w - h - 2) + rank_block(w, 0, w - n + lr, ell - 1)
        elif w <= n - (ell - 2) * (r + 1):
            A[w] = (
                parity_block(w, w - n + lr + 1, w - h - 2)
                + rank_block(w, w - n + (ell - 1) * (r + 1), w - n + lr, ell - 1)
                + rank_block(w, 0, w - n + (ell - 2) * (r + 1) + r, ell - 2)
            )
        else:
            i = next(i for i in range(ell - 2) if n - (i + 1) * (r + 1) + 1 <= w <= n - i * (r + 1))
            A[w] = (
                parity_block(w, w - n + lr + 1, w - h - 2)
                + rank_block(w, w - n + (ell - 1) * (r + 1), w - n + lr, ell - 1)
                + rank_block(w, w - n + (i + 1) * (r + 1), w - n + (i + 1) * (r + 1) + r, i + 1)
                + rank_block(w, 0, w - n + i * (r + 1) + r, i)
            )
    return _result(A, k, q, check=check, what="l-group tabulated enumerator")


# --------------------------------------------------------------------------
# Local MRC, two local groups (k + h = 2r, n = 2r + 2)


def _local_two_scope(k: int, r: int, h: int):
    if k + h != 2 * r or not r + 1 <= k < 2 * r:
        raise ParamsOutOfScope(f"two-group local MRC needs k + h = 2r and r + 1 <= k < 2r (k={k}, r={r}, h={h})")


def local_two_weight_enumerators(k: int, r: int, h: int, q: int, check: bool = True, printed: bool = False) -> WeightDistribution:
    """Weight distribution of a local MRC with two local groups.

    The minimum-weight codewords are supported off a full local group plus
    r - h - 1 further coordinates, giving A_{h+2} = 2 C(n-r-1, r-h-1) (q-1).
    ``printed=True`` substitutes the data-local value 2 C(n-r-1, r-1) (q-1),
    which over-counts whenever h > 0; it is kept for diagnostics only.
    """
    _local_two_scope(k, r, h)
    n = 2 * r + 2
    A = [0] * (n + 1)
    A[0] = 1
    A[h + 2] = 2 * binom(n - r - 1, (r - 1) if printed else (r - h - 1)) * (q - 1)
    for w in range(h + 3, r + 2):
        A[w] = _uniform_part(n, k, q, w, w - h - 3) + _two_group_tail(n, k, r, q, w, 0, w - h - 2)
    for w in range(max(r + 2, h + 3), n + 1):
        A[w] = _uniform_part(n, k, q, w, w - h - 3) + _two_group_tail(n, k, r, q, w, w - r - 1, w - h - 2)
    return _result(A, k, q, check=check, what="local two-group enumerator")


# --------------------------------------------------------------------------
# Generalized Hamming weights


def data_local_two_ghw(r: int, h: int) -> tuple[int, ...]:
    return tuple(h + 1 + s if s <= r else h + 2 + s for s in range(1, 2 * r + 1))


def local_two_ghw(k: int, r: int, h: int) -> tuple[int, ...]:
    if k + h != 2 * r:
        raise ParamsOutOfScope("need k + h = 2r")
    return tuple(h + 1 + s if s <= r - h else h + 2 + s for s in range(1, k + 1))


# --------------------------------------------------------------------------
# Higher support weights


def _hsw_uniform(n, k, q, s, w, j_hi) -> int:
    return sum(
        binom(n, w) * binom(w, j) * (-1) ** j * gaussian_binomial(k + w - n - j, s, q) for j in range(j_hi + 1)
    )


def _hsw_group(n, k, r, q, s, w, j_lo, j_hi) -> int:
    total = 0
    for j in range(max(j_lo, 0), j_hi + 1):
        top = k + w - n - j
        total += (
            2
            * binom(n - r - 1, n - w + j - r - 1)
            * binom(n - w + j, j)
            * (-1) ** j
            * (gaussian_binomial(top + 1, s, q) - gaussian_binomial(top, s, q))
        )
    return total


def _hsw_high(n, k, q, s, w_lo, j_span) -> list[int]:
    A = [0] * (n + 1)
    for w in range(w_lo, n + 1):
        A[w] = binom(n, w) * sum(
            binom(w, j) * (-1) ** j * gaussian_binomial(k - n + w - j, s, q) for j in range(w - n + j_span + 1)
        )
    return A


def data_local_two_hsw(r: int, h: int, q: int, s: int, check: bool = True) -> WeightDistribution:
    """s-th support weights A^(s)_w of a two-group data-local MRC."""
    k, n = 2 * r, 2 * r + 2 + h
    if not 1 <= s <= k:
        raise SOutOfRange(f"s={s} outside 1..{k}")
    if s > r:
        A = _hsw_high(n, k, q, s, h + 2 + s, 2 * r - s)
        return _result(A, k, q, s, check, f"data-local two-group HSW s={s}")
    A = [0] * (n + 1)
    if s < r:
        A[h + 1 + s] = 2 * binom(n - r - 1, r - s)
        for w in range(h + 2 + s, r + h + 2):
            A[w] = _hsw_uniform(n, k, q, s, w, w - h - 2 - s) + _hsw_group(n, k, r, q, s, w, 0, w - h - 1 - s)
    else:
        A[h + 1 + r] = 2
    for w in range(max(r + h + 2, h + 2 + s), n + 1):
        A[w] = _hsw_uniform(n, k, q, s, w, w - h - 2 - s) + _hsw_group(n, k, r, q, s, w, w - r - h - 1, w - h - 1 - s)
    return _result(A, k, q, s, check, f"data-local two-group HSW s={s}")


def local_two_hsw(
    k: int, r: int, h: int, q: int, s: int, check: bool = True, printed_limit: bool = False, printed: bool = False
) -> WeightDistribution:
    """s-th support weights of a two-group local MRC.

    For s = r - h the lower summation limit of the group term defaults to
    w - r - 1 (the limit used for 1 <= s < r - h and for the ordinary weights);
    ``printed_limit=True`` uses w - r - h - 1 instead.  The extra terms carry
    a vanishing Gaussian-binomial difference, so both give the same numbers.

    For s < r - h the first nonzero value is A_{h+1+s} = 2 C(n-r-1, r-h-s).
    ``printed=True`` uses 2 C(n-r-1, r-s) instead (diagnostics only).
    """
    _local_two_scope(k, r, h)
    n = 2 * r + 2
    if not 1 <= s <= k:
        raise SOutOfRange(f"s={s} outside 1..{k}")
    if s > r - h:
        A = _hsw_high(n, k, q, s, h + 2 + s, 2 * r - h - s)
        return _result(A, k, q, s, check, f"local two-group HSW s={s}")
    A = [0] * (n + 1)
    if s < r - h:
        A[h + 1 + s] = 2 * binom(n - r - 1, (r - s) if printed else (r - h - s))
        for w in range(h + 2 + s, r + 2):
            A[w] = _hsw_uniform(n, k, q, s, w, w - h - 2 - s) + _hsw_group(n, k, r, q, s, w, 0, w - h - 1 - s)
        j_lo_offset = r + 1
    else:
        A[r + 1] = 2
        j_lo_offset = r + h + 1 if printed_limit else r + 1
    for w in range(max(r + 2, h + 2 + s), n + 1):
        A[w] = _hsw_uniform(n, k, q, s, w, w - h - 2 - s) + _hsw_group(n, k, r, q, s, w, w - j_lo_offset, w - h - 1 - s)
    return _result(A, k, q, s, check, f"local two-group HSW s={s}")


# --------------------------------------------------------------------------
# Diagnostics


def first_difference(a, b) -> tuple[int, int, int] | None:
    """First index w where two coefficient sequences differ, with both values."""
    a, b = list(a), list(b)
    size = max(len(a), len(b))
    a += [0] * (size - len(a))
    b += [0] * (size - len(b))
    for w, (x, y) in enumerate(zip(a, b)):
        if x != y:
            return w, x, y
    return None


def table_discrepancies(ell: int, r: int, h: int, q: int) -> list[tuple[int, int, int]]:
    """Coefficients where the tabulated l-group enumerator disagrees with Greene.

    Returns ``(w, tabulated, exact)`` triples; the exact values come from the
    Greene specialisation of the closed-form rank-size counts.
    """
    from .matroid import MrcParams, rank_size_counts_closed_form
    from .tutte import greene_weight_enumerator

    table = data_local_ell_weight_enumerators(ell, r, h, q, check=False).A
    N = rank_size_counts_closed_form(MrcParams(ell * r, r, h))
    exact = greene_weight_enumerator(N, q, check=False).A
    return [(w, a, b) for w, (a, b) in enumerate(zip(table, exact)) if a != b]
