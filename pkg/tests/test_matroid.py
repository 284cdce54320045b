import itertools
import random

import pytest

from mrcweights.code import IndexOutOfRange, rank_of_columns
from mrcweights.matroid import (
    LOCAL,
    CodeMatroid,
    MrcParams,
    ParamsOutOfScope,
    RankSizeDistribution,
    UniformMatroid,
    binom,
    ghw_from_matroid,
    is_independent,
    mrc_matroid,
    rank,
    rank_size_counts_closed_form,
    rank_size_distribution,
)


def test_params_layout_data_local():
    p = MrcParams(4, 2, 1)
    assert (p.n, p.ell, p.d_min) == (7, 2, 3)
    assert p.groups == (frozenset({1, 2, 5}), frozenset({3, 4, 6}))
    assert p.global_parities == frozenset({7})
    assert p.ungrouped == frozenset({7})


def test_params_layout_local():
    p = MrcParams(3, 2, 1, LOCAL)
    assert (p.n, p.ell) == (6, 2)
    assert p.global_parities == frozenset({4})
    assert p.groups == (frozenset({1, 2, 5}), frozenset({3, 4, 6}))
    assert p.ungrouped == frozenset()


def test_params_validation():
    with pytest.raises(ParamsOutOfScope):
        MrcParams(5, 2, 1)
    with pytest.raises(ParamsOutOfScope):
        MrcParams(4, 3, 1, LOCAL)
    with pytest.raises(ParamsOutOfScope):
        MrcParams(0, 1, 0)
    with pytest.raises(ValueError):
        MrcParams(4, 2, 1, "global")


def test_binomial_convention():
    assert binom(0, 0) == 1
    assert binom(3, -1) == binom(3, 4) == binom(-1, 0) == 0
    assert all(binom(a, b) == binom(a - 1, b) + binom(a - 1, b - 1) for a in range(1, 8) for b in range(1, a))


def test_mrc_rank_examples():
    m = mrc_matroid(MrcParams(4, 2, 1))
    assert rank(m, {1, 2, 5}) == 2
    assert rank(m, set()) == 0
    assert rank(m, {1, 2, 3, 4, 5}) == 4
    assert is_independent(m, set())
    assert not is_independent(m, {1, 2, 5})
    assert not is_independent(m, {1, 2, 3, 4, 7})  # five elements, rank 4
    with pytest.raises(IndexOutOfRange):
        rank(m, {8})


def test_mrc_rank_matches_code_on_verified_instance(dl_8):
    m = mrc_matroid(dl_8.params)
    assert rank_of_columns(dl_8.code, {1, 2, 3, 4, 5}) == m.rank({1, 2, 3, 4, 5}) == 4


def test_uniform_distribution():
    for n, k in [(5, 2), (6, 6), (7, 3)]:
        N = rank_size_distribution(UniformMatroid(n, k))
        for u in range(n + 1):
            for v in range(k + 1):
                assert N[u, v] == (binom(n, u) if v == min(u, k) else 0)


def test_two_group_near_rank_count():
    p = MrcParams(6, 3, 2)
    N = rank_size_distribution(mrc_matroid(p))
    n, r = p.n, p.r
    for u in range(r + 1, 2 * r + 1):
        assert N[u, u - 1] == 2 * binom(n - r - 1, u - r - 1)
    assert N.row_sums_ok()


CLOSED_FORM_CASES = [
    MrcParams(4, 2, 1),
    MrcParams(6, 3, 2),
    MrcParams(2, 2, 0),
    MrcParams(9, 3, 1),
    MrcParams(8, 4, 0),
    MrcParams(12, 4, 1),
    MrcParams(3, 2, 1, LOCAL),
    MrcParams(5, 3, 1, LOCAL),
    MrcParams(7, 4, 1, LOCAL),
    MrcParams(5, 4, 3, LOCAL),
]


@pytest.mark.parametrize("params", CLOSED_FORM_CASES, ids=str)
def test_closed_form_counts_match_enumeration(params):
    closed = rank_size_counts_closed_form(params)
    assert closed.row_sums_ok()
    assert closed == rank_size_distribution(mrc_matroid(params))


def test_simple_differences_overcount_when_two_groups_fit():
    p = MrcParams(9, 3, 1)
    exact = rank_size_counts_closed_form(p)
    simple = rank_size_counts_closed_form(p, as_printed=True)
    assert exact != simple
    # an 8-set holding two whole groups is counted twice among "one group" sets
    assert (exact[8, 7], simple[8, 7]) == (372, 375)
    assert exact[8, 6] == simple[8, 6] == 3
    # with two groups they coincide
    p2 = MrcParams(6, 3, 2)
    assert rank_size_counts_closed_form(p2) == rank_size_counts_closed_form(p2, as_printed=True)


def test_closed_form_scope():
    with pytest.raises(ParamsOutOfScope):
        rank_size_counts_closed_form(MrcParams(6, 2, 1))  # l = 3 = r + 1
    with pytest.raises(ParamsOutOfScope):
        rank_size_counts_closed_form(MrcParams(7, 3, 2, LOCAL))  # l = 3 local


def test_rank_size_partitions_sum():
    m = mrc_matroid(MrcParams(6, 3, 2))
    whole = rank_size_distribution(m)
    parts = [rank_size_distribution(m, 3, i) for i in range(3)]
    summed = tuple(tuple(sum(p.N[u][v] for p in parts) for v in range(m.k + 1)) for u in range(m.n + 1))
    assert summed == whole.N


def test_rank_size_json_round_trip():
    N = rank_size_counts_closed_form(MrcParams(4, 2, 1))
    assert RankSizeDistribution.from_json(N.to_json()) == N


def test_code_matroid_matches_rank_of_columns(dl_8):
    m = CodeMatroid(dl_8.code)
    table = m.rank_table()
    rng = random.Random(7)
    for _ in range(40):
        U = {j for j in range(1, m.n + 1) if rng.random() < 0.5}
        mask = sum(1 << (j - 1) for j in U)
        assert table[mask] == rank_of_columns(dl_8.code, U) == m.rank(U)


@pytest.mark.parametrize(
    "m",
    [UniformMatroid(6, 3), mrc_matroid(MrcParams(4, 2, 1)), mrc_matroid(MrcParams(5, 3, 1, LOCAL))],
    ids=repr,
)
def test_matroid_axioms(m):
    table = m.rank_table()
    assert table[0] == 0
    for mask in range(1 << m.n):
        for j in range(m.n):
            bit = 1 << j
            if not mask & bit:
                assert table[mask | bit] - table[mask] in (0, 1)
    # exchange on independent sets
    indep = [mask for mask in range(1 << m.n) if table[mask] == bin(mask).count("1")]
    rng = random.Random(3)
    for I, J in (rng.sample(indep, 2) for _ in range(200)):
        if bin(I).count("1") < bin(J).count("1"):
            assert any(table[I | (1 << j)] == table[I] + 1 for j in range(m.n) if J >> j & 1 and not I >> j & 1)


def test_ghw_from_matroid():
    assert ghw_from_matroid(UniformMatroid(7, 3)) == (5, 6, 7)
    assert ghw_from_matroid(mrc_matroid(MrcParams(6, 3, 2))) == (4, 5, 6, 8, 9, 10)


def test_ghw_from_matroid_matches_brute(small_instance):
    from mrcweights.code import ghw_brute

    assert ghw_from_matroid(CodeMatroid(small_instance.code)) == ghw_brute(small_instance.code)
    assert ghw_from_matroid(mrc_matroid(small_instance.params)) == ghw_brute(small_instance.code)


def test_all_subsets_of_small_uniform():
    m = UniformMatroid(4, 2)
    for size in range(5):
        for U in itertools.combinations(range(1, 5), size):
            assert m.rank(U) == min(size, 2)
