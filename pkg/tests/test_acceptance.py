"""Acceptance criteria 1-10, one test per criterion.

Each test prints a ``criterion N: PASS|FAIL`` line; the conftest hook repeats
the verdicts in the pytest terminal summary.  The file can also be run
directly (``python3 tests/test_acceptance.py``) for a plain pass/fail listing.
"""

import io
import itertools
import time
from contextlib import redirect_stdout

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import instance
from mrcweights import GF, MrcParams, construct_mrc
from mrcweights.cli import main as cli_main
from mrcweights.code import (
    LinearCode,
    dual,
    enumerate_support_weight_distribution,
    enumerate_weight_distribution,
    ghw_brute,
    matrix_rank,
    reed_solomon,
)
from mrcweights.formulas import (
    data_local_ell_weight_enumerators,
    data_local_two_dual_weight_enumerators,
    data_local_two_ghw,
    data_local_two_hsw,
    data_local_two_weight_enumerators,
    first_difference,
    local_two_ghw,
    local_two_hsw,
    local_two_weight_enumerators,
    mds_weight_enumerators,
    table_discrepancies,
)
from mrcweights.gf import GF as Field
from mrcweights.matroid import (
    LOCAL,
    CodeMatroid,
    UniformMatroid,
    binom,
    ghw_from_matroid,
    mrc_matroid,
    rank_size_counts_closed_form,
    rank_size_distribution,
)
from mrcweights.mrc import ConstructionFailed, verify_data_local_mrc, verify_local_mrc
from mrcweights.tutte import (
    britz_support_weight_enumerator,
    gaussian_binomial,
    greene_weight_enumerator,
    macwilliams_transform,
    tutte_from_distribution,
    tutte_mds,
)

AZURE = (1, 0, 0, 0, 450, 3960, 34680, 304080, 1782405, 5847480, 8804160)


def report(number: int, ok: bool, detail: str = ""):
    print(f"criterion {number}: {'PASS' if ok else 'FAIL'}" + (f" ({detail})" if detail else ""))


# --------------------------------------------------------------------------


def test_criterion_1_azure_regression():
    buf = io.StringIO()
    start = time.perf_counter()
    with redirect_stdout(buf):
        code = cli_main(["weights", "--params", "k=6,r=3,h=2", "--q", "16", "--method", "formula"])
    elapsed = time.perf_counter() - start
    A = tuple(int(x) for x in buf.getvalue().split())
    ok = code == 0 and A == AZURE and sum(A) == 16**6 == 16_777_216 and elapsed < 1.0
    report(1, ok, f"{elapsed:.3f}s")
    assert code == 0
    assert A == AZURE
    assert sum(A) == 16_777_216
    assert elapsed < 1.0


def test_criterion_2_three_routes_data_local_two_groups():
    p = MrcParams(4, 2, 1)
    N = rank_size_distribution(mrc_matroid(p))
    for q in (8, 16):
        start = time.perf_counter()
        inst = construct_mrc(p, GF(q), seed=1)
        assert inst.verified and verify_data_local_mrc(inst.code, p)
        formula = data_local_two_weight_enumerators(2, 1, q).A
        greene = greene_weight_enumerator(N, q).A
        brute = enumerate_weight_distribution(inst.code).A
        elapsed = time.perf_counter() - start
        report(2, formula == greene == brute and elapsed < 5, f"q={q}, {elapsed:.2f}s")
        assert formula == greene == brute
        assert elapsed < 5.0


def test_criterion_3_three_routes_data_local_three_groups():
    p = MrcParams(9, 3, 1)
    start = time.perf_counter()
    q = 4
    while True:
        try:
            inst = construct_mrc(p, GF(q), seed=1)
            break
        except ConstructionFailed:
            q = {4: 5, 5: 7, 7: 8}.get(q, q * 2)
    table = data_local_ell_weight_enumerators(3, 3, 1, q, check=False).A
    greene_closed = greene_weight_enumerator(rank_size_counts_closed_form(p), q).A
    greene_enum = greene_weight_enumerator(rank_size_distribution(mrc_matroid(p)), q).A
    brute = enumerate_weight_distribution(inst.code).A
    elapsed = time.perf_counter() - start

    exact_routes = greene_closed == greene_enum == brute
    diffs = table_discrepancies(3, 3, 1, q)
    printed_counts = greene_weight_enumerator(rank_size_counts_closed_form(p, as_printed=True), q, check=False).A
    detail = f"q={q}, {elapsed:.2f}s, exact routes agree={exact_routes}"
    if diffs:
        detail += (
            f"; tabulated formula differs from Greene at {len(diffs)} weights, first (w, table, Greene) = {diffs[0]};"
            f" tabulated formula equals Greene over the simple-difference counts: {table == printed_counts};"
            f" tabulated sum = {sum(table)} vs q^k = {q ** 9}"
        )
    report(3, exact_routes and not diffs and elapsed < 60, detail)
    assert exact_routes, "Greene (closed-form counts), Greene (enumeration) and brute force disagree"
    assert elapsed < 60.0
    assert table == brute, f"tabulated l>=3 enumerator disagrees with the exact routes: {detail}"


def test_criterion_4_three_routes_local_two_groups():
    p = MrcParams(3, 2, 1, LOCAL)
    start = time.perf_counter()
    inst = construct_mrc(p, GF(8), seed=1)
    assert verify_local_mrc(inst.code, p)
    formula = local_two_weight_enumerators(3, 2, 1, 8).A
    greene = greene_weight_enumerator(rank_size_distribution(mrc_matroid(p)), 8).A
    brute = enumerate_weight_distribution(inst.code).A
    elapsed = time.perf_counter() - start
    report(4, formula == greene == brute and elapsed < 5, f"{elapsed:.2f}s")
    assert formula == greene == brute
    assert elapsed < 5.0


def test_criterion_5_dual_consistency():
    ok = True
    for name, q in (("dl_8", 8), ("dl_16", 16)):
        inst = instance(name)
        closed = data_local_two_dual_weight_enumerators(2, 1, q).A
        via_macwilliams = macwilliams_transform(data_local_two_weight_enumerators(2, 1, q), 7, 4, q).A
        brute = enumerate_weight_distribution(dual(inst.code)).A
        ok &= closed == via_macwilliams == brute
        assert closed == via_macwilliams == brute, q
    report(5, ok)


def test_criterion_6_matroid_identity():
    names = ["dl_8", "dl_16", "local_8", "azure", "ell3_4"]
    for name in names:
        inst = instance(name)
        assert inst.code.n <= 13
        assert np.array_equal(CodeMatroid(inst.code).rank_table(), mrc_matroid(inst.params).rank_table()), name
    report(6, True, f"{len(names)} instances")


def _wei_dual(d, dd, n):
    return set(d) == set(range(1, n + 1)) - {n + 1 - x for x in dd}


def test_criterion_7_generalized_hamming_weights():
    assert data_local_two_ghw(3, 2) == (4, 5, 6, 8, 9, 10)
    for name in ("dl_8", "dl_16", "local_8"):
        inst = instance(name)
        p = inst.params
        formula = data_local_two_ghw(p.r, p.h) if p.variant != LOCAL else local_two_ghw(p.k, p.r, p.h)
        assert formula == ghw_from_matroid(mrc_matroid(p)) == ghw_brute(inst.code), name
        assert _wei_dual(ghw_brute(inst.code), ghw_brute(dual(inst.code)), inst.code.n), name
    report(7, True)


def test_criterion_8_higher_support_weights():
    start = time.perf_counter()
    for name in ("dl_8", "dl_16", "local_8"):
        inst = instance(name)
        p, q = inst.params, inst.code.q
        N = rank_size_distribution(mrc_matroid(p))
        for s in range(1, p.k + 1):
            if p.variant == LOCAL:
                formula = local_two_hsw(p.k, p.r, p.h, q, s).A
            else:
                formula = data_local_two_hsw(p.r, p.h, q, s).A
            britz = britz_support_weight_enumerator(N, q, s).A
            brute = enumerate_support_weight_distribution(inst.code, s).A
            assert formula == britz == brute, (name, s)
            assert sum(formula) == gaussian_binomial(p.k, s, q)
        W = enumerate_weight_distribution(inst.code).A
        W1 = enumerate_support_weight_distribution(inst.code, 1).A
        assert W == tuple([1] + [(q - 1) * a for a in W1[1:]])
        if p.variant != LOCAL:
            assert data_local_two_hsw(p.r, p.h, q, p.r)[p.h + 1 + p.r] == 2
    assert data_local_two_hsw(3, 2, 16, 3)[6] == 2
    elapsed = time.perf_counter() - start
    report(8, elapsed < 60, f"{elapsed:.2f}s")
    assert elapsed < 60.0


def test_criterion_9_mds_baseline():
    rs = reed_solomon(GF(5), 4, 2)
    assert mds_weight_enumerators(4, 2, 5).A == enumerate_weight_distribution(rs).A == (1, 0, 0, 16, 8)
    for n in range(1, 11):
        for k in range(n + 1):
            assert tutte_mds(n, k) == tutte_from_distribution(rank_size_distribution(UniformMatroid(n, k))), (n, k)
    report(9, True)


@st.composite
def _codes(draw):
    q = draw(st.sampled_from([2, 3, 4, 5, 7, 8]))
    n = draw(st.integers(2, 7))
    k = draw(st.integers(1, min(n, 3)))
    rows = draw(st.lists(st.lists(st.integers(0, q - 1), min_size=n, max_size=n), min_size=k, max_size=k))
    F = GF(q)
    if matrix_rank(F, rows) < k:
        rows = [[int(i == j) for j in range(n)] for i in range(k)]
    return LinearCode(F, tuple(tuple(r) for r in rows))


@settings(max_examples=50, deadline=None)
@given(_codes())
def _macwilliams_never_fails(code):
    W = enumerate_weight_distribution(code)
    macwilliams_transform(W, code.n, code.k, code.q)


def test_criterion_10_property_suite():
    # field axioms, exhaustively, for every field of size <= 16
    for q in (2, 3, 4, 5, 7, 8, 9, 11, 13, 16):
        F = Field(q)
        for a, b, c in itertools.product(range(q), repeat=3):
            assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
            assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
            assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
        for a, b in itertools.product(range(q), repeat=2):
            assert F.add(a, b) == F.add(b, a) and F.mul(a, b) == F.mul(b, a)
        for a in range(q):
            assert F.add(a, 0) == a and F.mul(a, 1) == a and F.add(a, F.neg(a)) == 0
            assert a == 0 or F.mul(a, F.inv(a)) == 1

    # Tutte coefficients non-negative on every constructed matroid
    for name in ("dl_8", "dl_16", "local_8", "ell3_4"):
        T = tutte_from_distribution(rank_size_distribution(CodeMatroid(instance(name).code)))
        assert all(c >= 0 for c in T.coeffs.values()), name

    # MacWilliams divisibility on valid inputs
    for name in ("dl_8", "dl_16", "local_8", "ell3_4"):
        code = instance(name).code
        macwilliams_transform(enumerate_weight_distribution(code), code.n, code.k, code.q)
    _macwilliams_never_fails()

    # q-analogue identity on t <= 12
    from fractions import Fraction
    from math import comb

    for q in (2, 3, 4, 5, 8, 16):
        for t in range(13):
            for s in range(t + 1):
                denom = 1
                for j in range(s):
                    denom *= q**s - q**j
                total = sum(
                    (-1) ** (s - i) * q ** comb(s - i, 2) * gaussian_binomial(s, i, q) * q ** (i * t) for i in range(s + 1)
                )
                assert Fraction(total, denom) == gaussian_binomial(t, s, q)

    # boundary terms never push a coefficient negative on fields where the codes exist
    for r in range(1, 5):
        for h in range(4):
            for q in (8, 16):
                data_local_two_weight_enumerators(r, h, q)
                data_local_two_dual_weight_enumerators(r, h, q)
                for s in range(1, 2 * r + 1):
                    data_local_two_hsw(r, h, q, s)
    for r in range(2, 6):
        for k in range(r + 1, 2 * r):
            for s in range(1, k + 1):
                local_two_hsw(k, r, 2 * r - k, 16, s)
            local_two_weight_enumerators(k, r, 2 * r - k, 16)
    assert binom(3, -1) == binom(3, 4) == binom(-2, 0) == 0 and binom(0, 0) == 1
    report(10, True)


if __name__ == "__main__":
    tests = [obj for name, obj in sorted(globals().items()) if name.startswith("test_criterion_")]
    tests.sort(key=lambda f: int(f.__name__.split("_")[2]))
    for test in tests:
        try:
            test()
        except AssertionError as exc:
            print(f"  {test.__name__} failed: {exc}")
