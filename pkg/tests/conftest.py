import re

import pytest

from mrcweights import GF, MrcParams, construct_mrc
from mrcweights.matroid import LOCAL

# (k, r, h, variant, q) -> attempts needed from seed 1, frozen from the first run
INSTANCES = {
    "dl_8": ((4, 2, 1, "data-local", 8), 1),
    "dl_16": ((4, 2, 1, "data-local", 16), 1),
    "local_8": ((3, 2, 1, LOCAL, 8), 1),
    "ell3_4": ((9, 3, 1, "data-local", 4), 354),
    "azure": ((6, 3, 2, "data-local", 16), 295),
}

_cache = {}


def instance(name):
    if name not in _cache:
        (k, r, h, variant, q), attempts = INSTANCES[name]
        inst = construct_mrc(MrcParams(k, r, h, variant), GF(q), seed=1)
        assert inst.attempts == attempts
        _cache[name] = inst
    return _cache[name]


@pytest.fixture(params=["dl_8", "dl_16", "local_8"])
def small_instance(request):
    return instance(request.param)


@pytest.fixture
def dl_8():
    return instance("dl_8")


@pytest.fixture
def local_8():
    return instance("local_8")


# --------------------------------------------------------------------------
# One pass/fail line per acceptance criterion at the end of the run

_criteria: dict[int, list[str]] = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    m = re.search(r"test_acceptance\.py::test_criterion_(\d+)", report.nodeid)
    if m:
        _criteria.setdefault(int(m.group(1)), []).append(report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        outcomes = _criteria[number]
        verdict = "PASS" if all(o == "passed" for o in outcomes) else "FAIL"
        terminalreporter.write_line(f"criterion {number:2d}: {verdict} ({len(outcomes)} check(s))")
