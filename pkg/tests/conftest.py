import random
from fractions import Fraction

import pytest

from stochtensor import enumerate_latin_squares, latin_to_tensor, tensor_E, tensor_F
from stochtensor.polytope import enumerate_vertices


@pytest.fixture(scope="session")
def E():
    return tensor_E()


@pytest.fixture(scope="session")
def F():
    return tensor_F()


@pytest.fixture(scope="session")
def perms3():
    return [latin_to_tensor(L) for L in enumerate_latin_squares(3)]


@pytest.fixture(scope="session")
def vertices3():
    return enumerate_vertices(3)


@pytest.fixture
def rng():
    return random.Random(20240601)


def random_rational(rng, lo=-5, hi=5, den=7):
    return Fraction(rng.randint(lo * den, hi * den), rng.randint(1, den))


ACCEPTANCE_RESULTS = []


@pytest.fixture
def criterion(request):
    """Record a pass/fail line for an acceptance criterion."""
    entry = {"id": None, "title": None, "ok": False, "note": ""}

    def start(ident, title):
        entry["id"], entry["title"] = ident, title
        return entry

    yield start
    if entry["id"] is not None:
        rep = getattr(request.node, "rep_call", None)
        entry["ok"] = rep is not None and rep.passed
        ACCEPTANCE_RESULTS.append(entry)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for e in sorted(ACCEPTANCE_RESULTS, key=lambda e: e["id"]):
        status = "PASS" if e["ok"] else "FAIL"
        note = f"  ({e['note']})" if e["note"] else ""
        terminalreporter.write_line(f"[{status}] AC{e['id']:>2}: {e['title']}{note}")
