import random
import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from realcyc.cyclofield import Cyclotomic, totient  # noqa: E402

_acceptance: dict = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): exit criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    number, title = marker.args
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        entry = _acceptance.setdefault(number, {"title": title, "ok": True, "n": 0, "failed": []})
        entry["n"] += 1
        if not rep.passed:
            entry["ok"] = False
            entry["failed"].append(item.name)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_acceptance):
        e = _acceptance[number]
        status = "PASS" if e["ok"] else "FAIL"
        line = f"criterion {number}: {status}  {e['title']}  ({e['n']} checks)"
        if e["failed"]:
            line += f"  failed: {', '.join(e['failed'])}"
        terminalreporter.write_line(line)


def random_rational(rng, span=5, den=4):
    return Fraction(rng.randint(-span, span), rng.randint(1, den))


def random_cyclotomic(rng, n, span=5, den=4, density=1.0):
    return Cyclotomic(
        n,
        [random_rational(rng, span, den) if rng.random() < density else 0 for _ in range(totient(n))],
    )


@pytest.fixture
def rng():
    return random.Random(20240611)
