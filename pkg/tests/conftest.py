import os
import sys

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, os.path.dirname(__file__))

from phir import PhiEmpty, PhiIdentity, PhiOmega, PhiPower, PhiZero, Zn, make_product  # noqa: E402

settings.register_profile("phir", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("phir")

SMALL_MODULI = [(n,) for n in range(2, 31)] + [(a, b) for a in range(2, 13) for b in range(2, 13) if a * b <= 36]


def ring_of(moduli):
    return Zn(moduli[0]) if len(moduli) == 1 else make_product([Zn(n) for n in moduli])


def as_tuple(R, x):
    return tuple(R.parts(x))


def as_set(I):
    """Element set of a package ideal in the oracle's tuple encoding."""
    return frozenset(as_tuple(I.ring, x) for x in I.elements())


def from_tuple(R, t):
    return R.join(t)


PACKAGE_PHIS = {
    "empty": PhiEmpty(),
    "zero": PhiZero(),
    "id": PhiIdentity(),
    "pow:2": PhiPower(2),
    "pow:3": PhiPower(3),
    "pow:4": PhiPower(4),
    "omega": PhiOmega(),
}


# acceptance criteria report: one PASS/FAIL line per criterion

_acceptance: dict = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or rep.when != "call" and not (rep.when == "setup" and rep.failed):
        return
    n = marker.args[0]
    ok = rep.passed and _acceptance.get(n, True)
    _acceptance[n] = ok


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_acceptance):
        terminalreporter.write_line(f"criterion {n:>2}: {'PASS' if _acceptance[n] else 'FAIL'}")
