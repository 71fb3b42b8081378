import os

import pytest
import sympy
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default",
    deadline=None,
    max_examples=25,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

INSTANCES = os.path.join(os.path.dirname(__file__), "..", "src", "linprod", "data", "instances")


def instance_path(name):
    return os.path.abspath(os.path.join(INSTANCES, name))


def to_sympy(f, syms):
    """Our polynomial as a sympy expression (string round trip, so it is independent)."""
    return sympy.sympify(str(f).replace("^", "**"), locals=syms)


def sympy_symbols(ring):
    return {v: sympy.Symbol(v) for v in ring.variables}


@pytest.fixture
def xyz():
    from linprod.polyring import Ring

    return Ring(("x", "y", "z"))


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(RESULTS):
        ok, detail = RESULTS[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
