import pytest
from hypothesis import HealthCheck, settings, strategies as st

from qkquintic.gv import GVTable
from qkquintic.scalars import QRatFun

settings.register_profile("default", max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

small_ints = st.integers(min_value=-6, max_value=6)


@st.composite
def ratfuns(draw, max_deg=4):
    num = draw(st.lists(small_ints, min_size=0, max_size=max_deg + 1))
    den = draw(st.lists(small_ints, min_size=1, max_size=max_deg + 1).filter(lambda c: any(c)))
    shift = draw(st.integers(min_value=-2, max_value=2))
    return QRatFun.from_poly(num) / QRatFun.from_poly(den) * QRatFun.q(shift)


@st.composite
def gv_tables(draw, degree=6):
    vals = draw(st.lists(st.integers(min_value=-10**6, max_value=10**6), min_size=degree, max_size=degree))
    return GVTable(tuple(vals))


@pytest.fixture(scope="session")
def known_gv():
    return GVTable.default()


@pytest.fixture(scope="session")
def flow6():
    from qkquintic.flow import solve_epsilon

    return solve_epsilon(6)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
