import numpy as np
import pytest

from mcs_dkp import dkp
from mcs_dkp.suites import SuiteConfig, run_suites


@pytest.fixture(scope="session")
def basis():
    return dkp.build_dkp_basis(1.0)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture(scope="session")
def default_reports():
    """All suites at the default configuration, run once per session."""
    return {r.id: r for r in run_suites(SuiteConfig())}


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def acceptance():
    """Record one summary line per acceptance criterion and assert it."""

    def record(number: int, title: str, measured: dict):
        # measured: name -> (value, bound, kind) with kind "<", "<=", ">" or "=="
        failures = []
        for name, (value, bound, kind) in measured.items():
            ok = {"<": value < bound, "<=": value <= bound, ">": value > bound, "==": value == bound}[kind]
            if not ok:
                failures.append(f"{name}: {value!r} not {kind} {bound!r}")
        status = "PASS" if not failures else "FAIL"
        worst = ", ".join(f"{k}={v[0]:.1e}" if isinstance(v[0], float) else f"{k}={v[0]}"
                          for k, v in measured.items())
        ACCEPTANCE_LINES.append(f"criterion {number:2d} {status}: {title} [{worst}]")
        assert not failures, "; ".join(failures)

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
