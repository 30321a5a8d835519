import pytest
from hypothesis import strategies as st

from modknot.words import LorenzWord, minimal_period

_results: list[tuple[int, str, str]] = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    marker = report.user_properties and dict(report.user_properties).get("criterion")
    if marker:
        _results.append((marker[0], marker[1], "PASS" if report.passed else "FAIL"))


@pytest.hookimpl(tryfirst=True)
def pytest_runtest_setup(item):
    m = item.get_closest_marker("criterion")
    if m:
        item.user_properties.append(("criterion", m.args))


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, outcome in sorted(_results):
        terminalreporter.write_line(f"[{outcome}] criterion {number:>2}: {title}")


def _is_lorenz(s: str) -> bool:
    return len(s) >= 2 and minimal_period(s) == len(s)


lorenz_word_strategy = (
    st.text(alphabet="LR", min_size=2, max_size=16).filter(_is_lorenz).map(LorenzWord)
)


@pytest.fixture
def W():
    return LorenzWord
