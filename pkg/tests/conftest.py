import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

ACCEPTANCE_RESULTS: dict[int, tuple[str, str]] = {}


@pytest.fixture
def acceptance(request):
    """Record one PASS/FAIL line per acceptance criterion for the terminal summary."""
    marker = request.node.get_closest_marker("criterion")
    number, title = marker.args
    yield
    call = getattr(request.node, "rep_call", None)
    ok = call is not None and call.passed
    previous = ACCEPTANCE_RESULTS.get(number)
    if previous is None or previous[0] == "PASS":
        ACCEPTANCE_RESULTS[number] = ("PASS" if ok else "FAIL", title)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    setattr(item, "rep_" + report.when, report)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_RESULTS):
        status, title = ACCEPTANCE_RESULTS[number]
        terminalreporter.write_line(f"criterion {number:2d}: {status}  {title}")
