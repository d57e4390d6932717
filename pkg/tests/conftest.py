import os

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default", deadline=None, suppress_health_check=[HealthCheck.too_slow], max_examples=60
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture(autouse=True, scope="session")
def gadget_cache(tmp_path_factory):
    """Keep the on-disk gadget cache inside the test session."""
    old = os.environ.get("EMPIRECOL_CACHE")
    os.environ["EMPIRECOL_CACHE"] = str(tmp_path_factory.mktemp("gadget-cache"))
    yield
    if old is None:
        os.environ.pop("EMPIRECOL_CACHE", None)
    else:
        os.environ["EMPIRECOL_CACHE"] = old


CRITERIA = pytest.StashKey[dict]()


def pytest_configure(config):
    config.stash[CRITERIA] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call":
        return
    detail = ""
    if report.failed:
        crash = getattr(report.longrepr, "reprcrash", None)
        detail = (crash.message if crash else str(report.longrepr)).splitlines()[0]
    item.config.stash[CRITERIA][marker.args[0]] = (report.passed, item.name, detail)


def pytest_terminal_summary(terminalreporter, config):
    results = config.stash.get(CRITERIA, {})
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        ok, name, detail = results[n]
        line = f"criterion {n:>2}: {'PASS' if ok else 'FAIL'}  {name}"
        terminalreporter.write_line(f"{line}  ({detail})" if detail else line)
