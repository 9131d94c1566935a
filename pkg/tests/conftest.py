import pytest

from lagverify.enumeration import PipelineConfig, run_pipeline

_criteria = []


@pytest.fixture(scope="session")
def full_run():
    """The desk-scale pipeline run every acceptance check compares against."""
    return run_pipeline(PipelineConfig(s_max=30, n_cap=10**6))


@pytest.fixture(scope="session")
def small_run():
    return run_pipeline(PipelineConfig(s_max=17, n_cap=400))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    label = getattr(item.function, "criterion", None)
    if label and rep.when == "call":
        _criteria.append((label, rep.passed))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok in sorted(_criteria):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {label}")
