import pytest

ACCEPTANCE = pytest.StashKey[dict]()


def pytest_configure(config):
    config.stash[ACCEPTANCE] = {}


@pytest.fixture
def criterion(request):
    """Run a numbered acceptance check, record PASS or FAIL, and re-raise."""
    results = request.config.stash[ACCEPTANCE]

    def run(n, check):
        try:
            check()
        except BaseException:
            results[n] = "FAIL"
            raise
        results[n] = "PASS"

    return run


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = config.stash.get(ACCEPTANCE, {})
    if not results:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for n in sorted(results):
        terminalreporter.write_line(f"criterion {n}: {results[n]}")
