import pytest

from asmkit import asm


@pytest.fixture(params=["python", "compiled"])
def backend(request):
    """Run a test once per kernel backend and restore the default after."""
    before = asm.BACKEND
    try:
        asm.use_backend(request.param)
    except ImportError:
        pytest.skip("compiled extension not built")
    yield request.param
    asm.use_backend(before)


# ------------------------------------------------------ acceptance summary

_CRITERIA = {}
_OUTCOMES = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance: acceptance criteria suite")


def pytest_collection_modifyitems(config, items):
    for item in items:
        if item.name.startswith("test_criterion_"):
            doc = (item.function.__doc__ or item.name).strip().splitlines()[0]
            _CRITERIA[item.nodeid] = doc


def pytest_runtest_logreport(report):
    if report.nodeid not in _CRITERIA:
        return
    if report.when == "call" or report.failed:
        prev = _OUTCOMES.get(report.nodeid)
        if prev is None or prev[0] == "PASS":
            _OUTCOMES[report.nodeid] = ("PASS" if report.passed else "FAIL", report.duration)


def pytest_terminal_summary(terminalreporter):
    if not _OUTCOMES:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for nodeid, doc in _CRITERIA.items():
        if nodeid in _OUTCOMES:
            status, dur = _OUTCOMES[nodeid]
            terminalreporter.write_line(f"{status} {doc} ({dur:.1f} s)")
