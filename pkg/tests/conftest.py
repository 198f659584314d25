import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from starmat import _kernels  # noqa: E402
from starmat._kernels import _fallback  # noqa: E402

_KERNEL_IMPLS = [pytest.param(_fallback, id="python")]
if _kernels.compiled_module() is not None:
    _KERNEL_IMPLS.append(pytest.param(_kernels.compiled_module(), id="compiled"))


@pytest.fixture(scope="module", params=_KERNEL_IMPLS)
def kernel_impl(request):
    return request.param


_ACCEPTANCE_LINES = []


@pytest.fixture
def criterion(request):
    """Record a one-line verdict for an acceptance criterion."""
    record = {}
    yield record
    rep = getattr(request.node, "rep_call", None)
    ok = rep is not None and rep.passed
    label = record.get("label", request.node.name)
    detail = record.get("detail", "")
    _ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'}  {label}  {detail}".rstrip())


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
