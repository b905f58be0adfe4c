import sys

import pytest

from hierzagreb import _pykernels

try:
    from hierzagreb import _ckernels
except ImportError:
    _ckernels = None

KERNEL_IMPLS = [
    pytest.param(_pykernels, id="python"),
    pytest.param(_ckernels, id="cython", marks=pytest.mark.skipif(_ckernels is None, reason="compiled kernels not built")),
]


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    if acceptance is None or not acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(acceptance.RESULTS):
        title, ok, detail = acceptance.RESULTS[number]
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}"
        terminalreporter.write_line(line + (f"  ({detail})" if detail else ""))
