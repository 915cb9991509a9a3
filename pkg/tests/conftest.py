import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from klm import _lrpy  # noqa: E402

try:
    from klm import _lrkernel
except ImportError:  # pragma: no cover - extension not built
    _lrkernel = None

KERNELS = [_lrpy] + ([_lrkernel] if _lrkernel is not None else [])


@pytest.fixture(params=KERNELS, ids=lambda k: k.NAME)
def kernel(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(lines, key=lambda s: int(s.split("[")[1].split("]")[0])):
        terminalreporter.write_line(line)
