import os
import sys

import pytest

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from hopfkit.hopf import build  # noqa: E402
from hopfkit.presentations import make_presentation  # noqa: E402

_CACHE = {}


def cached(family, **kw):
    key = (family, tuple(sorted((k, str(v)) for k, v in kw.items())))
    if key not in _CACHE:
        _CACHE[key] = build(make_presentation(family, **kw))
    return _CACHE[key]


@pytest.fixture(scope="session")
def h8():
    return cached("HA", n=2, N=4, nu=1, q=-1, alpha=1)


@pytest.fixture(scope="session")
def h4():
    return cached("H", n=2, N=2, nu=1, q=-1)


@pytest.fixture(scope="session")
def b4():
    # H_{2,-1,4,1}
    return cached("H", n=2, N=4, nu=1, q=-1)


@pytest.fixture(scope="session")
def kz4():
    return cached("H", n=1, N=4, nu=1, q=1)


@pytest.fixture(scope="session")
def u2():
    return cached("U", N=2, nu=1, omega=(2, 1))


@pytest.fixture(scope="session")
def ua54():
    return cached("UA", n=3, N=6, nu=1, q=(3, 1), alpha=1, beta=1, gamma=1)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(results):
        ok, detail = results[k]
        line = f"CRITERION {k}: {'PASS' if ok else 'FAIL'}"
        if not ok:
            line += f" ({detail})"
        terminalreporter.write_line(line)
