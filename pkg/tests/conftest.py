import sys

import pytest

from schrome.complex import BUILTIN_NAMES, builtin

SMALL = [n for n in BUILTIN_NAMES if builtin(n).m <= 7]


@pytest.fixture(params=BUILTIN_NAMES)
def any_builtin(request):
    return builtin(request.param)


@pytest.fixture(params=SMALL)
def small_builtin(request):
    return builtin(request.param)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    RESULTS = getattr(mod, "RESULTS", None)
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(RESULTS, key=lambda k: (int(k.split(".")[0]), k)):
        ok, elapsed, bound, note = RESULTS[key]
        limit = "unbounded" if bound == float("inf") else f"bound {bound:g}s"
        verdict = "SKIP" if ok is None else ("PASS" if ok else "FAIL")
        line = f"criterion {key}: {verdict} ({elapsed:.2f}s, {limit})"
        terminalreporter.write_line(line + (f"  {note}" if note else ""))
