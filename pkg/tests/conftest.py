import random
import time
from contextlib import contextmanager

import pytest

# criterion number -> (passed, name, detail); printed after the run
ACCEPTANCE = {}


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture
def criterion():
    """Context manager that times one acceptance criterion and records the outcome."""

    @contextmanager
    def run(key, name, limit):
        info = {"detail": ""}
        ACCEPTANCE[key] = (False, name, "did not finish")
        start = time.perf_counter()
        try:
            yield info
        except BaseException as exc:
            msg = f"{type(exc).__name__}: {exc}".splitlines()[0][:160]
            ACCEPTANCE[key] = (False, name, msg)
            print(f"criterion {key}: FAIL  {name}  {msg}")
            raise
        elapsed = time.perf_counter() - start
        ok = elapsed < limit
        detail = f"{info['detail']} [{elapsed:.1f} s, limit {limit} s]".strip()
        ACCEPTANCE[key] = (ok, name, detail)
        print(f"criterion {key}: {'PASS' if ok else 'FAIL'}  {name}  {detail}")
        assert ok, f"criterion {key} exceeded its {limit} s budget ({elapsed:.1f} s)"

    return run


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE):
        ok, name, detail = ACCEPTANCE[key]
        terminalreporter.write_line(f"criterion {key}: {'PASS' if ok else 'FAIL'}  {name}  {detail}")
