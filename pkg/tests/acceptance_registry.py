"""PASS/FAIL lines for the acceptance criteria, filled in as they run."""

from __future__ import annotations

import functools
import time

RESULTS: dict[int, str] = {}


def criterion(num: int, title: str, limit_s: float):
    """Record one PASS/FAIL line for a criterion test, including its runtime budget."""

    def wrap(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs):
            start = time.perf_counter()
            detail = ""
            try:
                detail = fn(*args, **kwargs) or ""
                elapsed = time.perf_counter() - start
                assert elapsed < limit_s, f"took {elapsed:.1f} s, budget {limit_s:g} s"
            except BaseException as exc:
                elapsed = time.perf_counter() - start
                _record(num, "FAIL", title, f"{exc}".splitlines()[0] if str(exc) else type(exc).__name__, elapsed)
                raise
            _record(num, "PASS", title, detail, elapsed)

        return run

    return wrap


def _record(num, status, title, detail, elapsed):
    line = f"criterion {num:2d} {status}: {title} ({elapsed:.1f} s)" + (f" [{detail}]" if detail else "")
    RESULTS[num] = line
    print(line, flush=True)
