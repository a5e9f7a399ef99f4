"""Collects one pass/fail line per acceptance criterion for the run summary."""

LINES = {}


def record(n, ok, detail):
    line = f"{'PASS' if ok else 'FAIL'} criterion {n:2d}: {detail}"
    LINES[n] = line
    print(line)
    return ok
