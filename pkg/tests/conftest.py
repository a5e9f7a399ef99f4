import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

import _record  # noqa: E402


def pytest_terminal_summary(terminalreporter):
    if not _record.LINES:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_record.LINES):
        terminalreporter.write_line(_record.LINES[n])
