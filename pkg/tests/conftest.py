import json
from collections import defaultdict

import pytest

from .helpers import DATA


@pytest.fixture(scope="session")
def fig6_listing():
    return json.loads((DATA / "fig6_listing.json").read_text())


# -- acceptance reporting: one line per criterion ------------------------------

_criteria = {}
_outcomes = defaultdict(list)


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when != "call":
        return
    num, title = marker.args
    _criteria[num] = title
    _outcomes[num].append(call.excinfo is None)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_criteria):
        status = "PASS" if all(_outcomes[num]) else "FAIL"
        terminalreporter.write_line(f"criterion {num:2d} {status}  {_criteria[num]}")
