from __future__ import annotations

from pathlib import Path

import pytest

from lusztigcone.cartan import parse_type_label
from lusztigcone.weyl import ReducedWord

GOLDEN = Path(__file__).parent / "golden"


def word(label: str, letters) -> ReducedWord:
    return ReducedWord.of(parse_type_label(label), tuple(letters))


@pytest.fixture
def a3_example() -> ReducedWord:
    return word("A3", (2, 3, 2, 1, 2, 3))


def read_golden(name: str) -> dict[str, list[list[int]]]:
    blocks = (GOLDEN / name).read_text().strip().split("\n\n")
    out = {}
    for block in blocks:
        head, *rows = block.splitlines()
        out[head.strip()] = [[int(x) for x in r.split()] for r in rows]
    return out


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
