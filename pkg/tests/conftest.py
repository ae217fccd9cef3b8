from __future__ import annotations

from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from tanglekit import parse

settings.register_profile(
    "tanglekit", max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("tanglekit")

DATA = Path(__file__).parent / "data"
CORPUS = DATA / "corpus"
GOLDEN = Path(__file__).parent / "golden"

TREFOIL = "link { X(1,4,2,5) X(3,6,4,1) X(5,2,6,3) }"
POSITIVE_TREFOIL = "link { X(4,2,5,1) X(6,4,1,3) X(2,6,3,5) }"
FIGURE8 = "link { X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8) }"
KINK = "link { X(1,1,2,2) }"
UNKNOT = "link { O(1) }"


@pytest.fixture
def trefoil():
    return parse(TREFOIL)


@pytest.fixture
def figure8():
    return parse(FIGURE8)


def corpus_files() -> list[Path]:
    return sorted(CORPUS.glob("*.pd"))


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        name, ok, detail = results[n]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {n}. {name}: {detail}")
