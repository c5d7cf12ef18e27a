import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from netranslit import ParallelPair, train  # noqa: E402

DATA = Path(__file__).parent / "data"

# filled by test_acceptance.criterion()
ACCEPTANCE_RESULTS = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS, key=lambda k: (int(k.split(".")[0]), k)):
        ok, title = ACCEPTANCE_RESULTS[key]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {key}: {title}")


def dileep_corpus():
    """C(di)=104 with 99 -> दि; C(leep)=19 with 11 -> लीप."""
    pairs = []
    pairs += [ParallelPair(["di", "leep"], ["दि", "लीप"])] * 11
    pairs += [ParallelPair(["di", "leep"], ["दि", "लिप"])] * 8
    pairs += [ParallelPair(["di"], ["दि"])] * 80
    pairs += [ParallelPair(["di"], ["डि"])] * 5
    return pairs


@pytest.fixture
def dileep_model():
    return train(dileep_corpus())


@pytest.fixture
def toy_names_path():
    return DATA / "toy_names.tsv"
