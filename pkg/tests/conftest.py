import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from hfkword import corpus  # noqa: E402
from hfkword.word import parse_relator  # noqa: E402

CORPUS = {
    "trefoil": corpus.TREFOIL,
    "trefoil_b": corpus.TREFOIL_B,
    "trefoil_b_l1": corpus.TREFOIL_B_L1,
    "5_2": corpus.KNOT_5_2,
    "10_161": corpus.KNOT_10_161,
    "d_plus": corpus.D_PLUS,
    "d_plus_pseudo": corpus.D_PLUS_PSEUDO,
    "t27": corpus.T27_PSEUDO,
    "stall": corpus.TREFOIL_STALL,
}
PSEUDO = [k for k in CORPUS if k != "stall"]


@pytest.fixture(params=sorted(CORPUS))
def corpus_relator(request):
    return request.param, parse_relator(CORPUS[request.param])


@pytest.fixture(params=sorted(PSEUDO))
def pseudo_relator(request):
    return request.param, parse_relator(CORPUS[request.param])


# ---------------------------------------------------------- acceptance report

_CRITERIA: dict[int, list] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion covered by the test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or not (rep.when == "call" or rep.failed):
        return
    number, title = marker.args
    entry = _CRITERIA.setdefault(number, [title, True])
    entry[1] = entry[1] and rep.passed


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for number in sorted(_CRITERIA):
        title, ok = _CRITERIA[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}")
