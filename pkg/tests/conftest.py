"""Per-criterion PASS/FAIL summary for the acceptance suite.

Acceptance tests carry ``@pytest.mark.criterion(n)``. A criterion passes
when every test marked with it passed; tests may attach a short measurement
through the ``measure`` fixture, shown next to the verdict.
"""

import pytest

TITLES = {
    1: "hand oracles for forces, step/position, transfer, flip and feature fitness (< 1 s)",
    2: "DA, PSO, GWO, GA reach TF16/TF17/TF18 optima within 1e-2 (pop 30, iters 300, 30 runs)",
    3: "DA TF1 dim 10 median <= 1e-3 (pop 30, iters 500, 30 runs)",
    4: "DA TF10 dim 10 <= 1e-8 in >= 50% of runs (pop 50, iters 500, 30 runs)",
    5: "BDA OneMax >= 90% success, static and time-varying within 10 points",
    6: "transfer evenness, strict monotonicity, range and endpoint identity (1e4 inputs)",
    7: "MODA Schaffer: non-dominated archive, HV >= 95% of oracle, x in [-0.05, 2.05]",
    8: "dominance is a partial order; insert keeps the archive non-dominated (1e4 sequences)",
    9: "DA and BDA wall time ratio for doubled iterations in [1.6, 2.6]",
    10: "byte-identical results.csv and stats files on rerun",
    11: "CEC04/CEC10 (pop 100, iters 1000, 5 runs): finite means, bounds, monotone curves",
    12: "DA with Brownian walk passes criteria 2, 3 and 10",
}

_outcomes: dict[int, list[bool]] = {}
_notes: dict[int, list[str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number this test covers")


@pytest.fixture
def measure(request):
    marker = request.node.get_closest_marker("criterion")

    def note(text: str) -> None:
        if marker is not None:
            _notes.setdefault(marker.args[0], []).append(text)

    return note


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        _outcomes.setdefault(marker.args[0], []).append(rep.passed)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n in sorted(TITLES):
        results = _outcomes.get(n)
        if results is None:
            continue
        verdict = "PASS" if all(results) else "FAIL"
        line = f"criterion {n:2d}: {verdict}  {TITLES[n]}"
        if n in _notes:
            line += "  [" + "; ".join(_notes[n]) + "]"
        tr.write_line(line)
