import io
import json
import os
from pathlib import Path

import pytest

from hamgrowth.cli import EXIT_FAIL, EXIT_INTERNAL, EXIT_OK, EXIT_USAGE, main

HERE = Path(__file__).parent
DATA = HERE / "data"
GOLDEN = HERE / "golden"

CASES = {
    "sim_fixation": ["sim", "--zeroset", "4 3 1", "--init", str(DATA / "fixation.pts")],
    "sim_fixation_ascii": ["sim", "4 3 1", "--init", "1 3; 1 5; 3 1; 3 4; 4 3", "--render", "ascii"],
    "tau_en_two_one": ["tau-en", "--zeroset", "2 1", "--enh", str(DATA / "two_one.enh")],
    "mu_en_3x3": ["mu-en", "3 3 3"],
    "mu_en_full": ["mu-en", "2 1", "--full"],
    "mu_th_rect": ["mu-th", "3 3", "--caps", "4,3,2"],
    "mu_window": ["mu", "2 2", "--window", "3x3"],
    "bounds_rect": ["bounds", "3 3"],
    "ratslope_slope": ["ratslope", "8 7 6 6 4 2 1", "--a", "1", "--b", "1"],
    "ratslope_best": ["ratslope", "4 3 1", "--max-ab", "2"],
    "audit_thresholds": ["audit", "thresholds-3"],
    "render_enh": ["render", "2 1", "--enh", "r: 1 / c: 1"],
    "thin_arrangement": ["thin", "--spec", "r: 4 2 / c: 2 2 / w: 3"],
    "thin_rect": ["thin", "--rect", "4", "2"],
}


def invoke(argv):
    out = io.StringIO()
    code = main(argv, out=out)
    return code, out.getvalue()


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden(name):
    code, text = invoke(CASES[name])
    assert code == EXIT_OK
    path = GOLDEN / f"{name}.txt"
    if os.environ.get("UPDATE_GOLDEN"):
        path.write_text(text)
    assert text == path.read_text()


@pytest.mark.parametrize("name", ["mu_en_3x3", "sim_fixation_ascii", "audit_thresholds"])
def test_deterministic(name):
    assert invoke(CASES[name]) == invoke(CASES[name])


def test_sim_reports_fixation():
    code, text = invoke(CASES["sim_fixation"])
    assert "verdict = fixates(2)" in text
    assert "step=2 occupied=inf lines_covered=c1,c3 verdict=fixates(2)" in text


def test_json_output(tmp_path):
    path = tmp_path / "out.json"
    code, _ = invoke(["mu-en", "1 1", "--json", str(path)])
    doc = json.loads(path.read_text())
    assert code == EXIT_OK and doc["mu_en"] == 3


def test_svg_to_file(tmp_path):
    path = tmp_path / "fixation.svg"
    code, text = invoke(["render", "4 3 1", "--init", str(DATA / "fixation.pts"), "--mode", "svg", "--out", str(path)])
    assert code == EXIT_OK and path.read_text().startswith("<svg")
    assert text == f"written = {path}\n"


def test_zero_set_from_file(tmp_path):
    path = tmp_path / "z.txt"
    path.write_text("# zero-set\n2 1\n")
    assert invoke(["mu-en", str(path)])[1] == invoke(["mu-en", "2 1"])[1]


@pytest.mark.parametrize(
    "argv",
    [
        ["bogus"],
        [],
        ["mu-en", "1 2"],
        ["mu-en"],
        ["mu", "2 2", "--window", "3by3"],
        ["mu", "2 2", "--window", "5x5", "--heuristic", "--restarts", "x"],
        ["mu-th", "2 2", "--caps", "1,2"],
        ["sim", "2", "--init", "1"],
        ["thin"],
        ["ratslope", "empty"],
        ["audit", "nonsense"],
    ],
)
def test_usage_errors(argv):
    assert invoke(argv)[0] == EXIT_USAGE


def test_audit_failure_exit_code():
    code, text = invoke(["audit", "rectangles-1x1"])
    assert code == EXIT_FAIL
    assert "result = fail" in text


def test_bounds_chain_failure_exit_code():
    code, text = invoke(["bounds", "1", "--window", "2x2"])
    assert code == EXIT_FAIL
    assert "chain = mu_best_found = 2 > mu_formula = 1" in text


def test_inconsistency_exit_code(monkeypatch):
    from hamgrowth import cli
    from hamgrowth.errors import Inconsistency

    def broken(*args, **kwargs):
        raise Inconsistency("forced")

    monkeypatch.setattr(cli, "mu_en_exact", broken)
    assert invoke(["mu-en", "1"])[0] == EXIT_INTERNAL


def test_render_goes_to_output_stream():
    code, text = invoke(CASES["sim_fixation_ascii"])
    assert "step 2\n* . # . # . | ." in text
