"""Command-line contract: exit codes, golden bytes, parallel determinism."""

import filecmp
import json
import shutil
import subprocess
import sys

import pytest

from zinbielkit.cli import main


@pytest.fixture(autouse=True)
def _run_from_repo_root(request, monkeypatch):
    # corpus paths inside goldens are repo-root relative
    monkeypatch.chdir(request.config.rootpath)


EXIT_CASES = [
    (["check", "tests/corpus/model_t3.json", "right_zinbiel"], 0),
    (["check", "tests/corpus/model_l3.json", "right_zinbiel"], 1),
    (["check", "tests/corpus/model_l3.json", "left_zinbiel"], 1),
    (["check", "tests/corpus/malformed.json", "right_zinbiel"], 2),
    (["check", "tests/corpus/bad_kind.json", "right_zinbiel"], 2),
    (["check", "tests/corpus/no_such_file.json", "right_zinbiel"], 2),
    (["check", "tests/corpus/model_t3.json", "no_such_identity"], 2),
    (["check", "tests/corpus/model_t3.json", "(x (y z"], 2),
    (["check", "tests/corpus/dual_t3.json", "co_right"], 0),
    (["check", "tests/corpus/dual_t3.json", "co_left"], 1),
    (["check", "tests/corpus/dual_t3.json", "no_such_check"], 2),
    (["check", "tests/corpus/regular_t3_bimodule.json", "axioms"], 0),
    (["check", "tests/corpus/broken_bimodule.json", "axioms"], 1),
    (["check", "tests/corpus/broken_bimodule.json", "derived_relations"], 1),
    (["check", "tests/corpus/zero_pair.json", "matched_pair"], 0),
    (["check", "tests/corpus/candidate_t2_zero.json", "manin_triple"], 1),
    (["check", "trunc-int:right:4", "right_zinbiel"], 0),
    (["check", "regular-bimodule:trunc-int:right:3", "axioms"], 0),
    (["check", "regular-bimodule:tests/corpus/model_t3.json", "axioms"], 0),
    (["check", "regular-bimodule:tests/corpus/dual_t3.json", "axioms"], 2),
    (["audit", "tests/corpus/model_t3.json"], 0),
    (["audit", "tests/corpus/broken_bimodule.json"], 0),
    (["audit", "tests/corpus/zero_pair.json"], 0),
    (["audit", "tests/corpus/malformed.json"], 2),
    (["audit", "--model", "no-such:spec"], 2),
    (["audit", "tests/corpus/model_t3.json", "--model", "trunc-int:right:3"], 2),
    (["audit"], 2),
    (["audit", "--model", "trunc-int:right:3", "--claims", "no_such_claim"], 2),
    (["model", "trunc-int:right:3"], 0),
    (["model", "trunc-int:sideways:3"], 2),
    (["model", "free:2"], 2),
    (["construct", "dual", "trunc-int:right:3"], 0),
    (["construct", "semidirect", "tests/corpus/model_t3.json"], 2),
    (["construct", "double", "tests/corpus/zero_pair.json"], 0),
    (["construct", "bialgebra-double", "tests/corpus/candidate_t2_zero.json"], 0),
]


@pytest.mark.parametrize("argv,code", EXIT_CASES, ids=lambda v: " ".join(v) if isinstance(v, list) else v)
def test_exit_codes(argv, code, capsys):
    assert main(argv) == code
    capsys.readouterr()


GOLDEN_CASES = [
    (
        ["audit", "--model", "trunc-int:right:5", "--orientation", "right"],
        "audit_trunc_right_5.txt",
        0,
    ),
    (
        ["audit", "--model", "trunc-int:right:5", "--orientation", "right", "--format", "json"],
        "audit_trunc_right_5.json",
        0,
    ),
    (
        ["audit", "--model", "trunc-int:left:3", "--orientation", "left"],
        "audit_trunc_left_3.txt",
        0,
    ),
    (
        ["audit", "--model", "trunc-int:left:3", "--orientation", "left", "--format", "json"],
        "audit_trunc_left_3.json",
        0,
    ),
    (
        ["audit", "regular-bimodule:trunc-int:right:5"],
        "audit_bimodule_regular_t5.txt",
        0,
    ),
    (["audit", "tests/corpus/dual_t3.json"], "audit_coalgebra_dual_t3.txt", 0),
    (["audit", "tests/corpus/candidate_t2_zero.json"], "audit_candidate_t2_zero.txt", 0),
    (["check", "trunc-int:right:3", "right_zinbiel"], "check_right_zinbiel_t3.txt", 0),
    (["check", "trunc-int:left:3", "right_zinbiel"], "check_right_zinbiel_l3.txt", 1),
    (
        ["construct", "semidirect", "regular-bimodule:trunc-int:right:3"],
        "construct_semidirect_t3.json",
        0,
    ),
]


@pytest.mark.parametrize("argv,golden,code", GOLDEN_CASES, ids=[g for _, g, _ in GOLDEN_CASES])
def test_golden_bytes(argv, golden, code, goldens_dir, tmp_path):
    out = tmp_path / "out"
    assert main(argv + ["--out", str(out)]) == code
    assert out.read_bytes() == (goldens_dir / golden).read_bytes()


def test_model_output_matches_corpus(corpus_dir, tmp_path):
    out = tmp_path / "model.json"
    assert main(["model", "trunc-int:right:3", "--out", str(out)]) == 0
    assert filecmp.cmp(out, corpus_dir / "model_t3.json", shallow=False)


def test_parallel_scheduling_never_changes_bytes(tmp_path):
    outs = []
    for workers in (1, 2, 8):
        out = tmp_path / f"audit_{workers}.txt"
        argv = [
            "audit", "--model", "trunc-int:right:5", "--orientation", "right",
            "--parallel", str(workers), "--out", str(out),
        ]
        assert main(argv) == 0
        outs.append(out.read_bytes())
    assert outs[0] == outs[1] == outs[2]

    check = []
    for workers in (1, 2, 8):
        out = tmp_path / f"check_{workers}.txt"
        argv = [
            "check", "trunc-int:left:3", "right_zinbiel",
            "--parallel", str(workers), "--out", str(out),
        ]
        assert main(argv) == 1
        check.append(out.read_bytes())
    assert check[0] == check[1] == check[2]


def test_claim_filter_limits_report(tmp_path):
    out = tmp_path / "one.json"
    argv = [
        "audit", "--model", "trunc-int:right:5", "--claims", "lie_admissible",
        "--format", "json", "--out", str(out),
    ]
    assert main(argv) == 0
    payload = json.loads(out.read_text())
    assert [c["claim"] for c in payload["claims"]] == ["lie_admissible"]
    assert payload["claims"][0]["verdict"] == "fails"
    assert payload["claims"][0]["witness"]["failures"][0]["tuple"] == [0, 1, 2]


def test_check_json_payload(tmp_path):
    out = tmp_path / "check.json"
    argv = [
        "check", "tests/corpus/model_l3.json", "right_zinbiel",
        "--format", "json", "--out", str(out),
    ]
    assert main(argv) == 1
    payload = json.loads(out.read_text())
    assert payload["kind"] == "check_report"
    assert payload["holds"] is False
    assert payload["violations"] == 16
    assert payload["witness"]["tuple"] == [0, 1, 0]


def test_check_stdout(capsys):
    assert main(["check", "trunc-int:right:2", "right_zinbiel"]) == 0
    assert capsys.readouterr().out == "right_zinbiel: HOLDS (trunc-int:right:2)\n"


def test_opposite_is_a_cli_involution(tmp_path, corpus_dir):
    once = tmp_path / "once.json"
    twice = tmp_path / "twice.json"
    assert main(["construct", "opposite", "tests/corpus/model_t3.json", "--out", str(once)]) == 0
    assert main(["construct", "opposite", str(once), "--out", str(twice)]) == 0
    assert twice.read_bytes() == (corpus_dir / "model_t3.json").read_bytes()


def test_console_entry_points():
    run = subprocess.run(
        [sys.executable, "-m", "zinbielkit", "check", "trunc-int:right:2", "right_zinbiel"],
        capture_output=True,
        text=True,
    )
    assert run.returncode == 0
    assert "HOLDS" in run.stdout

    exe = shutil.which("zinbielkit")
    assert exe, "console script not installed"
    run = subprocess.run(
        [exe, "check", "trunc-int:left:2", "right_zinbiel"], capture_output=True, text=True
    )
    assert run.returncode == 1
    assert "FAILS" in run.stdout
