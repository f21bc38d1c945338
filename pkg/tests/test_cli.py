import json
import subprocess
import sys

import pytest

from hfkword import errors
from hfkword.cli import MIRROR_WARNING, JobSpec, ResultDocument, main, render_text, run, run_batch
from hfkword.corpus import corpus_lines, corpus_relators


def _run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_hfk_trefoil_text(capsys):
    code, out = _run(capsys, "hfk", "XyXYxY")
    assert code == 0
    assert "Poincare     t^-1 q^-2 + q^-1 + t" in out
    assert sum(1 for line in out.splitlines() if line.strip().startswith("x") and line.split()[0] in {"x1", "x2", "x3"}) == 3
    assert MIRROR_WARNING in out


def test_machine_output_round_trips_to_text(capsys):
    for argv in (["hfk", "XyXYxY"], ["classify", "YX^3Yxyx"], ["hfk", "YX^3Yxyx"], ["lens", "XYXy", "2"], ["verify", "XYxYXyxyXYxYX"]):
        _, text = _run(capsys, *argv)
        _, machine = _run(capsys, *argv, "--format", "machine")
        doc = ResultDocument.from_dict(json.loads(machine))
        assert render_text(doc.to_dict()) + "\n" == text


def test_machine_output_is_deterministic(capsys):
    outs = {_run(capsys, "hfk", "XyXyxYxyXy^2XyxYxyXyXYxYXYxY", "--format", "machine")[1] for _ in range(3)}
    assert len(outs) == 1
    assert json.loads(outs.pop())["schema"] == "hfkword.result/1"


def test_classify_stall(capsys):
    code, out = _run(capsys, "classify", "YX^3Yxyx")
    assert code == 0
    assert "tier         QuasiGeometric" in out
    assert "{x2, x3, x4}" in out


def test_alexander_display(capsys):
    _, out = _run(capsys, "alexander", "XyXYxY")
    assert "t - t^2 + t^3" in out and "symmetrized t^-1 - 1 + t" in out


@pytest.mark.parametrize(
    "argv, code",
    [
        (["hfk", "XQ"], errors.EXIT_PARSE),
        (["hfk", "XYXy"], errors.EXIT_VALIDATION),
        (["hfk", "XY^2xYXY"], errors.EXIT_NOT_QUASI_GEOMETRIC),
        (["hfk", "YX^3Yxyx"], errors.EXIT_NOT_PSEUDO_GEOMETRIC),
        (["hfk", "YX^2yXYx^2"], errors.EXIT_NOT_PSEUDO_GEOMETRIC),
        (["transform", "XyXYxY", "q2"], errors.EXIT_PARSE),
    ],
)
def test_exit_codes(capsys, argv, code):
    assert _run(capsys, *argv)[0] == code


def test_usage_error_exits_2(capsys):
    with pytest.raises(SystemExit) as info:
        main(["hfk"])
    assert info.value.code == 2
    with pytest.raises(SystemExit):
        main(["transform", "XY"])


def test_transform_command(capsys):
    _, out = _run(capsys, "transform", "xYXyXY", "l1", "--format", "machine")
    doc = json.loads(out)
    assert doc["relator"] == "xYX^2Y" and doc["transformed_from"] == "xYXyXY"


def test_hfk_with_transform_flag(capsys):
    _, a = _run(capsys, "hfk", "xYXyXY", "--transform", "l1", "--format", "machine")
    _, b = _run(capsys, "hfk", "xYX^2Y", "--format", "machine")
    assert json.loads(a)["poincare"] == json.loads(b)["poincare"]


def test_lens_flag_on_hfk(capsys):
    code, out = _run(capsys, "hfk", "XYXYXy", "--lens", "3", "--format", "machine")
    assert code == 0
    assert len(json.loads(out)["classes"]) == 3


def test_verify_flag(capsys):
    code, out = _run(capsys, "hfk", "XyXyxYxyXy^2XyxYxyXyXYxYXYxY", "--verify", "--format", "machine")
    doc = json.loads(out)
    assert code == 0
    assert doc["verification"]["euler_alexander"]["match"]
    assert all(c["pass"] for c in doc["verification"]["covariance"])


def test_trace_lists_example_67_bigons():
    doc = run(JobSpec("X^4yx^3YX^4Yx^3yXyx^3YX^4Yx^3y"))
    P = {b["span"]: b["P"] for b in doc.bigons}
    assert P["x5..x10"] == [1, 0]
    assert P["x12..x4 (wrap 1)"] == [-1, 0]


def test_jobspec_invariants():
    with pytest.raises(ValueError):
        JobSpec("XY", "lens")
    with pytest.raises(ValueError):
        JobSpec("XY", "transform")
    with pytest.raises(ValueError):
        JobSpec("XY", "nonsense")


def test_batch_empty_file(tmp_path, capsys):
    f = tmp_path / "empty.txt"
    f.write_text("")
    code, out = _run(capsys, "batch", str(f))
    assert code == 0
    assert out.strip() == "summary: 0 processed, 0 passed, 0 failed"


def test_batch_with_bad_line(tmp_path, capsys):
    f = tmp_path / "mixed.txt"
    f.write_text("# comment\nXyXYxY\n\nXQ\nXYxYXyxyXYxYX  # 5_2\n")
    code, out = _run(capsys, "batch", str(f), "--format", "machine")
    lines = [json.loads(x) for x in out.splitlines()]
    assert [d.get("ok") for d in lines[:-1]] == [True, False, True]
    assert lines[-1]["summary"] == {"passed": 2, "failed": 1}
    assert code == 8


def test_batch_unreadable(tmp_path, capsys):
    assert _run(capsys, "batch", str(tmp_path / "missing.txt"))[0] == errors.EXIT_IO


def test_batch_pool_preserves_order():
    lines = corpus_lines()
    serial = [d.to_json() for _, d in run_batch(lines, "verify", jobs=1)]
    pooled = [d.to_json() for _, d in run_batch(lines, "verify", jobs=3)]
    assert serial == pooled


def test_bundled_corpus_runs():
    docs = [d for _, d in run_batch(corpus_lines(), "verify")]
    assert len(docs) == len(corpus_relators()) == 9
    for d in docs:
        assert d.verification["euler_alexander"]["match"], d.input
    failing = [d.input for d in docs if not d.ok]
    assert failing == ["YX^3Yxyx"]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hfkword", "alexander", "XyXYxY"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert "Alexander" in proc.stdout
