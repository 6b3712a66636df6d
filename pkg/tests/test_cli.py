from __future__ import annotations

import json
from pathlib import Path

from angulator.angulation import angulation_to_json, delta_P
from angulator.cli import main
from angulator.geometry import AnnulusConfig
from angulator.quiver import bound_quiver, bound_quiver_to_json


def test_enumerate_counts_and_exit_codes(tmp_path: Path, capsys):
    assert main(["enumerate", "--config", "P(2,2,1)", "--count-only"]) == 0
    assert capsys.readouterr().out.strip() == "count: 18"
    assert main(["enumerate", "--config", "P(1,2,1)"]) == 1
    assert main(["enumerate", "--config", "P(2,2,1)", "--cap", "0"]) == 2
    out = tmp_path / "angs.jsonl"
    assert main(["enumerate", "--config", "P(2,2,1)", "--out", str(out)]) == 0
    lines = out.read_text().strip().splitlines()
    assert len(lines) == 18
    for line in lines:
        payload = json.loads(line)
        assert payload["config"] == {"p": 2, "q": 2, "m": 1}
        assert len(payload["diagonals"]) == 4


def test_quiver_check_realize_pipeline(tmp_path: Path, capsys):
    ang_file = tmp_path / "dp.json"
    ang_file.write_text(angulation_to_json(delta_P(AnnulusConfig(2, 2, 2))))
    quiver_file = tmp_path / "q.json"
    assert main(["quiver", str(ang_file), "--out", str(quiver_file)]) == 0
    assert main(["check", str(quiver_file), "-m", "2"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["verdict"] == "Accepted"
    realized = tmp_path / "realized.json"
    svg = tmp_path / "realized.svg"
    assert main(
        ["realize", str(quiver_file), "-m", "2", "--out", str(realized), "--svg", str(svg)]
    ) == 0
    assert json.loads(realized.read_text())["config"]["m"] == 2
    assert svg.read_text().startswith("<svg")


def test_check_rejected_exit_code(tmp_path: Path, capsys):
    from angulator.quiver import Arrow, BoundQuiver

    oriented = BoundQuiver(
        ("v0", "v1", "v2", "v3", "v4"),
        tuple(Arrow(f"e{i}", f"v{i}", f"v{(i + 1) % 5}") for i in range(5)),
        frozenset(),
    )
    f = tmp_path / "bad.json"
    f.write_text(bound_quiver_to_json(oriented))
    assert main(["check", str(f), "-m", "2"]) == 3
    report = json.loads(capsys.readouterr().out)
    assert report["verdict"] == "Rejected"
    assert report["conditions"]["b"]["passed"] is False
    assert main(["realize", str(f), "-m", "2"]) == 3


def test_realize_unsupported_exit_code(tmp_path: Path):
    from angulator.quiver import Arrow, BoundQuiver

    # Accepted, but its only polygon would need one vertex per boundary.
    kronecker = BoundQuiver(
        ("v0", "v1"),
        (Arrow("e0", "v0", "v1"), Arrow("e1", "v0", "v1")),
        frozenset(),
    )
    f = tmp_path / "double-arrow.json"
    f.write_text(bound_quiver_to_json(kronecker))
    assert main(["check", str(f), "-m", "2"]) == 0
    assert main(["realize", str(f), "-m", "2"]) == 4


def test_check_on_realization_example_quiver(tmp_path: Path, capsys, worked_example_angulation):
    quiver_file = tmp_path / "example.json"
    quiver_file.write_text(bound_quiver_to_json(bound_quiver(worked_example_angulation)))
    assert main(["check", str(quiver_file), "-m", "3"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["verdict"] == "Accepted"
    assert (report["r_h"] - report["r_a"]) % 3 == 0


def test_classify_output(capsys):
    assert main(["classify", "T2(1,1)", "--config", "P(2,2,2)"]) == 0
    assert capsys.readouterr().out.strip() == "T_p^0[1]"
    assert main(["classify", "T1(0,0;0)", "--config", "P(2,2,2)"]) == 0
    assert capsys.readouterr().out.strip() == "S^0"
    assert main(["classify", "T9(0,0)", "--config", "P(2,2,2)"]) == 1


def test_render_deterministic(tmp_path: Path):
    ang_file = tmp_path / "dp.json"
    ang_file.write_text(angulation_to_json(delta_P(AnnulusConfig(2, 2, 2))))
    out1 = tmp_path / "a.svg"
    out2 = tmp_path / "b.svg"
    assert main(["render", str(ang_file), "--out", str(out1)]) == 0
    assert main(["render", str(ang_file), "--out", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()
    text = out1.read_text()
    assert "O0" in text and "I0" in text


def test_oracle_debug_subcommand(capsys):
    assert main(["oracle-crossing", "T2(0,1)", "T2(1,1)", "--config", "P(2,2,2)"]) == 0
    assert capsys.readouterr().out.strip() == "true"
    assert main(["shift-check", "T2(0,1)", "T2(3,1)", "--config", "P(2,2,2)"]) == 0
    assert capsys.readouterr().out.strip() == "true"


def test_quiver_dot_format(tmp_path: Path, capsys):
    ang_file = tmp_path / "dp.json"
    ang_file.write_text(angulation_to_json(delta_P(AnnulusConfig(2, 2, 1))))
    assert main(["quiver", str(ang_file), "--format", "dot"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("digraph")
