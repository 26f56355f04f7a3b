import json
from pathlib import Path

import pytest

from patricia_bridges._didendritic import counterexample_dds, dds_to_json
from patricia_bridges.cli import CommandConfig, main


def _lines(capsys: pytest.CaptureFixture[str]) -> list[str]:
    return capsys.readouterr().out.splitlines()


def test_enumerate(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["enumerate", "--n", "4"]) == 0
    header, *trees = _lines(capsys)
    assert header.startswith("# ")
    assert json.loads(header[2:]) == {
        "config": {"subcommand": "enumerate", "n": 4, "format": "newick"}
    }
    assert len(trees) == 5
    assert len(set(trees)) == 5


def test_simulate_jsonl(capsys: pytest.CaptureFixture[str]) -> None:
    argv = ["simulate", "--chain", "remy", "--steps", "3", "--seed", "1"]
    assert main(argv) == 0
    first = _lines(capsys)
    assert main(argv) == 0
    assert _lines(capsys) == first
    header, *records = (json.loads(line) for line in first)
    assert header["config"]["subcommand"] == "simulate"
    assert header["config"]["seed"] == 1
    assert [r["n"] for r in records] == [1, 2, 3]
    assert records[0] == {"n": 1, "vertices": [""], "seed": 1, "chain": "remy"}
    assert records[1]["vertices"] == ["", "0", "1"]


@pytest.mark.parametrize(
    ("chain", "name"),
    [
        ("patricia:harmonic", "patricia:harmonic"),
        ("radix", "radix:fair"),
        ("zigzag-bridge", "bridge:zigzag"),
        ("bridge-from:(*,(*,*))", "bridge:(*,(*,*));"),
        ("rtree:interval", "bridge:rtree:interval"),
    ],
)
def test_simulate_records_name_the_chain(
    chain: str, name: str, capsys: pytest.CaptureFixture[str]
) -> None:
    assert main(["simulate", "--chain", chain, "--steps", "3", "--seed", "5"]) == 0
    _, *records = (json.loads(line) for line in _lines(capsys))
    assert {r["chain"] for r in records} == {name}
    assert {r["seed"] for r in records} == {5}
    assert all(r["vertices"][0] == "" for r in records)


def test_verify_output_is_reproducible(capsys: pytest.CaptureFixture[str]) -> None:
    argv = ["verify", "kernel", "--trials", "50", "--seed", "3", "--format", "csv"]
    main(argv)
    first = capsys.readouterr().out
    main(argv)
    assert capsys.readouterr().out == first
    main([*argv, "--jobs", "2"])
    assert capsys.readouterr().out == first


def test_simulate_dot_output(tmp_path: Path) -> None:
    output = tmp_path / "run.dot"
    argv = ["simulate", "--chain", "zigzag-bridge", "--steps", "4"]
    assert main([*argv, "--format", "dot", "--output", str(output)]) == 0
    text = output.read_text(encoding="utf-8")
    assert text.startswith("// ")
    assert text.count("digraph") == 4


def test_usage_error() -> None:
    assert main(["enumerate"]) == 2


def test_data_error(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["simulate", "--measure", "nope"]) == 3
    error = json.loads(capsys.readouterr().err.strip().splitlines()[-1])
    assert error["error"] == "bad-spec"


def test_dds_check(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    path = tmp_path / "counterexample.json"
    path.write_text(json.dumps(dds_to_json(counterexample_dds())), encoding="utf-8")
    assert main(["dds", "check", str(path)]) == 1
    axioms = {json.loads(line)["axiom"] for line in _lines(capsys)}
    assert axioms == {"(C)"}
    assert main(["dds", "to-tree", str(path)]) == 3


def test_missing_file_is_a_data_error(
    tmp_path: Path, capsys: pytest.CaptureFixture[str]
) -> None:
    assert main(["dds", "check", str(tmp_path / "missing.json")]) == 3
    error = json.loads(capsys.readouterr().err.strip().splitlines()[-1])
    assert error["error"] == "malformed-tree"
    assert main(["export", str(tmp_path)]) == 3


def test_dds_round_trip(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["dds", "from-tree", "(1,(3,2))"]) == 0
    (document,) = _lines(capsys)
    path = tmp_path / "system.json"
    path.write_text(document, encoding="utf-8")
    assert main(["dds", "check", str(path)]) == 0
    assert _lines(capsys) == ['{"valid":true}']
    assert main(["dds", "to-tree", str(path)]) == 0
    assert _lines(capsys) == ["(1,(3,2));"]


def test_dds_sample(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["dds", "sample", "--n", "5", "--seed", "2"]) == 0
    document = json.loads(_lines(capsys)[0])
    assert document["labels"] == [1, 2, 3, 4, 5]
    assert len(document["classes"]) == 9
    assert main(["dds", "sample", "--model", "binary:harmonic", "--n", "3"]) == 0
    assert len(json.loads(_lines(capsys)[0])["classes"]) == 5


def test_export(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    path = tmp_path / "tree.json"
    path.write_text('{"vertices": ["", "0", "1", "10", "11"]}', encoding="utf-8")
    assert main(["export", str(path)]) == 0
    assert _lines(capsys) == ["(*,(*,*));"]
    path.write_text('{"vertices": ["", "0"]}', encoding="utf-8")
    assert main(["export", str(path)]) == 3
    path.write_text("{", encoding="utf-8")
    assert main(["export", str(path), "--format", "dot"]) == 3


def test_verify_dds(capsys: pytest.CaptureFixture[str]) -> None:
    argv = ["verify", "dds", "--max-leaves", "3", "--corruptions", "20"]
    assert main(argv) == 0
    report = json.loads(_lines(capsys)[0])
    assert report["passed"] is True
    assert report["config"]["subcommand"] == "verify dds"
    assert main([*argv, "--format", "csv"]) == 0
    header, columns, *_ = _lines(capsys)
    assert header.startswith("# ")
    assert columns == "n,statistic,value,lower,upper"


def test_heights(capsys: pytest.CaptureFixture[str]) -> None:
    argv = ["heights", "--chain", "zigzag-bridge", "--n-list", "4", "8"]
    assert main([*argv, "--trials", "3", "--seed", "1"]) == 0
    report = json.loads(_lines(capsys)[0])
    assert report["config"]["n"] == [4, 8]
    assert report["passed"] is True


def test_header_leaves_out_jobs() -> None:
    config = CommandConfig("verify kernel", trials=10, seed=1, options=None)
    assert config.header("dot") == (
        '// {"config":{"subcommand":"verify kernel","trials":10,"seed":1}}'
    )
    assert config.header("jsonl").startswith('{"config"')
