import json

import pytest

from agmod import cli, finmod
from agmod.cli import main, parse_gens, parse_instance
from agmod.finring import Ring


@pytest.fixture()
def spec_file(tmp_path):
    def write(obj, name="spec.json"):
        path = tmp_path / name
        path.write_text(json.dumps(obj))
        return str(path)

    return write


Z12 = {"ring": [12], "module": [{"d": 12, "c": 0}]}


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_parse_instance_round_trip():
    module, options = parse_instance(Z12)
    echo = cli.instance_echo(module, options)
    module2, _ = parse_instance(echo)
    assert module.key == module2.key


def test_parse_instance_rejects_unknown_fields():
    with pytest.raises(cli.SpecError):
        parse_instance({**Z12, "extra": 1})
    with pytest.raises(cli.SpecError):
        parse_instance({"ring": [12], "module": [{"d": 12, "c": 0, "x": 1}]})
    with pytest.raises(cli.SpecError):
        parse_instance({"ring": [12], "module": [{"d": 12, "c": 0}],
                        "options": {"bogus": True}})


def test_parse_instance_collects_all_bad_factors():
    with pytest.raises(cli.SpecError) as err:
        parse_instance({"ring": [12], "module": [{"d": 5, "c": 0}, {"d": 2, "c": 9}]})
    assert len(err.value.details) == 2


def test_parse_gens():
    z12 = Ring([12])
    assert parse_gens(z12, "3,9") == [(3,), (9,)]
    r = Ring([2, 3])
    assert parse_gens(r, "1:0,0:1") == [(1, 0), (0, 1)]
    with pytest.raises(cli.SpecError):
        parse_gens(r, "3")


def test_analyze_report_fields(capsys, spec_file):
    code, out, _ = run_cli(capsys, "analyze", spec_file(Z12))
    assert code == 0
    report = json.loads(out)
    assert report["schema"] == 1
    assert report["instance"] == Z12
    assert report["cardinalities"] == {"ring": 12, "module": 12}
    assert report["lattice"]["count"] == 6
    labels = {s["id"]: s["label"] for s in report["submodules"]}
    assert {labels[i] for i in report["lattice"]["min_primes"]} == {"⟨2⟩", "⟨3⟩"}
    assert labels[report["lattice"]["radical_zero"]] == "⟨6⟩"
    assert report["lattice"]["annihilator"] == [12]
    assert report["lattice"]["cyclic"] is True
    assert "path_4" in report["graphs"]["AG"]["invariants"]["shape"]
    assert report["graphs"]["AG"]["invariants"]["diameter"] == 3
    assert report["clique_witness"]["size"] == 2
    # every referenced submodule id resolves
    ids = set(labels)
    for section in ("minimal", "primes", "min_primes"):
        assert set(report["lattice"][section]) <= ids
    for v in report["graphs"]["AG"]["vertices"]:
        assert v["id"] in ids


def test_analyze_is_deterministic(capsys, spec_file):
    path = spec_file(Z12)
    _, first, _ = run_cli(capsys, "analyze", path)
    _, second, _ = run_cli(capsys, "analyze", path)
    assert first == second


def test_analyze_localization_sections(capsys, spec_file):
    path = spec_file(Z12)
    code, out, _ = run_cli(capsys, "analyze", path, "--localize-at-min-primes")
    assert code == 0
    loc = json.loads(out)["localization"]
    assert loc["idempotent"] == [1]
    assert sorted(loc["components"]["sizes"]) == [3, 4]
    code, out, _ = run_cli(capsys, "analyze", path, "--localize-gens", "3")
    assert code == 0
    loc = json.loads(out)["localization"]
    assert loc["idempotent"] == [9] and loc["image_size"] == 4


def test_graph_command(capsys, spec_file):
    z6 = spec_file({"ring": [6], "module": [{"d": 6, "c": 0}]})
    code, out, _ = run_cli(capsys, "graph", z6)
    assert code == 0
    assert out == (
        "graph AG {\n"
        '  v0 [label="⟨2⟩"];\n'
        '  v1 [label="⟨3⟩"];\n'
        "  v0 -- v1;\n"
        "}\n"
    )


def test_graph_star_empty_body(capsys, spec_file):
    vec = spec_file({"ring": [2], "module": [{"d": 2, "c": 0}, {"d": 2, "c": 0}]})
    code, out, _ = run_cli(capsys, "graph", vec, "--star")
    assert code == 0
    assert out == "graph AG_star {\n}\n"


def test_localize_command(capsys, spec_file):
    path = spec_file(Z12)
    code, out, _ = run_cli(capsys, "localize", path, "--gens", "3")
    assert code == 0
    loc = json.loads(out)["localization"]
    assert loc["idempotent"] == [9]
    assert loc["image_size"] == 4 and loc["kernel_size"] == 3
    code, out, _ = run_cli(capsys, "localize", path, "--at-min-primes")
    loc = json.loads(out)["localization"]
    assert loc["components"]["sizes"] in ([3, 4], [4, 3])
    assert loc["comparison"]["clique_before"] == loc["comparison"]["clique_after"]


def test_localize_with_zero(capsys, spec_file):
    path = spec_file(Z12)
    code, out, _ = run_cli(capsys, "localize", path, "--gens", "0")
    assert code == 0
    loc = json.loads(out)["localization"]
    assert loc["image_size"] == 1
    assert loc["invariants_after"]["shape"] == ["empty"]


def test_corpus_command(capsys, tmp_path):
    out_file = tmp_path / "report.json"
    code, _, _ = run_cli(
        capsys, "corpus", "--max-ring", "8", "--max-module", "16",
        "--theorems", "thm_2_21,cor_2_19", "--out", str(out_file)
    )
    assert code == 0
    report = json.loads(out_file.read_text())
    assert report["schema"] == 1
    assert not report["violations"]
    assert report["theorems"]["thm_2_21"]["applicable_FAIL"] == 0
    assert report["theorems"]["thm_2_21"]["applicable_pass"] == report["instances"]


def test_corpus_unknown_theorem(capsys):
    code, _, err = run_cli(capsys, "corpus", "--theorems", "nope")
    assert code == 64
    assert "unknown theorem" in err


def test_bad_specs_exit_64(capsys, spec_file, tmp_path):
    bad_json = tmp_path / "bad.json"
    bad_json.write_text("{not json")
    code, _, err = run_cli(capsys, "analyze", str(bad_json))
    assert code == 64 and "line 1" in err
    code, _, err = run_cli(
        capsys, "analyze", spec_file({"ring": [12], "module": [{"d": 5, "c": 0}]})
    )
    assert code == 64 and "factor" in err
    code, _, err = run_cli(capsys, "analyze", str(tmp_path / "missing.json"))
    assert code == 64


def test_usage_error_exit_64(capsys):
    assert main(["localize", "x.json"]) == 64  # missing required group


def test_lattice_cap_env_override(capsys, spec_file, monkeypatch):
    monkeypatch.setenv("AGMOD_MAX_SUBMODULES", "2")
    saved = finmod.LATTICE_CAP
    try:
        code, _, err = run_cli(capsys, "analyze", spec_file(Z12))
        assert code == 3
        assert "cap" in err
    finally:
        finmod.LATTICE_CAP = saved
    monkeypatch.setenv("AGMOD_MAX_SUBMODULES", "junk")
    assert main(["analyze", "x.json"]) == 64
