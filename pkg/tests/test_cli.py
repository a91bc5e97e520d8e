import json

from click.testing import CliRunner

from covertop.cli import main
from covertop.io import load_json, save_json
from covertop.network import Rect, generate_random
from tests.conftest import HOLE_WITNESS_POINTS, HOLE_WITNESS_RC, make_node
from covertop.network import NetworkConfig


def run(args, **kwargs):
    return CliRunner().invoke(main, args, **kwargs)


def test_generate_empty_network(tmp_path):
    out = tmp_path / "net.json"
    result = run(
        ["generate", "--n", "0", "--rc", "10", "--eps", "3", "--out", str(out)]
    )
    assert result.exit_code == 0
    assert load_json(out.read_text()).n == 0


def test_generate_matches_library(tmp_path):
    out = tmp_path / "net.json"
    result = run(
        [
            "generate", "--n", "12", "--k", "4", "--rc", "10", "--eps", "3",
            "--width", "80", "--height", "60", "--seed", "7", "--out", str(out),
        ]
    )
    assert result.exit_code == 0
    expected = generate_random(12, 4, 10.0, 3.0, Rect(0, 0, 80, 60), 7)
    assert load_json(out.read_text()) == expected


def test_generate_env_seed(tmp_path):
    out = tmp_path / "net.json"
    result = run(
        ["generate", "--n", "5", "--rc", "10", "--eps", "2", "--out", str(out)],
        env={"COVERTOP_SEED": "99"},
    )
    assert result.exit_code == 0
    assert load_json(out.read_text()).seed == 99


def test_generate_rejects_eps_above_rc(tmp_path):
    out = tmp_path / "net.json"
    result = run(["generate", "--n", "2", "--rc", "1", "--eps", "2", "--out", str(out)])
    assert result.exit_code == 1


def test_unknown_flag_is_usage_error():
    assert run(["generate", "--bogus", "1"]).exit_code == 2


def test_missing_input_file_is_usage_error(tmp_path):
    result = run(
        ["probabilities", "--in", str(tmp_path / "nope.json"), "--kind", "rips",
         "--out", str(tmp_path / "o.json")]
    )
    assert result.exit_code == 2


def hole_witness_config():
    nodes = tuple(make_node(i, p, [p]) for i, p in HOLE_WITNESS_POINTS.items())
    return NetworkConfig(
        nodes=nodes, rc=HOLE_WITNESS_RC, eps=0.0, k=1, domain=Rect(-5, -5, 12, 12)
    )


def test_betti_hole_witness_cech(tmp_path):
    path = tmp_path / "net4.json"
    path.write_text(save_json(hole_witness_config()))
    result = run(["betti", "--in", str(path), "--instance", "anchors", "--kind", "cech"])
    assert result.exit_code == 0
    doc = json.loads(result.output)
    assert (doc["b0"], doc["b1"]) == (1, 1)
    result = run(["betti", "--in", str(path), "--kind", "rips"])
    doc = json.loads(result.output)
    assert (doc["b0"], doc["b1"]) == (1, 0)


def test_betti_bad_instance_spec(tmp_path):
    path = tmp_path / "net4.json"
    path.write_text(save_json(hole_witness_config()))
    assert run(["betti", "--in", str(path), "--instance", "wat"]).exit_code == 2


def test_probabilities_output_schema(tmp_path):
    net = tmp_path / "net.json"
    out = tmp_path / "probs.json"
    run(["generate", "--n", "10", "--k", "4", "--rc", "12", "--eps", "3",
         "--seed", "3", "--out", str(net)])
    result = run(["probabilities", "--in", str(net), "--kind", "rips", "--out", str(out)])
    assert result.exit_code == 0
    doc = json.loads(out.read_text())
    assert doc["kind"] == "rips"
    for entry in doc["edges"]:
        assert entry["den"] == 16
        assert 0 < entry["num"] <= 16
        assert entry["value"] == entry["num"] / entry["den"]
    for entry in doc["faces"]:
        assert entry["den"] == 64


def test_coverage_and_sparsify(tmp_path):
    net = tmp_path / "net.json"
    run(["generate", "--n", "25", "--k", "2", "--rc", "20", "--eps", "2",
         "--width", "60", "--height", "60", "--seed", "1", "--out", str(net)])
    report = tmp_path / "report.json"
    result = run(["coverage", "--in", str(net), "--samples", "20",
                  "--resolution", "2", "--seed", "4", "--out", str(report)])
    assert result.exit_code == 0
    doc = json.loads(report.read_text())
    assert 0.0 <= doc["fullCoverProb"] <= 1.0
    sparse = tmp_path / "sparse.json"
    result = run(["sparsify", "--in", str(net), "--resolution", "2", "--out", str(sparse)])
    assert result.exit_code == 0
    assert load_json(sparse.read_text()).n <= 25
