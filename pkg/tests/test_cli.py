import csv
import json
import subprocess
import sys
from fractions import Fraction as Fr

import pytest
from conftest import e1, families, zero_sum_vectors
from hypothesis import given, settings

from balanced_cover import InstanceFamily, family_to_graph, parse_instance, serialize
from balanced_cover.cli import BENCH_COLUMNS, main
from balanced_cover.errors import FormatError, ValidationError
from balanced_cover.io import loads


def _write(path, obj):
    path.write_text(obj if isinstance(obj, str) else json.dumps(obj))
    return str(path)


def test_parse_e1():
    assert parse_instance(serialize(e1())) == e1()


def test_parse_errors():
    doc = json.loads(serialize(e1()))
    doc["hypergraphs"][1]["edges"][0]["weight"] = "0"
    with pytest.raises(ValidationError, match="hypergraph 2.*9/10"):
        parse_instance(json.dumps(doc))
    with pytest.raises(FormatError, match="matrix"):
        parse_instance('{"schema": 1, "kind": "matrix"}')
    doc = json.loads(serialize(e1()))
    doc["hypergraphs"][0]["edges"].append({"vertices": [], "weight": "0"})
    with pytest.raises(FormatError, match="empty edge"):
        parse_instance(json.dumps(doc))
    with pytest.raises(FormatError):
        parse_instance('{"schema": 2, "kind": "family"}')
    with pytest.raises(FormatError):
        parse_instance("not json")


def test_decimal_weights_exact():
    text = json.dumps({"schema": 1, "kind": "family", "n": 2, "hypergraphs": [
        {"edges": [{"vertices": [1], "weight": "0.1"}, {"vertices": [2], "weight": 0.9}]}]})
    F = parse_instance(text)
    assert F[0].edges[(1,)] == Fr(1, 10) and F[0].edges[(2,)] == Fr(9, 10)


@settings(max_examples=40, deadline=None)
@given(families(max_n=6, max_k=3, uniform=False))
def test_family_round_trip(F):
    text = serialize(F)
    assert parse_instance(text) == F
    assert serialize(parse_instance(text)) == text


@settings(max_examples=20, deadline=None)
@given(families(max_n=5, max_k=3))
def test_graph_round_trip(F):
    G = family_to_graph(F)
    assert parse_instance(serialize(G)) == G


@settings(max_examples=30, deadline=None)
@given(zero_sum_vectors())
def test_vectors_round_trip(V):
    assert parse_instance(serialize(V)) == V


def test_chain_command(tmp_path):
    inp = _write(tmp_path / "e1.json", serialize(e1()))
    out = tmp_path / "trace.json"
    assert main(["chain", "--in", inp, "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["schema"] == 1 and doc["algo"] == "two"
    assert [s["unbalance"] for s in doc["steps"]] == ["3/10", "0", "3/10", "0"]
    assert doc["bound"]["holds"] is True
    for algo in ("greedy", "steinitz", "greedy-float"):
        assert main(["chain", "--in", inp, "--algo", algo, "--out", str(out)]) == 0


def test_verify_tampered_chain(tmp_path):
    F = InstanceFamily.from_vertex_weights([[Fr(1, 5)] * 5 + [0] * 5, [0] * 5 + [Fr(1, 5)] * 5])
    inp = _write(tmp_path / "f.json", serialize(F))
    good = tmp_path / "good.json"
    assert main(["chain", "--in", inp, "--algo", "greedy", "--out", str(good)]) == 0
    assert main(["verify", "--in", inp, "--chain", str(good), "--out", str(tmp_path / "r.json")]) == 0
    bad = _write(tmp_path / "bad.json", {"schema": 1, "algo": "greedy", "order": list(range(1, 11)),
                                         "steps": [{"unbalance": "0"}] * 10})
    rep = tmp_path / "r2.json"
    assert main(["verify", "--in", inp, "--chain", bad, "--out", str(rep)]) == 1
    report = json.loads(rep.read_text())
    assert not report["holds"]
    assert "2(k-1)c" in report["violations"][0]
    notperm = _write(tmp_path / "np.json", {"order": [1, 1, 2, 3, 4, 5, 6, 7, 8, 9]})
    assert main(["verify", "--in", inp, "--chain", notperm, "--out", str(rep)]) == 1


def test_partition_and_verify(tmp_path):
    inp = _write(tmp_path / "e1.json", serialize(e1()))
    for algo in ("tucker", "pairwise"):
        out = tmp_path / f"{algo}.json"
        assert main(["partition", "--in", inp, "--algo", algo, "--out", str(out)]) == 0
        doc = json.loads(out.read_text())
        assert doc["max_gap"] == "0"
        assert main(["verify", "--in", inp, "--partition", str(out), "--out", str(tmp_path / "v.json")]) == 0
    bad = _write(tmp_path / "bad.json", {"S": [1], "T": [2, 3]})
    assert main(["verify", "--in", inp, "--partition", bad, "--out", str(tmp_path / "v.json")]) == 1


def test_order_vectors_and_oracles(tmp_path):
    vec = tmp_path / "h.json"
    assert main(["gen", "--kind", "hadamard", "--k", "2", "--out", str(vec)]) == 0
    out = tmp_path / "o.json"
    assert main(["order-vectors", "--in", str(vec), "--out", str(out)]) == 0
    assert main(["verify", "--in", str(vec), "--ordering", str(out), "--out", str(tmp_path / "v.json")]) == 0
    assert main(["oracle", "--in", str(vec), "--which", "ordering", "--out", str(out)]) == 0
    assert json.loads(out.read_text())["value"] == "1"
    inp = _write(tmp_path / "e1.json", serialize(e1()))
    assert main(["oracle", "--in", inp, "--which", "chain", "--out", str(out)]) == 0
    assert json.loads(out.read_text())["value"] == "3/10"
    assert main(["oracle", "--in", inp, "--which", "partition", "--out", str(out)]) == 0
    assert json.loads(out.read_text())["value"] == "0"
    assert main(["oracle", "--in", inp, "--which", "lemma", "--subset", "1,2,3,4", "--out", str(out)]) == 0
    assert json.loads(out.read_text())["lhs"] == "9/100"


def test_convert_and_graph_chain(tmp_path):
    inp = _write(tmp_path / "e1.json", serialize(e1()))
    g = tmp_path / "g.json"
    assert main(["convert", "--in", inp, "--to", "graph", "--out", str(g)]) == 0
    assert json.loads(g.read_text())["m"] == 10
    back = tmp_path / "back.json"
    assert main(["convert", "--in", str(g), "--to", "family", "--out", str(back)]) == 0
    assert parse_instance(back.read_text()) == e1()
    out = tmp_path / "gc.json"
    assert main(["chain", "--in", str(g), "--half-cover", "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["half_cover"]["S"] == [1, 2] and doc["half_cover"]["j"] == 3
    assert main(["verify", "--in", str(g), "--chain", str(out), "--out", str(tmp_path / "v.json")]) == 0


def test_gen_commands(tmp_path):
    out = tmp_path / "f.json"
    assert main(["gen", "--kind", "random", "--n", "10", "--k", "3", "--r", "2", "--c", "1/4",
                 "--seed", "7", "--out", str(out)]) == 0
    first = out.read_text()
    assert main(["gen", "--kind", "random", "--n", "10", "--k", "3", "--r", "2", "--c", "1/4",
                 "--seed", "7", "--out", str(out)]) == 0
    assert out.read_text() == first
    vec = tmp_path / "v.json"
    assert main(["gen", "--kind", "hadamard", "--k", "2", "--out", str(vec)]) == 0
    assert main(["gen", "--kind", "reduction", "--in", str(vec), "--c", "1/4", "--theta", "1/2",
                 "--rescale", "--out", str(out)]) == 0
    assert parse_instance(out.read_text()).k == 3
    assert main(["gen", "--kind", "almost-regular", "--c", "1/8", "--eps", "1/2", "--r", "4",
                 "--m", "80", "--seed", "1", "--out", str(out)]) == 0
    assert json.loads(out.read_text())["report"]["success"] is True
    assert main(["gen", "--kind", "almost-regular", "--c", "1/8", "--eps", "1/2", "--r", "2",
                 "--m", "8", "--budget", "2", "--out", str(out)]) == 1


def test_usage_errors(tmp_path, capsys):
    assert main(["gen", "--kind", "hadamard", "--k", "3"]) == 2
    assert main(["gen", "--kind", "random", "--n", "3"]) == 2
    assert main(["chain"]) == 2
    assert main(["nope"]) == 2
    assert main(["chain", "--in", str(tmp_path / "missing.json")]) == 2
    bad = _write(tmp_path / "m.json", {"schema": 1, "kind": "matrix"})
    assert main(["chain", "--in", bad]) == 2
    assert main(["gen", "--kind", "almost-regular", "--c", "1/5", "--eps", "1/2", "--r", "4", "--m", "8"]) == 2


def test_bench(tmp_path, monkeypatch):
    _write(tmp_path / "e1.json", serialize(e1()))
    suite = _write(tmp_path / "suite.json", {"schema": 1, "instances": [
        {"path": "e1.json", "algos": ["two", "greedy", "steinitz"]},
        {"gen": {"n": 12, "k": 3, "r": 2, "c": "1/4", "seed": 1}},
        {"gen": {"n": 8, "k": 2, "r": 1, "c": "1/4", "seed": 2}, "algos": ["greedy-float", "two"]},
    ]})
    out = tmp_path / "b.csv"
    rows = []
    for threads in ("1", "3"):
        monkeypatch.setenv("BC_THREADS", threads)
        assert main(["bench", "--suite", suite, "--out", str(out)]) == 0
        with open(out) as fh:
            reader = csv.DictReader(fh)
            assert reader.fieldnames == BENCH_COLUMNS
            rows.append([{k: v for k, v in r.items() if k != "wall_ms"} for r in reader])
    assert rows[0] == rows[1]
    assert len(rows[0]) == 6
    assert rows[0][0]["algo"] == "greedy" and rows[0][0]["max_unbalance_num"] == "3"
    monkeypatch.setenv("BC_THREADS", "zero")
    assert main(["bench", "--suite", suite, "--out", str(out)]) == 2


def test_module_entry_point(tmp_path):
    inp = _write(tmp_path / "e1.json", serialize(e1()))
    proc = subprocess.run([sys.executable, "-m", "balanced_cover", "chain", "--in", inp],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert loads(proc.stdout)["max_unbalance"] == "3/10"
