import copy
import csv
import io
import json
import subprocess
import sys

import pytest

from segalkit.cli import RunConfig, InputError, main, simplicial_from_json, simplicial_to_json
from segalkit.corpus import cyclic_group, poset_category
from segalkit.simplicial_objects import nerve


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def nerve_file(tmp_path):
    path = tmp_path / "chain.json"
    path.write_text(json.dumps(simplicial_to_json(nerve(poset_category(3, [(0, 1), (1, 2)], "A2"), 3))))
    return path


def test_hall_table_csv(capsys):
    code, out, _ = run_cli(capsys, "hall-table", "--q", "2", "--dmax", "2")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["a", "b", "c", "numerator", "denominator"]
    assert ["[1]", "[1]", "[2]", "3", "1"] in rows


def test_hall_table_json(capsys):
    code, out, _ = run_cli(capsys, "hall-table", "--dmax", "3", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert {"a": "[1]", "b": "[2]", "c": "[3]", "numerator": 7, "denominator": 1} in data


def test_check_segal_on_a_serialized_nerve(capsys, nerve_file):
    code, out, _ = run_cli(capsys, "check-segal", "--input", str(nerve_file), "--check", "1-segal", "--format", "json")
    assert code == 0
    rep = json.loads(out)
    assert rep["passed"] and rep["instances"] > 0


def test_check_segal_failure_exit_code(capsys):
    code, out, _ = run_cli(capsys, "check-segal", "--builtin", "s", "--check", "1-segal", "--levels", "2")
    assert code == 1
    assert "FAIL" in out


def test_check_segal_builtin_passes(capsys):
    code, out, _ = run_cli(capsys, "check-segal", "--builtin", "s", "--levels", "3")
    assert code == 0
    assert "pass" in out


def test_check_on_a_morphism(capsys):
    code, _, _ = run_cli(capsys, "check-segal", "--builtin", "pi", "--check", "active-equifibered", "--levels", "2")
    assert code == 0
    code, _, err = run_cli(capsys, "check-segal", "--builtin", "pi", "--check", "2-segal", "--levels", "2")
    assert code == 2 and "--check" in err


def strip_payload(data):
    data = copy.deepcopy(data)
    for level in data["levels"].values():
        for m in level["morphisms"]:
            m.pop("data")
    return data


def test_serialization_roundtrip():
    for X in (nerve(cyclic_group(2), 3), nerve(poset_category(3, [(0, 2), (1, 2)]), 2)):
        data = json.loads(json.dumps(simplicial_to_json(X)))
        Y = simplicial_from_json(data)
        again = simplicial_to_json(Y)
        # reloaded morphisms carry their ids as payload; everything else is unchanged
        assert strip_payload(again) == strip_payload(data)
        assert simplicial_to_json(simplicial_from_json(again)) == again
        for n in range(X.N + 1):
            assert len(Y.level(n).objects()) == len(X.level(n).objects())
            assert Y.level(n).cardinality() == X.level(n).cardinality()


def test_build_commands_emit_loadable_json(capsys, tmp_path):
    out_file = tmp_path / "s.json"
    code, _, _ = run_cli(capsys, "build-s", "--levels", "2", "--output", str(out_file))
    assert code == 0
    X = simplicial_from_json(json.loads(out_file.read_text()))
    assert X.N == 2 and len(X.level(1).objects()) == 3
    code, _, _ = run_cli(capsys, "check-segal", "--input", str(out_file), "--check", "2-segal")
    assert code == 0


def test_output_is_deterministic(capsys):
    first = run_cli(capsys, "build-rel", "--levels", "2")[1]
    second = run_cli(capsys, "build-rel", "--levels", "2")[1]
    assert first == second


def test_missing_file(capsys, tmp_path):
    code, _, err = run_cli(capsys, "check-segal", "--input", str(tmp_path / "nope.json"))
    assert code == 2 and "nope.json" in err


def test_malformed_json_reports_line_and_column(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"shape": "simplex",\n  "truncation": }')
    code, _, err = run_cli(capsys, "check-segal", "--input", str(bad))
    assert code == 2
    assert f"{bad}:2:" in err


def test_structural_errors_are_located(nerve_file):
    data = json.loads(nerve_file.read_text())
    broken = json.loads(json.dumps(data))
    del broken["levels"]["1"]["compose"]
    with pytest.raises(InputError, match=r"\$\.levels\[1\]: missing field 'compose'"):
        simplicial_from_json(broken)
    broken = json.loads(json.dumps(data))
    del broken["generators"]["d:2:0"]
    with pytest.raises(InputError, match=r"generators\[d:2:0\]: missing"):
        simplicial_from_json(broken)
    broken = json.loads(json.dumps(data))
    broken["shape"] = "cube"
    with pytest.raises(InputError, match="unknown shape"):
        simplicial_from_json(broken)


def test_face_that_breaks_an_identity_is_rejected(nerve_file):
    data = json.loads(nerve_file.read_text())
    gen = data["generators"]["d:2:0"]["objects"]
    keys = sorted(gen)
    # send two level-2 objects to the image of another
    gen[keys[0]], gen[keys[-1]] = gen[keys[-1]], gen[keys[0]]
    with pytest.raises(InputError, match="simplicial identities fail|no image"):
        simplicial_from_json(data)


def test_bad_options(capsys):
    assert run_cli(capsys, "hall-table", "--q", "4")[0] == 2
    assert run_cli(capsys, "check-segal")[0] == 2
    assert run_cli(capsys, "check-segal", "--builtin", "s", "--levels", "0")[0] == 2
    with pytest.raises(InputError):
        RunConfig("hall-table", format="xml")


def test_insufficient_depth_is_a_usage_error(capsys, nerve_file):
    code, _, err = run_cli(capsys, "check-segal", "--input", str(nerve_file), "--levels", "5")
    assert code == 2 and "level" in err


def test_localize_demo(capsys):
    code, out, _ = run_cli(capsys, "localize-demo", "--bound", "2", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["passed"] and data["objects"] > 0 and not data["failures"]


def test_span_commands(capsys):
    code, out, _ = run_cli(capsys, "span-check", "--levels", "2", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert rows and all(r["result"] == "pass" for r in rows)


def test_module_table(capsys):
    code, out, _ = run_cli(capsys, "module-table", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert {"algebra": "[1]", "module": "[0]", "result": "[2]<01;10>", "numerator": "3", "denominator": "1"} in rows


def test_verify_laws(capsys):
    code, out, _ = run_cli(capsys, "verify-laws", "--format", "json")
    assert code == 0
    assert all(r["passed"] for r in json.loads(out))


def test_corpus_command(capsys):
    code, out, _ = run_cli(capsys, "corpus", "--size", "6", "--levels", "3")
    assert code == 0
    assert out.strip().endswith("agreement 6/6")


def test_console_entry_point():
    res = subprocess.run([sys.executable, "-m", "segalkit.cli", "hall-table", "--dmax", "1"], capture_output=True, text=True)
    assert res.returncode == 0
    assert res.stdout.splitlines()[0] == "a,b,c,numerator,denominator"
