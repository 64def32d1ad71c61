import json
import shutil
import subprocess
from pathlib import Path

import pytest
from click.testing import CliRunner

from tracehom.chains import SYSTEMS, homology
from tracehom.cli import main
from tracehom.msets import PointedMSet
from tracehom.alphabet import IndependenceAlphabet

PROBLEMS = Path(__file__).resolve().parent.parent / "problems"
ACTION_FILES = sorted(p.name for p in PROBLEMS.glob("*.json")
                      if "action" in json.loads(p.read_text()))


def run(*args):
    return CliRunner().invoke(main, [str(a) for a in args])


def write(tmp_path, name, payload):
    path = tmp_path / name
    path.write_text(payload if isinstance(payload, str)
                    else json.dumps(payload))
    return path


# --- homology -------------------------------------------------------------

def test_homology_human_punctured():
    result = run("homology", PROBLEMS / "x0_cycle4.json",
                 "--coeff", "punctured")
    assert result.exit_code == 0
    assert result.stdout.splitlines() == [
        "coefficients: punctured",
        "H_0 = 0",
        "H_1 = 0",
        "H_2 = Z",
    ]


def test_homology_human_delta_default():
    result = run("homology", PROBLEMS / "x0_cycle4.json")
    assert result.exit_code == 0
    assert "H_1 = Z^4" in result.stdout
    assert "H_2 = Z^5" in result.stdout


def test_homology_one_point_binomials():
    result = run("homology", PROBLEMS / "one_point_pair.json")
    assert result.stdout.splitlines()[1:] == \
        ["H_0 = Z", "H_1 = Z^2", "H_2 = Z"]


def test_homology_max_degree_pads():
    result = run("homology", PROBLEMS / "x0_cycle4.json", "--max-degree", 4)
    lines = result.stdout.splitlines()
    assert lines[-2:] == ["H_3 = 0", "H_4 = 0"]


def test_homology_max_degree_truncates():
    result = run("homology", PROBLEMS / "x0_cycle4.json", "--max-degree", 1)
    assert "H_2" not in result.stdout


def test_homology_json_round_trip():
    for name in ACTION_FILES:
        doc = json.loads((PROBLEMS / name).read_text())
        alpha = IndependenceAlphabet(doc["generators"], doc["independence"])
        m = PointedMSet(alpha, doc["elements"], doc["action"])
        for coeff, system in SYSTEMS.items():
            result = run("homology", PROBLEMS / name, "--coeff", coeff,
                         "--format", "json")
            assert result.exit_code == 0
            payload = json.loads(result.stdout)
            assert payload["coefficients"] == coeff
            expected = homology(m, system)
            got = payload["homology"]
            assert [g["degree"] for g in got] == list(range(len(expected)))
            for g, h in zip(got, expected):
                assert g["rank"] == h.free_rank
                assert tuple(g["torsion"]) == h.torsion


def test_homology_needs_action():
    result = run("homology", PROBLEMS / "cycle4.json")
    assert result.exit_code == 2
    assert "needs" in result.stderr


# --- schema ---------------------------------------------------------------

def test_schema_cycle4():
    result = run("schema", PROBLEMS / "cycle4.json")
    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    assert lines[0] == "p = [1, 4, 4]"
    assert "H̃_0 = 0" in lines
    assert "H̃_1 = Z" in lines


def test_schema_works_on_action_files_too():
    result = run("schema", PROBLEMS / "fan4_complete3.json")
    assert result.stdout.splitlines()[0] == "p = [1, 3, 3, 1]"


def test_schema_empty_alphabet(tmp_path):
    path = write(tmp_path, "empty.json", {"generators": []})
    result = run("schema", path)
    assert result.exit_code == 0
    assert "p = [1]" in result.stdout
    assert "empty schema" in result.stdout


def test_schema_flagify_projective_plane():
    result = run("schema", PROBLEMS / "rp2_faces.txt", "--flagify")
    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    assert lines[0] == "p = [1, 31, 90, 60]"
    assert "H̃_1 = Z/2" in lines
    assert "H̃_2 = 0" in lines


def test_schema_flagify_rejects_bad_face(tmp_path):
    path = write(tmp_path, "faces.txt", "1 2\n2 2\n")
    result = run("schema", path, "--flagify")
    assert result.exit_code == 2
    assert "line 2" in result.stderr


def test_schema_json():
    result = run("schema", PROBLEMS / "cycle4.json", "--format", "json")
    payload = json.loads(result.stdout)
    assert payload["clique_counts"] == [1, 4, 4]
    assert payload["reduced_homology"][1] == \
        {"degree": 1, "rank": 1, "torsion": []}


# --- verify ---------------------------------------------------------------

def test_verify_reference_file_passes():
    result = run("verify", PROBLEMS / "x0_cycle4.json")
    assert result.exit_code == 0
    assert "[PASS] split degree 1" in result.stdout
    assert "[PASS] aug degree 2" in result.stdout
    assert "FAIL" not in result.stdout


def test_verify_alphabet_only_file():
    result = run("verify", PROBLEMS / "cycle4.json")
    assert result.exit_code == 0
    assert "[N-A ] split: file has no action table" in result.stdout
    assert "[PASS] aug degree 1" in result.stdout


def test_verify_single_check_json():
    result = run("verify", PROBLEMS / "cycle4.json", "--which", "aug",
                 "--format", "json")
    payload = json.loads(result.stdout)
    assert len(payload["checks"]) == 1
    check = payload["checks"][0]
    assert check["claim"] == "aug"
    assert check["status"] == "PASS"
    assert all(d["equal"] for d in check["degrees"])


def test_verify_no_degrees(tmp_path):
    path = write(tmp_path, "empty.json", {"generators": []})
    result = run("verify", path, "--which", "aug")
    assert result.exit_code == 0
    assert "[PASS] aug: no degrees to check" in result.stdout


def test_verify_not_applicable_conditions(tmp_path):
    path = write(tmp_path, "skewed.json", {
        "generators": ["e1", "e2"],
        "independence": [],
        "elements": ["x0", "x1"],
        "action": {
            "x0": {"e1": "x1", "e2": "*"},
            "x1": {"e1": "*", "e2": "*"},
        },
    })
    result = run("verify", path, "--which", "power")
    assert result.exit_code == 0
    assert "[N-A ] power:" in result.stdout
    assert "not full" in result.stdout


@pytest.mark.parametrize("name", ACTION_FILES)
def test_verify_bundled_corpus(name):
    result = run("verify", PROBLEMS / name)
    assert result.exit_code == 0, result.output
    assert "FAIL" not in result.stdout


# --- iso ------------------------------------------------------------------

def test_iso_negative_pair():
    result = run("iso", PROBLEMS / "chain2_cycle4.json",
                 PROBLEMS / "fan2_cycle4.json")
    assert result.exit_code == 1
    assert "NOT ISOMORPHIC (searched 2 basepoint-preserving bijections)" \
        in result.stdout


def test_iso_self():
    result = run("iso", PROBLEMS / "chain2_cycle4.json",
                 PROBLEMS / "chain2_cycle4.json")
    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    assert lines[0] == "ISOMORPHIC"
    assert "  x0 -> x0" in lines
    assert "  * -> *" in lines


def test_iso_relabeled_witness(tmp_path):
    path = write(tmp_path, "relabeled.json", {
        "generators": ["a", "b", "c", "d"],
        "independence": [["a", "b"], ["b", "c"], ["c", "d"], ["d", "a"]],
        "elements": ["y1", "y0"],
        "action": {
            "y1": {g: "y0" for g in "abcd"},
            "y0": {g: "*" for g in "abcd"},
        },
    })
    result = run("iso", PROBLEMS / "chain2_cycle4.json", path)
    assert result.exit_code == 0
    assert "  x0 -> y1" in result.stdout.splitlines()


def test_iso_json():
    result = run("iso", PROBLEMS / "chain2_cycle4.json",
                 PROBLEMS / "fan2_cycle4.json", "--format", "json")
    payload = json.loads(result.stdout)
    assert payload == {"isomorphic": False, "witness": None,
                       "bijections_searched": 2}
    assert result.exit_code == 1


def test_iso_alphabet_mismatch():
    result = run("iso", PROBLEMS / "chain2_cycle4.json",
                 PROBLEMS / "fan4_complete3.json")
    assert result.exit_code == 2
    assert "different alphabets" in result.stderr


# --- counterexample -------------------------------------------------------

def test_counterexample_cycle4_human():
    result = run("counterexample", PROBLEMS / "cycle4.json")
    assert result.exit_code == 0
    out = result.stdout
    assert "isomorphic: NO (searched 2 bijections)" in out
    assert "delta:" in out and "punctured:" in out
    assert "MISMATCH" not in out
    assert "verdict: non-isomorphic actions, identical homology" in out


def test_counterexample_json():
    result = run("counterexample", PROBLEMS / "cycle4.json",
                 "--format", "json")
    payload = json.loads(result.stdout)
    assert payload["isomorphic"] is False
    assert payload["homology_equal"] is True
    degree2 = payload["tables"]["delta"][2]
    assert degree2["chain"] == degree2["fan"] == {"rank": 6, "torsion": []}


def test_counterexample_empty_alphabet(tmp_path):
    path = write(tmp_path, "empty.json", {"generators": []})
    result = run("counterexample", path)
    assert result.exit_code == 0
    assert "isomorphic: YES" in result.stdout
    assert "note:" in result.stdout


# --- malformed input ------------------------------------------------------

def test_unparseable_json(tmp_path):
    result = run("homology", write(tmp_path, "broken.json", "{"))
    assert result.exit_code == 2
    assert "error:" in result.stderr


def test_top_level_not_object(tmp_path):
    result = run("schema", write(tmp_path, "list.json", "[]"))
    assert result.exit_code == 2
    assert "top level" in result.stderr


def test_unknown_key(tmp_path):
    path = write(tmp_path, "extra.json", {"generators": ["a"], "extra": 1})
    result = run("schema", path)
    assert result.exit_code == 2
    assert "unknown key 'extra'" in result.stderr


def test_missing_action_cell_named(tmp_path):
    path = write(tmp_path, "partial.json", {
        "generators": ["a", "b"],
        "independence": [],
        "elements": ["x0"],
        "action": {"x0": {"a": "*"}},
    })
    result = run("homology", path)
    assert result.exit_code == 2
    assert "missing action entry ('x0', 'b')" in result.stderr


def test_elements_without_action(tmp_path):
    path = write(tmp_path, "half.json",
                 {"generators": ["a"], "elements": ["x0"]})
    result = run("homology", path)
    assert result.exit_code == 2
    assert "together" in result.stderr


def test_commutation_violation_reported(tmp_path):
    path = write(tmp_path, "bad_square.json", {
        "generators": ["a", "b"],
        "independence": [["a", "b"]],
        "elements": ["x0", "x1", "x2", "x3"],
        "action": {
            "x0": {"a": "x1", "b": "x2"},
            "x1": {"a": "*", "b": "*"},
            "x2": {"a": "x3", "b": "*"},
            "x3": {"a": "*", "b": "*"},
        },
    })
    result = run("homology", path)
    assert result.exit_code == 2
    assert "commutation fails at 'x0'" in result.stderr


def test_missing_file():
    result = run("homology", "no_such_file.json")
    assert result.exit_code == 2


# --- installed entry point ------------------------------------------------

def test_console_script():
    exe = shutil.which("tracehom")
    assert exe, "console script not installed"
    done = subprocess.run([exe, "--help"], capture_output=True, text=True)
    assert done.returncode == 0
    for sub in ("homology", "schema", "verify", "iso", "counterexample"):
        assert sub in done.stdout
