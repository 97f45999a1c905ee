import io
import json
import subprocess
import sys

import pytest

from signedcover import CoverCertificate, build_necklace, format_edge_list, parse_edge_list, verify_cover
from signedcover.cli import main


@pytest.fixture
def write(tmp_path):
    def _write(text, name="g.txt"):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return _write


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_analyze_negative_loop(capsys, write):
    code, out, _ = run(capsys, "analyze", write("e 0 0 -\n"))
    assert code == 0
    assert "coloops: {0}" in out and "flow_admissible: false" in out


def test_analyze_json(capsys, write):
    code, out, _ = run(capsys, "analyze", "--format", "json", write("e 0 0 -\ne 0 0 -\n"))
    data = json.loads(out)
    assert code == 0 and data["flow_admissible"] and data["coloops"] == [] and data["signed_circuits"] == 1


def test_cover_necklace(capsys, write):
    g = build_necklace(3)
    code, out, _ = run(capsys, "cover", "--k", "1", "--format", "json", write(format_edge_list(g)))
    assert code == 0
    data = json.loads(out)
    assert len(data["members"]) == 3
    cert = CoverCertificate.from_records(g, data["k"], data["members"])
    assert verify_cover(g, cert)


def test_cover_infeasible(capsys, write):
    code, out, _ = run(capsys, "cover", "--k", "2", write("e 0 0 -\n"))
    assert code == 1 and "no 2-cover" in out


def test_cover_budget(capsys, write):
    g = build_necklace(6, [2] * 12)
    text = format_edge_list(g.with_signs({e: 1 for e in g.edges}))
    code, _, err = run(capsys, "cover", "--k", "5", "--budget", "1", write(text))
    assert code == 3 and "resource limit" in err


def test_min_cover(capsys, write):
    code, out, _ = run(capsys, "min-cover", "--max", "6", write("e 0 1 +\ne 1 2 +\ne 0 2 +\n"))
    assert code == 0 and out.startswith("min_k: 1")
    code, _, _ = run(capsys, "min-cover", write("e 0 0 -\n"))
    assert code == 1


def test_parse_error_position(capsys, write):
    code, _, err = run(capsys, "analyze", write("e 0 1 +\ne 1 2 ?\n"))
    assert code == 2 and "line 2, column 7" in err


def test_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "analyze", str(tmp_path / "nope.txt"))
    assert code == 2 and "cannot read" in err


def test_stdin(capsys, monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO("e 0 1 +\ne 1 2 +\ne 0 2 +\n"))
    code, out, _ = run(capsys, "circuits", "-")
    assert code == 0 and out.strip() == "balanced 0 1 2"


def test_signed_circuits(capsys, write):
    code, out, _ = run(capsys, "signed-circuits", write("e 0 0 -\ne 0 1 +\ne 1 1 -\n"))
    assert code == 0 and out.strip() == "barbell 0 1 2"


def test_decompose_modes(capsys, write):
    path = write(format_edge_list(build_necklace(3)))
    code, out, _ = run(capsys, "decompose", "--optimal", "--format", "json", path)
    data = json.loads(out)
    assert code == 0 and data["unbalanced_count"] == 2 and data["intersection"][0]["shared_vertices"] == 3
    code, out, _ = run(capsys, "decompose", "--all", "--format", "json", path)
    assert len(json.loads(out)["decompositions"]) == 5
    code, _, err = run(capsys, "decompose", write("e 0 1 +\n"))
    assert code == 2 and "odd-degree" in err


def test_necklace_build_and_detect(capsys, write):
    code, out, _ = run(capsys, "necklace", "--build", "4", "--lengths", "1,2,1,1,1,1,2,2", "--negative-index", "2")
    assert code == 0
    g = parse_edge_list(out)
    code, out, _ = run(capsys, "necklace", "--detect", write(out), "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["length"] == 4 and data["profile"] == [1, 2, 1, 1, 1, 1, 2, 2]
    assert g.num_edges() == 11
    code, _, _ = run(capsys, "necklace", "--detect", write("e 0 1 +\ne 1 2 +\ne 0 2 +\n"))
    assert code == 1
    code, _, _ = run(capsys, "necklace", "--build", "2")
    assert code == 2


def test_sweep_exit_codes(capsys, tmp_path):
    code, out, _ = run(capsys, "sweep", "--property", "thm_6cover", "--max-v", "3", "--max-e", "6")
    assert code == 0 and "result: pass" in out
    saved = tmp_path / "cex"
    code, out, _ = run(
        capsys, "sweep", "--property", "one_cover", "--max-v", "1", "--max-e", "2",
        "--format", "json", "--save-counterexamples", str(saved),
    )
    assert code == 1 and json.loads(out)["counterexamples"]
    files = sorted(saved.iterdir())
    assert files and parse_edge_list(files[0].read_text()).num_edges() > 0


def test_sweep_guard(capsys):
    code, _, _ = run(capsys, "sweep", "--property", "thm_6cover", "--max-v", "9")
    assert code == 3


def test_lemma(capsys, write):
    path = write(format_edge_list(build_necklace(3)))
    code, out, _ = run(capsys, "lemma", "unbalanced_neighbours_necklace", path)
    assert code == 0 and "status: pass" in out
    code, _, _ = run(capsys, "lemma", "one_cover", write("e 0 0 +\ne 0 0 -\n"))
    assert code == 1


def test_bad_flags(capsys):
    with pytest.raises(SystemExit) as info:
        main(["cover", "x.txt"])
    assert info.value.code == 2


def test_module_entry_point(tmp_path):
    p = tmp_path / "g.txt"
    p.write_text("e 0 0 -\n")
    res = subprocess.run([sys.executable, "-m", "signedcover", "analyze", str(p)], capture_output=True, text=True)
    assert res.returncode == 0 and "flow_admissible: false" in res.stdout
