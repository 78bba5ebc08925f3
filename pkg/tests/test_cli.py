import json

import pytest

from qlat.cli import main
from qlat.laurent import LaurentPoly
from qlat.render import matrix_text, poly_latex, poly_text, qt_text
from qlat.laurent import QTElement

TRIANGLE = """\
graph triangle
vertices 3
edge 1 1 2 tree
edge 2 2 3 tree
edge 3 1 3
"""

TRIANGLE_OTHER_TREE = """\
graph other
vertices 3
edge 1 1 2
edge 2 2 3 tree
edge 3 1 3 tree
"""

THETA = """\
graph theta
vertices 2
edge 1 1 2 tree
edge 2 1 2
edge 3 1 2
"""


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, text in (("triangle", TRIANGLE), ("other", TRIANGLE_OTHER_TREE),
                       ("theta", THETA)):
        p = tmp_path / f"{name}.graph"
        p.write_text(text)
        paths[name] = str(p)
    return paths


def test_poly_text_pinned():
    assert poly_text(LaurentPoly.from_terms([(0, 1), (2, 2)])) == "1 + 2*q^2"
    assert poly_text(LaurentPoly.from_terms([(-1, -1), (1, 1)])) == "-q^-1 + q"
    assert poly_text(LaurentPoly.zero()) == "0"
    assert poly_text(LaurentPoly.q_power(1, -1)) == "-q"
    assert poly_text(LaurentPoly.from_int(-7)) == "-7"
    assert qt_text(QTElement.monomial(1, 1, 1)) == "q*t"
    assert qt_text(QTElement(LaurentPoly.one(), LaurentPoly.q_power(1, -2))) == "1 - 2*q*t"


def test_poly_latex_pinned():
    assert poly_latex(LaurentPoly.from_terms([(0, 1), (2, 2)])) == "1 + 2 q^{2}"
    assert poly_latex(LaurentPoly.from_terms([(-1, 1)])) == "q^{-1}"


def test_det_command(files, capsys):
    assert main(["det", "--cut", "--normalize", files["triangle"]]) == 0
    assert capsys.readouterr().out == "1 + 2*q^2\n"
    assert main(["det", "--flow", files["triangle"]]) == 0
    assert capsys.readouterr().out == "1 + 2*q^2\n"


def test_det_json(files, capsys):
    assert main(["--format", "json", "det", "--cut", files["triangle"]]) == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj == {"min_deg": 0, "coeffs": [1, 0, 2]}


def test_gram_commands(files, capsys):
    assert main(["gram", "--flow", files["triangle"]]) == 0
    out = capsys.readouterr().out
    assert out == "# rows: 3\n# cols: 3\n1 + 2*q^2\n"
    assert main(["gram", "--cut", files["triangle"]]) == 0
    out = capsys.readouterr().out
    assert "1 + q^2\tq^2" in out
    assert main(["gram", "--k0", files["triangle"]]) == 0
    out = capsys.readouterr().out
    assert "q*t" in out


def test_gram_latex(files, capsys):
    assert main(["--format", "latex", "gram", "--flow", files["triangle"]]) == 0
    out = capsys.readouterr().out
    assert out.startswith("\\begin{bmatrix}")
    assert "1 + 2 q^{2}" in out


def test_matrix_tree_command(files, capsys):
    assert main(["matrix-tree", files["triangle"]]) == 0
    det_out = capsys.readouterr().out
    assert main(["matrix-tree", "--oracle", files["triangle"]]) == 0
    oracle_out = capsys.readouterr().out
    assert det_out == oracle_out == "1 + 2*q^2\n"


def test_iso_command(files, capsys):
    assert main(["iso", "--flow", files["triangle"], files["other"]]) == 0
    out = capsys.readouterr().out
    assert "->" in out
    assert main(["iso", "--flow", files["triangle"], files["theta"]]) == 0
    assert capsys.readouterr().out == "none\n"
    assert main(["--format", "json", "iso", "--cut", files["triangle"],
                 files["other"]]) == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj["isomorphic"] is True


def test_two_iso_command(files, capsys):
    assert main(["two-iso", files["triangle"], files["other"]]) == 0
    out = capsys.readouterr().out.strip().splitlines()
    assert len(out) == 3 and all("->" in line for line in out)
    assert main(["two-iso", files["triangle"], files["theta"]]) == 0
    assert capsys.readouterr().out == "none\n"


def test_build_bipartite_and_dual_round_trip(files, capsys, tmp_path):
    assert main(["build-bipartite", files["triangle"]]) == 0
    out = capsys.readouterr().out
    assert out == ("bipartite triangle\npart0 1 2\npart1 3\n"
                   "sedge 1 3 -1\nsedge 2 3 -1\n")
    bp = tmp_path / "t.bipartite"
    bp.write_text(out)
    assert main(["dual", str(bp)]) == 0
    dual_out = capsys.readouterr().out
    assert "part0 3" in dual_out and "sedge 3 1 +1" in dual_out
    # dual twice returns the original sign matrix
    bp2 = tmp_path / "d.bipartite"
    bp2.write_text(dual_out)
    assert main(["dual", str(bp2)]) == 0
    again = capsys.readouterr().out
    assert "sedge 1 3 -1" in again and "part0 1 2" in again


def test_gram_accepts_bipartite_files(files, capsys, tmp_path):
    assert main(["build-bipartite", files["triangle"]]) == 0
    bp = tmp_path / "t.bipartite"
    bp.write_text(capsys.readouterr().out)
    assert main(["det", "--flow", str(bp)]) == 0
    assert capsys.readouterr().out == "1 + 2*q^2\n"


def test_algebra_commands(files, capsys):
    assert main(["algebra", "--resolutions", files["triangle"]]) == 0
    out = capsys.readouterr().out
    assert "simple 3: P3 <- P1{1}<t> + P2{1}<t>" in out
    assert main(["algebra", "--classes", files["triangle"]]) == 0
    out = capsys.readouterr().out
    assert "simple 1: (1 + q^2, q^2, -q*t)" in out
    assert main(["algebra", "--homs", files["triangle"]]) == 0
    assert "1 + 2*q^2" in capsys.readouterr().out


def test_verify_pass_and_fail_exit_codes(files, capsys, tmp_path):
    assert main(["verify", files["triangle"]]) == 0
    out = capsys.readouterr().out
    assert "OK:" in out and "FAIL" not in out
    # a bridged graph fails validation
    bad = tmp_path / "bridge.graph"
    bad.write_text("graph bridge\nvertices 2\nedge 1 1 2 tree\n")
    assert main(["verify", str(bad)]) == 1
    out = capsys.readouterr().out
    assert "FAIL bridge.validation" in out


def test_verify_family_matches_jobs(files, capsys):
    assert main(["verify", "--family", "3"]) == 0
    serial = capsys.readouterr().out
    assert main(["--jobs", "2", "verify", "--family", "3"]) == 0
    parallel = capsys.readouterr().out
    assert serial == parallel
    assert "q2iso_pairs" in serial


def test_verify_json(files, capsys):
    assert main(["--format", "json", "verify", files["triangle"]]) == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj["ok"] is True
    assert all(c["ok"] for c in obj["checks"])


def test_verify_bipartite_file(files, capsys, tmp_path):
    assert main(["build-bipartite", files["triangle"]]) == 0
    bp = tmp_path / "t.bipartite"
    bp.write_text(capsys.readouterr().out)
    assert main(["verify", str(bp)]) == 0
    out = capsys.readouterr().out
    assert "koszul_identity" in out and "FAIL" not in out


def test_bridged_input_warns_on_stderr(tmp_path, capsys):
    bridged = tmp_path / "b.graph"
    bridged.write_text("graph b\nvertices 2\nedge 1 1 2 tree\n")
    assert main(["det", "--flow", str(bridged)]) == 0
    captured = capsys.readouterr()
    assert captured.out == "1\n"
    assert "warning" in captured.err


def test_parse_error_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.graph"
    bad.write_text("graph g\nvertices 2\nedge 1 1 9\n")
    assert main(["det", "--flow", str(bad)]) == 2
    err = capsys.readouterr().err
    assert "line 3" in err
    missing = tmp_path / "missing.graph"
    assert main(["det", "--flow", str(missing)]) == 2


def test_usage_error_exit_code(files):
    with pytest.raises(SystemExit) as exc:
        main(["det", files["triangle"]])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["--bogus-flag"])
    assert exc.value.code == 2


def test_two_iso_requires_graph_files(files, capsys, tmp_path):
    assert main(["build-bipartite", files["triangle"]]) == 0
    bp = tmp_path / "t.bipartite"
    bp.write_text(capsys.readouterr().out)
    assert main(["two-iso", str(bp), files["triangle"]]) == 2


def test_matrix_text_tab_separated():
    from qlat.matrices import QMatrix
    m = QMatrix([[LaurentPoly.one(), LaurentPoly.q_power(2)]],
                row_labels=("a",), col_labels=("x", "y"))
    assert matrix_text(m) == "# rows: a\n# cols: x y\n1\tq^2\n"


def test_single_vertex_graph_through_cli(tmp_path, capsys):
    f = tmp_path / "point.graph"
    f.write_text("graph point\nvertices 1\n")
    assert main(["det", "--flow", str(f)]) == 0
    assert capsys.readouterr().out == "1\n"
    assert main(["matrix-tree", str(f)]) == 0
    assert capsys.readouterr().out == "1\n"
    assert main(["verify", str(f)]) == 0
    capsys.readouterr()


def test_iso_mixing_graph_and_bipartite_files(files, capsys, tmp_path):
    assert main(["build-bipartite", files["triangle"]]) == 0
    bp = tmp_path / "t.bipartite"
    bp.write_text(capsys.readouterr().out)
    assert main(["iso", "--flow", str(bp), files["triangle"]]) == 0
    out = capsys.readouterr().out
    assert out != "none\n" and "->" in out


def test_two_iso_json_and_matrix_tree_latex(files, capsys):
    assert main(["--format", "json", "two-iso", files["triangle"],
                 files["theta"]]) == 0
    assert json.loads(capsys.readouterr().out) == {"two_isomorphic": False}
    assert main(["--format", "json", "two-iso", files["triangle"],
                 files["other"]]) == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj["two_isomorphic"] is True and len(obj["mapping"]) == 3
    assert main(["--format", "latex", "matrix-tree", files["triangle"]]) == 0
    assert capsys.readouterr().out == "1 + 2 q^{2}\n"


def test_json_structured_commands(files, capsys):
    assert main(["--format", "json", "build-bipartite", files["triangle"]]) == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj["part0"] == [1, 2] and obj["sedges"] == [[1, 3, -1], [2, 3, -1]]
    assert main(["--format", "json", "dual", files["triangle"]]) == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj["part0"] == [3] and obj["sedges"] == [[3, 1, 1], [3, 2, 1]]
    assert main(["--format", "json", "algebra", "--resolutions",
                 files["triangle"]]) == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj["3"] == [[[3, 0, 0]], [[1, 1, 1], [2, 1, 1]]]
    assert main(["--format", "json", "gram", "--k0", files["triangle"]]) == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj["rows"] == 3 and obj["entries"][0][2] == {
        "even": {"min_deg": 0, "coeffs": []},
        "odd": {"min_deg": 1, "coeffs": [1]}}


def test_verify_latex_table(files, capsys):
    assert main(["--format", "latex", "verify", files["triangle"]]) == 0
    out = capsys.readouterr().out
    assert out.startswith("\\begin{tabular}") and "PASS" in out
