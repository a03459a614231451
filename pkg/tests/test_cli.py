import json

import pytest

from rank4om.cli import main
from rank4om.io import serialize_chirotope


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def files(tmp_path, bipyramid, interior, cyclic):
    paths = {}
    for name, chi in (("bip", bipyramid), ("int", interior), ("cyc6", cyclic[6])):
        p = tmp_path / f"{name}.chi"
        p.write_text(serialize_chirotope(chi))
        paths[name] = p
    bad = tmp_path / "bad.chi"
    bad.write_text("5 4\n++-+\n")
    paths["bad"] = bad
    return paths


def test_check(capsys, files):
    code, out, _ = run(capsys, "check", files["bip"])
    assert code == 0 and "valid=True" in out
    code, out, _ = run(capsys, "--json", "check", files["bip"])
    assert json.loads(out)["valid"] is True


def test_check_reports_parse_error(capsys, files):
    code, _, err = run(capsys, "check", files["bad"])
    assert code == 2 and "expected 5 signs for C(5,4), got 4" in err
    code, out, _ = run(capsys, "--json", "check", files["bad"])
    assert json.loads(out)["error"] == "ParseError"


def test_polytope(capsys, files):
    code, out, _ = run(capsys, "polytope", files["bip"])
    assert code == 0 and "facets: 123 124 134 235 245 345" in out
    code, out, _ = run(capsys, "polytope", files["int"])
    assert code == 1 and "extreme points: 1 2 3 4" in out


def test_ppc_build_verify_reduce(capsys, files, tmp_path):
    m = tmp_path / "bip.json"
    svg = tmp_path / "bip.svg"
    code, out, _ = run(capsys, "ppc", "build", files["bip"], "--verify", "--out", m, "--svg", svg)
    assert code == 0 and "cocircuits match: True" in out
    assert svg.read_bytes().startswith(b"<svg")
    code, out, _ = run(capsys, "ppc", "verify", m)
    assert code == 0 and out.startswith("violations: 0")
    code, out, _ = run(capsys, "ppc", "reduce", m)
    assert code == 0 and "vertices 14 -> 14" in out
    code, _, err = run(capsys, "ppc", "verify", files["bip"])
    assert code == 2 and "expected a map file" in err


def test_ppc_build_rejects_non_polytope(capsys, files):
    code, _, err = run(capsys, "ppc", "build", files["int"])
    assert code == 2 and "not a matroid polytope" in err


def test_simplicial(capsys, files):
    code, out, _ = run(capsys, "simplicial", files["bip"], "--brute-force")
    assert code == 0
    assert "F = {1, 2, 5}" in out and "brute force: 10 sets; result included: True" in out
    code, out, _ = run(capsys, "--json", "simplicial", files["cyc6"], "--seed-quad", "2,4,5,6")
    data = json.loads(out)
    assert data["F"] == [1, 2, 4] and data["quadruple"] == [2, 4, 5, 3]


def test_mutations(capsys, files):
    code, out, _ = run(capsys, "mutations", files["cyc6"])
    assert code == 0 and out.splitlines()[0] == "6 mutations"
    code, out, _ = run(capsys, "mutations", files["cyc6"], "--flip", "1,2,3,5")
    assert code == 2
    code, out, _ = run(capsys, "--json", "mutations", files["cyc6"], "--explore", "--depth", "1",
                       "--preserve-polytope")
    assert code == 0 and len(json.loads(out)["nodes"]) == 5
    code, out, _ = run(capsys, "mutations", files["cyc6"], "--explore", "--depth", "1")
    assert out.splitlines()[0] == "7 nodes, 6 edges"


def test_gen_and_render(capsys, tmp_path):
    code, out, _ = run(capsys, "gen", "cyclic", 6)
    assert code == 0 and out.splitlines()[1:] == ["6 4", "+" * 15]
    pts = tmp_path / "r.pts"
    run(capsys, "gen", "random", 7, "--seed", 3, "--interior", "--points", "--out", pts)
    assert pts.read_text().splitlines()[0] == "7 3"
    code, out, _ = run(capsys, "polytope", pts)
    assert code == 1
    svg = tmp_path / "r.svg"
    assert run(capsys, "render", pts, "--svg", svg)[0] == 0
    assert b'class="point"' in svg.read_bytes()


def test_bad_arguments(capsys, files):
    with pytest.raises(SystemExit):
        main(["simplicial", str(files["bip"]), "--seed-quad", "1,x"])
    assert "expected comma-separated integers" in capsys.readouterr().err
    code, _, err = run(capsys, "check", "/nonexistent/file")
    assert code == 2 and err.startswith("error:")
