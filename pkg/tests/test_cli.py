import io
import json
import subprocess
import sys

import pytest

from conftest import FIXTURES
from rathom.cdga import CdgaPresentation
from rathom.cli import main
from rathom.freelie import LieElement, parse_lie
from rathom.simplicial import FiniteSimplicialSet, sphere


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main([str(a) for a in argv], stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def fx(name):
    return FIXTURES / f"{name}.json"


def test_bch_text():
    assert run("bch", 2) == (0, "a + b + 1/2·[a,b]\n", "")
    code, out, _ = run("bch", 3)
    assert out.strip() == "a + b + 1/2·[a,b] + 1/12·[a,[a,b]] - 1/12·[b,[a,b]]"


def test_bch_json_round_trip():
    code, out, _ = run("--json", "bch", 4)
    data = json.loads(out)
    assert LieElement.from_json(data["terms"], 4, data["names"]) == parse_lie(
        run("bch", 4)[1], 4, ["a", "b"])


def test_homology_and_cohomology():
    assert run("homology", fx("s2")) == (0, "H0=1 H1=0 H2=1\n", "")
    assert run("cohomology", fx("torus"))[1] == "H^0=1 H^1=2 H^2=1\n"
    data = json.loads(run("homology", fx("s1vs1"), "--json")[1])
    assert data == {"cohomological": False, "betti": [1, 2]}


def test_fixture_files_match_builders():
    assert FiniteSimplicialSet.from_json(json.loads(fx("s2").read_text())) == sphere(2)


def test_word_commands():
    assert run("lcs-weight", "x y x^-1 y^-1", "-n", 4)[1] == "2\n"
    assert run("lcs-weight", "1", "-n", 4)[1] == ">4\n"
    code, out, _ = run("log-word", "x1 x2 x1^-1 x2^-1", "-n", 2)
    assert out == "[x1,x2]\n"
    data = json.loads(run("--json", "log-word", "x1^2", "-n", 3)[1])
    assert data == {"class_bound": 3, "coordinates": {"x1": "2"}}


def test_group_commands():
    code, out, _ = run("mul", "a", "b", "-n", 2, "--names", "a,b")
    assert out == "a + b + 1/2·[a,b]\n"
    code, out, _ = run("power", "2 x1 + [x1,x2]", "1/2", "-n", 3)
    assert parse_lie(out, 3) == parse_lie("x1 + 1/2[x1,x2]", 3)
    data = json.loads(run("--json", "mul", "x1", "x2", "-n", 3)[1])
    assert LieElement.from_json(data["coordinates"], 3) == parse_lie(run("mul", "x1", "x2", "-n", 3)[1], 3)


def test_hall():
    code, out, _ = run("--json", "hall", 3, 4)
    assert json.loads(out)["dims"] == [3, 3, 8, 18]


def test_apl_cohomology_and_inconclusive_exit():
    code, out, _ = run("apl-cohomology", fx("s2"), "--degree", 2, "--dmax", 8)
    assert code == 0 and out.startswith("H^2=1 (stable")
    code, out, _ = run("apl-cohomology", fx("s2"), "--degree", 2, "--dmax", 3)
    assert code == 3 and "inconclusive" in out


def test_minimal_model_and_pi_rational():
    code, out, _ = run("minimal-model", fx("s2"), "--up-to", 6, "--dmax", 8)
    assert code == 0 and "d(e3_1) = e2_1^2" in out
    code, out, _ = run("--json", "minimal-model", fx("cdga_s2"), "--up-to", 6)
    data = json.loads(out)
    M = CdgaPresentation.from_json(data["model"])
    assert M.to_json() == data["model"]
    assert data["generator_counts"][:2] == [[2, 1], [3, 1]]
    code, out, _ = run("--json", "pi-rational", fx("s3"), "--up-to", 6, "--dmax", 8)
    assert json.loads(out)["dims"] == [[2, 0], [3, 1], [4, 0], [5, 0], [6, 0]]


def test_checks():
    assert run("check-minimal", fx("cdga_s2"))[1] == "minimal\n"
    assert run("check-minimal", fx("cdga_t2"))[1] == "not minimal\n"
    assert run("check-realization", fx("cdga_ext1"), "-n", 1, "--assign", "x=3*dt1")[1] == "point\n"
    assert run("check-realization", fx("cdga_ext1"), "-n", 2, "--assign", "x=t1*dt2")[1] == "not a point\n"


@pytest.mark.parametrize("argv,code,kind", [
    (["bch", "0"], 2, "usage"),
    (["mul", "x1"], 2, "usage"),
    (["mul", "x1", "[x1,", "-n", "3"], 1, "parse"),
    (["homology", "/nonexistent/file.json"], 1, "io"),
    (["check-minimal", "FIX/cdga_ext1.json"], 1, "precondition"),
    (["pi-rational", "FIX/torus.json", "--up-to", "3", "--dmax", "8"], 1, "precondition"),
    (["minimal-model", "FIX/s2.json", "--up-to", "3"], 2, "usage"),
    (["check-realization", "FIX/cdga_ext1.json", "-n", "1", "--assign", "x=t1"], 1, "precondition"),
    (["bogus"], 2, "usage"),
])
def test_structured_errors(argv, code, kind):
    argv = [a.replace("FIX", str(FIXTURES)) for a in argv]
    got, out, err = run("--json", *argv)
    assert got == code and out == ""
    assert json.loads(err)["error"]["type"] == kind


def test_bad_json_has_location(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{"dimension_bound": 1,\n "simplices": [}')
    code, _, err = run("homology", p)
    assert code == 1 and f"{p}:2:" in err


def test_deterministic_output():
    argv = ["--json", "minimal-model", str(fx("s2")), "--up-to", "5", "--dmax", "8"]
    assert run(*argv) == run(*argv)


def test_console_entry_point():
    res = subprocess.run([sys.executable, "-m", "rathom.cli", "bch", "2"], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == "a + b + 1/2·[a,b]\n"
