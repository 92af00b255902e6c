import json
import subprocess
import sys
import xml.etree.ElementTree as ET

import pytest

from ke_polytope.casedb import case_to_json, get_case, load_case
from ke_polytope.cli import main

SVG = "{http://www.w3.org/2000/svg}"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_list_table(capsys):
    code, out, _ = run(capsys, "list")
    rows = out.splitlines()[2:]
    assert code == 0 and len(rows) == 6
    assert "Cayley Grassmannian" in rows[4]
    cells = [c.strip() for c in rows[2].split("  ") if c.strip()]
    assert cells[:4] == ["3", "SL(6,C)/Sp(6,C)", "14", "9"]


def test_list_json_and_csv(capsys):
    _, out, _ = run(capsys, "list", "--format", "json")
    data = json.loads(out)
    assert [d["id"] for d in data] == [1, 2, 3, 4, 5, 6]
    assert (data[2]["dimension"], data[2]["fano_index"]) == (14, 9)
    _, out, _ = run(capsys, "list", "--format", "csv")
    assert out.splitlines()[0].startswith("id,name,dimension")
    assert len(out.splitlines()) == 7


def test_check_case_one(capsys):
    code, out, _ = run(capsys, "check", "1")
    assert code == 0
    assert 'barycenter      ("5/4", "5/4·√3")' in out
    assert "= 5/4 x 2rho_theta" in out
    assert out.rstrip().endswith("verdict         KE")


def test_check_all(capsys):
    code, out, _ = run(capsys, "check", "--all")
    assert code == 0 and out.count("verdict         KE") == 6


def test_check_json_report(capsys):
    code, out, _ = run(capsys, "check", "--all", "--format", "json")
    report = json.loads(out)
    assert code == 0 and report["all_ke"]
    c1 = report["cases"][0]
    assert c1["volume"] == {"rat": "0", "sqrt3": "27/5"}
    assert c1["proportionality"] == {"rat": "5/4", "sqrt3": "0"}
    assert "proportionality" not in report["cases"][4]
    assert c1["approx"]["volume"] == pytest.approx(9.353074360871938)


def test_check_json_is_byte_stable():
    cmd = [sys.executable, "-m", "ke_polytope", "check", "--all", "--format", "json"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second


def test_negative_case_file(tmp_path, capsys):
    obj = case_to_json(get_case(2))
    obj["two_rho_theta"] = [{"rat": "2", "sqrt3": "0"}, {"rat": "0", "sqrt3": "1"}]
    obj.pop("expected")
    path = tmp_path / "shifted.json"
    path.write_text(json.dumps(obj))
    code, out, _ = run(capsys, "check", "--case-file", str(path))
    assert code == 2 and "not KE" in out


def test_invalid_case_file(tmp_path, capsys):
    obj = case_to_json(get_case(1))
    obj["multiplicity"] = 0
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(obj))
    code, _, err = run(capsys, "check", "--case-file", str(path))
    assert code == 1 and "ValidationError" in err and "multiplicity" in err


def test_missing_case_file(tmp_path, capsys):
    code, _, err = run(capsys, "check", "--case-file", str(tmp_path / "nope.json"))
    assert code == 1 and "ParseError" in err


@pytest.mark.parametrize("argv", [
    ["check", "9"],
    ["check"],
    ["check", "1", "--all"],
    ["figure", "9"],
    ["verify", "1", "--samples", "10"],
])
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 64


def test_argparse_errors_exit_64(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 64
    with pytest.raises(SystemExit) as exc:
        main(["check", "one"])
    assert exc.value.code == 64


def _points(d):
    nums = [float(t) for t in d.replace("M", " ").replace("L", " ").replace("Z", " ").split()]
    return list(zip(nums[0::2], nums[1::2]))


def test_figure_case_one(capsys):
    code, out, _ = run(capsys, "figure", "1")
    root = ET.fromstring(out.encode())
    poly = root.find(f"{SVG}path[@id='polytope']")
    assert code == 0 and len(_points(poly.get("d"))) == 3
    assert len(root.findall(f"{SVG}line[@class='cone-ray']")) == 2
    assert root.find(f"{SVG}circle[@id='barycenter']") is not None
    assert root.find(f"{SVG}rect[@id='two-rho-theta']") is not None


def test_figure_barycenter_inside_wedge(tmp_path, capsys):
    out_file = tmp_path / "c5.svg"
    assert run(capsys, "figure", "5", "--out", str(out_file))[0] == 0
    root = ET.parse(out_file).getroot()
    bar = root.find(f"{SVG}circle[@id='barycenter']")
    px, py = float(bar.get("cx")), float(bar.get("cy"))
    sides = []
    for i in (1, 2):
        ray = root.find(f"{SVG}line[@id='cone-ray-{i}']")
        x1, y1, x2, y2 = (float(ray.get(k)) for k in ("x1", "y1", "x2", "y2"))
        sides.append((x2 - x1) * (py - y1) - (y2 - y1) * (px - x1))
    # strictly between the two rays: opposite sides of each
    assert sides[0] * sides[1] < 0


def test_verify_deterministic(capsys):
    first = run(capsys, "verify", "1", "--samples", "20000", "--seed", "3")
    second = run(capsys, "verify", "1", "--samples", "20000", "--seed", "3")
    assert first == second
    assert first[1].startswith("samples=20000 seed=3")
    assert len(first[1].splitlines()) == 1 + 2 + 3 + 1


def test_export_round_trip(tmp_path, capsys):
    assert run(capsys, "export", "--all", "--out", str(tmp_path / "cases"))[0] == 0
    for cid in range(1, 7):
        assert load_case(tmp_path / "cases" / f"case{cid}.json") == get_case(cid)
    code, out, _ = run(capsys, "export", "5")
    assert code == 0 and json.loads(out) == case_to_json(get_case(5))
    single = tmp_path / "one.json"
    run(capsys, "export", "3", "--out", str(single))
    code, out, _ = run(capsys, "check", "--case-file", str(single))
    assert code == 0 and "21/20" in out


def test_console_script():
    res = subprocess.run(["ke-polytope", "--version"], capture_output=True, text=True)
    assert res.returncode == 0 and "0.1.0" in res.stdout
