import json

import pytest

from equichi.cli import main
from equichi.moduli import genus2_reference_table


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def payload(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    return json.loads(out)["payload"]


def test_mgn_constant_and_linear_terms(capsys):
    rows = payload(capsys, "mgn", "--genus", "2", "--max-points", "1")["coefficients"]
    assert rows[0]["terms"] == [{"exponents": {}, "coefficient": "1"}]
    assert rows[1]["terms"] == [{"exponents": {"1": 1}, "coefficient": "2"}]


def test_mgn_schur_basis(capsys):
    rows = payload(capsys, "mgn", "--genus", "2", "--max-points", "3", "--basis", "schur")["coefficients"]
    assert [e["partition"] for e in rows[3]["schur"]] == [[3], [2, 1], [1, 1, 1]]
    assert all(isinstance(e["multiplicity"], int) for row in rows for e in row["schur"])
    assert rows[1]["plain_euler"] == "2"
    assert rows[2]["quotient_euler"] == "1"


def test_mgn_rejects_low_genus(capsys):
    code, _, err = run(capsys, "mgn", "--genus", "1")
    assert code == 1
    assert "finite automorphism group" in err


def test_mgn_truncation_cap(capsys):
    code, _, err = run(capsys, "mgn", "--genus", "2", "--max-points", "31")
    assert code == 1 and "--allow-large" in err


def test_output_is_byte_stable(capsys):
    args = ("mgn", "--genus", "3", "--max-points", "5", "--format", "csv")
    first = run(capsys, *args)[1]
    assert run(capsys, *args)[1] == first


def test_csv_schur_rows(capsys):
    code, out, _ = run(capsys, "mgn", "--genus", "2", "--max-points", "2", "--basis", "schur", "--format", "csv")
    lines = out.splitlines()
    assert lines[0] == "n,partition,multiplicity"
    assert "2,\"(1,1)\",1" in lines


def test_coeffs_genus2(capsys):
    records = payload(capsys, "coeffs", "--genus", "2")["records"]
    assert len(records) == 10
    got = sorted(r["coefficient"] for r in records)
    want = sorted(str(c) for c in (r.coefficient for r in genus2_reference_table()))
    assert got == want


def test_coeffs_genus2_latex(capsys):
    code, out, _ = run(capsys, "coeffs", "--genus", "2", "--format", "latex")
    assert code == 0
    assert r"-\frac{1}{240}(1+p_{1}t)^{6}(1+p_{2}t^{2})^{-4}" in out.splitlines()
    assert r"+\frac{2}{5}(1+p_{1}t)^{3}(1+p_{5}t^{5})^{-1}" in out.splitlines()


def test_coeffs_genus3_contains_closed_forms(capsys):
    records = payload(capsys, "coeffs", "--genus", "3")["records"]
    by_k = {tuple(sorted(r["signature"]["k"].items())): r["coefficient"] for r in records}
    assert by_k[(("1", -4),)] == "1/1008"
    assert by_k[(("1", 8), ("2", -6))] == "-1/672"


@pytest.mark.parametrize("args, value", [(("5", "1", "1", "1"), 12), (("10", "1", "2", "5"), 4), (("6", "2", "2", "3", "3"), 2)])
def test_nfun(capsys, args, value):
    p = payload(capsys, "nfun", *args, "--verify")
    assert p["value"] == value and p["bruteforce"] == value and p["agree"]


def test_nfun_bad_divisor(capsys):
    code, _, err = run(capsys, "nfun", "6", "4")
    assert code == 1 and "divide" in err


@pytest.mark.parametrize("h, s, value", [("0", "6", "-6"), ("1", "2", "1/12")])
def test_orbchi(capsys, h, s, value):
    assert payload(capsys, "orbchi", h, s)["value"] == value


def test_orbchi_unstable(capsys):
    code, _, err = run(capsys, "orbchi", "1", "0")
    assert code == 2 and "unstable" in err


def test_confspace_group_data(capsys, tmp_path):
    f = tmp_path / "swap.json"
    f.write_text(json.dumps({
        "group_order": 2,
        "elements": [{"label": "e", "chi_by_orbit_length": {"1": 2}},
                     {"label": "swap", "chi_by_orbit_length": {"2": 2}}],
    }))
    rows = payload(capsys, "confspace", "--input", str(f), "--max-points", "2")["coefficients"]
    assert rows[1]["terms"] == [{"exponents": {"1": 1}, "coefficient": "1"}]
    assert rows[2]["terms"] == [{"exponents": {"2": 1}, "coefficient": "1/2"},
                               {"exponents": {"1": 2}, "coefficient": "1/2"}]


def test_confspace_genus2_strata_equal_mgn(capsys, tmp_path):
    f = tmp_path / "strata.json"
    f.write_text(json.dumps({"strata": [r.stratum().to_json() for r in genus2_reference_table()]}))
    for basis in ("p", "schur"):
        a = payload(capsys, "confspace", "--input", str(f), "--max-points", "6", "--basis", basis)
        b = payload(capsys, "mgn", "--genus", "2", "--max-points", "6", "--basis", basis)
        assert a == b


def test_confspace_empty_strata(capsys, tmp_path):
    f = tmp_path / "empty.json"
    f.write_text('{"strata": []}')
    rows = payload(capsys, "confspace", "--input", str(f), "--max-points", "3")["coefficients"]
    assert all(row["terms"] == [] for row in rows)


def test_confspace_schema_error(capsys, tmp_path):
    f = tmp_path / "bad.json"
    f.write_text('{"elements": []}')
    code, _, err = run(capsys, "confspace", "--input", str(f))
    assert code == 1


def test_json_rationals_round_trip(capsys):
    from fractions import Fraction
    doc = payload(capsys, "coeffs", "--genus", "2")
    for r in doc["records"]:
        b = r["breakdown"]
        assert Fraction(b["orb_chi"]) * b["monodromy_count"] * b["n_value"] / b["denominator"] == Fraction(r["coefficient"])


def test_selftest_passes(capsys):
    code, out, _ = run(capsys, "selftest")
    assert code == 0
    assert "8/8 checks passed" in out


def test_usage_error_exit_code(capsys):
    assert run(capsys, "mgn")[0] == 1
    assert run(capsys, "bogus")[0] == 1
