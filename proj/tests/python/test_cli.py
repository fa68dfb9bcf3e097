import json
import math
import os
import subprocess

import pytest

CLI = os.environ.get("ZKERN_CLI")

pytestmark = pytest.mark.skipif(not CLI, reason="ZKERN_CLI not set")


def run(*args, **kwargs):
    return subprocess.run([CLI, *args], capture_output=True, text=True, **kwargs)


def parse_csv(text):
    lines = [line for line in text.strip().splitlines() if line]
    header = lines[0].split(",")
    rows = [dict(zip(header, line.split(","))) for line in lines[1:]]
    return header, rows


def test_gaussian_determinant_matches_closed_form():
    r = run("det", "--kernel", "gaussian", "--zeta", "1")
    assert r.returncode == 0
    header, rows = parse_csv(r.stdout)
    assert header == ["zeta", "logdet", "det"]
    got = float(rows[0]["det"])
    closed = 1.0 - math.sqrt(math.pi) / 2.0 * (math.erf(6.5) - math.erf(1.0))
    assert got == pytest.approx(closed, abs=1e-10)


def test_zero_coupling_determinant_is_one():
    r = run("det", "--kernel", "sine", "--gamma", "0", "--zeta", "1.5")
    assert r.returncode == 0
    _, rows = parse_csv(r.stdout)
    assert float(rows[0]["det"]) == 1.0
    assert float(rows[0]["logdet"]) == 0.0


def test_verify_passes_and_is_deterministic():
    r1 = run("verify")
    r2 = run("verify", "--json")
    assert r1.returncode == 0
    assert r2.returncode == 0
    assert r1.stdout == r2.stdout
    report = json.loads(r1.stdout)
    assert len(report["suite"]) == 13
    assert all(entry["passed"] for entry in report["suite"])
    prov = report["provenance"]
    assert set(prov) == {"profile", "n", "steps", "truncation", "versions"}


def test_usage_errors_exit_2():
    assert run("det", "--no-such-flag").returncode == 2
    assert run("nonsense").returncode == 2
    assert run("det", "--kernel", "sine").returncode == 2  # missing --zeta / --b
    assert run("--help").returncode == 0


def test_numerical_failure_exits_3(tmp_path):
    # symbol scaled far past the contraction range: positivity fails downstream
    path = tmp_path / "overcoupled.csv"
    lines = ["x,A,B,Aprime,Bprime"]
    n = 60
    for i in range(n + 1):
        x = 2.2 * i / n
        lines.append(
            f"{x:.17g},{-3.0 * math.sin(x):.17g},{3.0 * math.cos(x):.17g},"
            f"{-3.0 * math.cos(x):.17g},{-3.0 * math.sin(x):.17g}"
        )
    path.write_text("\n".join(lines) + "\n")
    r = run("det", "--kernel", "custom", "--profile-csv", str(path), "--zeta", "2")
    assert r.returncode == 3
    assert "numerical failure" in r.stderr


def test_domain_error_exits_3():
    r = run("det", "--kernel", "sine", "--gamma", "9", "--zeta", "1")
    assert r.returncode == 3


def test_sigma_table_shape():
    r = run("sigma", "--kernel", "sine", "--gamma", "0.5", "--zeta-grid", "0.5:1.5:0.5")
    assert r.returncode == 0
    header, rows = parse_csv(r.stdout)
    assert header[0] == "zeta"
    assert len(rows) == 3
    assert {"s11_re", "s12_im", "m22_im"}.issubset(header)


def test_jump_table_decays():
    r = run(
        "jump", "--kernel", "sine", "--gamma", "0.25", "--b", "2",
        "--x", "1", "--eps", "1e-1", "--eps", "1e-2",
    )
    assert r.returncode == 0
    _, rows = parse_csv(r.stdout)
    res = [float(row["residual"]) for row in rows]
    assert res[1] < res[0]


def test_outer_margin_closed_form():
    r = run("outer", "--const-logr", "1", "--b", "1", "--z", "0,2")
    assert r.returncode == 0
    _, rows = parse_csv(r.stdout)
    row = rows[0]
    z = complex(float(row["z_re"]), float(row["z_im"]))
    import cmath

    want = cmath.exp(-1j / math.pi * (cmath.log(1.0 - z) - cmath.log(-z)))
    got = complex(float(row["w_re"]), float(row["w_im"]))
    assert abs(got - want) <= 1e-9
    assert float(row["margin"]) >= 0.0


def test_diag_similarity_is_tiny():
    r = run("diag", "--alpha", "0.7", "--coeffs", "0,0,1", "--coeffs-im", "0,0,0")
    assert r.returncode == 0
    _, rows = parse_csv(r.stdout)
    for row in rows:
        assert float(row["similarity"]) <= 1e-9
        assert float(row["roundtrip"]) <= 1e-9
