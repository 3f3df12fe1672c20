from __future__ import annotations

import json
import subprocess
import sys

import pytest

from integra import cyclic, dihedral, groups_of_order, isomorphic, parse_group_text
from integra.cli import main

from conftest import fixture_path


def run(capsys, *argv) -> tuple[int, str, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_bound_exact_line_for_c2(capsys):
    code, out, err = run(capsys, "bound", str(fixture_path("c2")))
    assert code == 0
    assert out == "bound = 16 (aut=1, z=2, mu=1, d=1)\n"
    assert err.startswith("# integra ")  # version/config echo stays on stderr


def test_bound_s3_and_c3(capsys):
    code, out, _ = run(capsys, "bound", str(fixture_path("s3")))
    assert code == 0
    assert out == "bound = 6 (aut=6, z=1, mu=2, d=0)\n"
    code, out, _ = run(capsys, "bound", str(fixture_path("c3")))
    assert out == "bound = 324 (aut=2, z=3, mu=1, d=1)\n"


def test_bound_trivial_group(capsys):
    code, out, _ = run(capsys, "bound", str(fixture_path("c1")))
    assert code == 0
    assert out == "bound = 1\n"


def test_decide_exit_codes(capsys):
    code, out, _ = run(capsys, "decide", str(fixture_path("c2")))
    assert code == 0
    assert "verdict = Integrable" in out
    assert "witness order = 8" in out
    code, out, _ = run(capsys, "decide", str(fixture_path("s3")))
    assert code == 1
    assert "verdict = NotIntegrable" in out
    code, out, _ = run(capsys, "decide", "--cap", "6", str(fixture_path("c2")))
    assert code == 2
    assert "cap applied = 6" in out


def test_decide_json_report(capsys):
    code, out, err = run(capsys, "decide", "--json", str(fixture_path("s3")))
    assert code == 1
    assert err == ""  # no config echo in machine mode
    blob = json.loads(out)
    assert blob["verdict"] == "NotIntegrable"
    assert blob["bound"] == "6"  # decimal string, safe for huge bounds
    assert blob["searched_orders"] == [6]
    assert blob["witness_order"] is None
    assert "per_order" in blob["timings"]
    assert blob["version"]
    assert blob["config"]["cap"] is None


def test_decide_emitted_table_reparses_to_witness(capsys):
    code, out, _ = run(capsys, "decide", "--json", "--emit-table", str(fixture_path("c2")))
    assert code == 0
    blob = json.loads(out)
    witness = parse_group_text(blob["witness_table"])
    assert witness.n == blob["witness_order"] == 8
    assert isomorphic(witness, dihedral(4)) is not None


def test_reduce_text_report(capsys):
    code, out, _ = run(capsys, "reduce", str(fixture_path("m32")))
    assert code == 0
    assert "output order = 16" in out
    assert "derived subgroup: C2 -> C2" in out
    assert "bound check: 16 <= 16 ok" in out


def test_reduce_emit_table_round_trips(capsys):
    code, out, _ = run(capsys, "reduce", "--json", "--emit-table", str(fixture_path("d4")))
    blob = json.loads(out)
    q = parse_group_text(blob["table"])
    assert q.n == blob["output_order"] == 16
    assert blob["bound_ok"] is True


def test_reduce_abelian_input(capsys):
    code, out, _ = run(capsys, "reduce", str(fixture_path("c12")))
    assert code == 0
    assert "output order = 1" in out


def test_check_all_clauses_pass(capsys):
    code, out, _ = run(capsys, "check", str(fixture_path("m32")))
    assert code == 0
    lines = out.splitlines()
    clause_lines = [l for l in lines if l.startswith("L3.")]
    assert len(clause_lines) == 12
    assert all("PASS" in l for l in clause_lines)
    assert lines[-1] == "result: all clauses hold"


def test_check_aut_cap_shows_skip(capsys):
    code, out, _ = run(capsys, "check", "--aut-cap", "2", str(fixture_path("m32")))
    assert code == 0  # skipped clause does not fail the run
    assert "SKIPPED" in out


def test_enumerate_order_8(capsys):
    code, out, _ = run(capsys, "enumerate", "--order", "8")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "5 groups of order 8"
    assert len(lines) == 6
    assert lines[1].startswith("[1] C8")
    assert "element orders 1^1 2^5 4^2" in lines[4]  # the dihedral entry


def test_enumerate_order_60_needs_flag(capsys):
    code, _, err = run(capsys, "enumerate", "--order", "60")
    assert code == 3
    assert "A5" in err
    code, out, _ = run(capsys, "enumerate", "--order", "60", "--a5")
    assert code == 0
    assert out.splitlines()[0] == "13 groups of order 60"


def test_iso_non_isomorphic_reason(capsys):
    code, out, _ = run(capsys, "iso", str(fixture_path("c4")), str(fixture_path("v4")))
    assert code == 1
    assert out == "non-isomorphic (order histogram)\n"
    code, out, _ = run(capsys, "iso", str(fixture_path("c2")), str(fixture_path("c4")))
    assert code == 1
    assert out == "non-isomorphic (order)\n"


def test_iso_witness(capsys):
    code, out, _ = run(capsys, "iso", str(fixture_path("s3")), str(fixture_path("d3")))
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "isomorphic"
    assert lines[1].startswith("witness: [")


def test_iso_same_fingerprint_pair(tmp_path, capsys):
    from integra import format_table

    entries = groups_of_order(16)
    buckets: dict = {}
    for e in entries:
        buckets.setdefault(e.fingerprint, []).append(e.table)
    pair = next(tables for tables in buckets.values() if len(tables) > 1)
    a, b = tmp_path / "a.grp", tmp_path / "b.grp"
    a.write_text(format_table(pair[0]))
    b.write_text(format_table(pair[1]))
    code, out, _ = run(capsys, "iso", str(a), str(b))
    assert code == 1
    assert out == "non-isomorphic (exhaustive search)\n"


def test_catalog_env_var(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("INTEGRA_CATALOG", str(tmp_path))
    code, _, _ = run(capsys, "enumerate", "--order", "6")
    assert code == 0
    assert (tmp_path / "6.grp").exists()
    # a second run must read the stored file back
    code, out, _ = run(capsys, "enumerate", "--order", "6")
    assert code == 0
    assert out.splitlines()[0] == "2 groups of order 6"


def test_catalog_flag_overrides_env(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("INTEGRA_CATALOG", str(tmp_path / "ignored"))
    used = tmp_path / "used"
    code, _, _ = run(capsys, "enumerate", "--order", "4", "--catalog", str(used))
    assert code == 0
    assert (used / "4.grp").exists()
    assert not (tmp_path / "ignored").exists()


def test_parse_error_exits_3(capsys):
    with pytest.raises(SystemExit) as info:
        main(["decide", "--bogus-flag", "x"])
    assert info.value.code == 3


def test_cap_validation_exits_3(capsys):
    with pytest.raises(SystemExit) as info:
        main(["decide", "--cap", "0", str(fixture_path("c2"))])
    assert info.value.code == 3


def test_missing_file_is_a_clean_error(capsys):
    code, out, err = run(capsys, "bound", "no/such/file.grp")
    assert code == 3
    assert err.strip().startswith("error:") or "error:" in err
    assert out == ""


def test_malformed_file_reports_line(tmp_path, capsys):
    bad = tmp_path / "bad.grp"
    bad.write_text("%table 2\n0 1\n")
    code, _, err = run(capsys, "bound", str(bad))
    assert code == 3
    assert f"{bad}:2" in err or "expected 2 table rows" in err


def test_console_script_end_to_end():
    proc = subprocess.run(
        [sys.executable, "-m", "integra.cli", "bound", str(fixture_path("c2"))],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "bound = 16 (aut=1, z=2, mu=1, d=1)\n"


def test_version_flag(capsys):
    with pytest.raises(SystemExit) as info:
        main(["--version"])
    assert info.value.code == 0
    out = capsys.readouterr().out
    assert "integra" in out
