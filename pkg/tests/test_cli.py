import json

import pytest

from knotbound.cache import InvariantRecord, ResultCache
from knotbound.cli import main


KSTAR_TEXT = "1 2 2 1 1 2 2 1 1 -2 -2 -2"


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_invariants_homfly_main_knot(capsys):
    code, out, _ = run(capsys, ["invariants", KSTAR_TEXT, "--strands", "3", "--homfly"])
    assert code == 0
    assert "a^8*(-q^4 - 1 - q^-4) + a^6*(q^6 + q^2 + q^-2 + q^-6)" in out


def test_invariants_all_unknot(capsys):
    code, out, _ = run(capsys, ["invariants", "1", "--strands", "2", "--all", "--json"])
    assert code == 0
    payload = json.loads(out)
    assert payload["homfly"]["terms"] == [[0, 0, 1]]
    assert payload["khovanov"]["ranks"] == [[0, 0, 1]]
    assert payload["signature"] == 0 and payload["determinant"] == 1
    assert payload["components"] == 1


def test_invariants_parse_error_exit_2(capsys):
    code, _, err = run(capsys, ["invariants", "3", "--strands", "3"])
    assert code == 2
    assert "error" in err


def test_invariants_precondition_exit_3(capsys):
    code, _, err = run(capsys, ["invariants", "1 1", "--strands", "3", "--seifert"])
    assert code == 3
    assert "precondition" in err


def test_invariants_missing_strands(capsys):
    code, _, _ = run(capsys, ["invariants", "1 2"])
    assert code == 2


def test_family_word(capsys):
    code, out, _ = run(capsys, ["family", "elrifai-k", "--k", "1", "--emit", "word"])
    assert code == 0
    assert out.strip() == KSTAR_TEXT


def test_family_bm_bounds(capsys):
    code, out, _ = run(
        capsys,
        ["family", "bm", "--x", "1", "--y", "1", "--z", "1", "--w", "1",
         "--emit", "bounds", "--json"],
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["b_d"] == 4 and payload["w_d"] == 8


def test_family_torus_bounds_sharp(capsys):
    code, out, _ = run(
        capsys, ["family", "torus2", "--q", "7", "--emit", "bounds", "--json"]
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["mfw_bound"] == 2
    assert payload["mfw_sharp_lower"] and payload["mfw_sharp_upper"]


def test_family_missing_parameter(capsys):
    code, _, _ = run(capsys, ["family", "elrifai-k", "--emit", "word"])
    assert code == 2


def test_bounds_with_deltas(capsys):
    code, out, _ = run(
        capsys,
        ["bounds", KSTAR_TEXT, "--strands", "3",
         "--delta-minus", "4", "--delta-plus", "8", "--json"],
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["kr_bound"] == 3
    assert payload["kr_sharp_lower"] and payload["kr_sharp_upper"]
    assert payload["mfw_bound"] == 2 and not payload["mfw_sharp_lower"]


def test_bounds_parity_error(capsys):
    code, _, _ = run(
        capsys,
        ["bounds", KSTAR_TEXT, "--strands", "3",
         "--delta-minus", "4", "--delta-plus", "7"],
    )
    assert code == 2


def test_verify_sections_pass(capsys):
    for section in ("1", "3", "4"):
        code, out, _ = run(capsys, ["verify-paper", "--section", section])
        assert code == 0, out
        assert "FAIL" not in out


def test_verify_section_two_has_ten_checks(capsys):
    code, out, _ = run(capsys, ["verify-paper", "--section", "2", "--json"])
    assert code == 0
    results = json.loads(out)
    assert len(results) == 10
    assert all(r["passed"] for r in results)


def test_verify_failing_claim_exits_one(capsys, monkeypatch):
    import knotbound.verify as verify

    broken = verify.Claim(1, "always-fails", lambda: (False, "intentional"))
    crashed = verify.Claim(1, "always-crashes", lambda: 1 / 0)
    monkeypatch.setitem(verify.SECTIONS, 1, [broken, crashed])
    code, out, _ = run(capsys, ["verify-paper", "--section", "1"])
    assert code == 1
    assert "FAIL" in out and "exception" in out


def test_emit_and_import_pd(tmp_path, capsys):
    code, out, _ = run(capsys, ["invariants", "1 1 1", "--strands", "2", "--emit-pd"])
    assert code == 0
    pd_file = tmp_path / "trefoil.pd"
    pd_file.write_text(out)
    code, out2, _ = run(
        capsys, ["invariants", "--pd-file", str(pd_file), "--khovanov", "--json"]
    )
    assert code == 0
    payload = json.loads(out2)
    assert payload["khovanov"]["ranks"] == [[2, 0, 1], [6, 2, 1], [8, 3, 1]]


# --- cache ---------------------------------------------------------------------

def test_cache_round_trip(tmp_path):
    cache = ResultCache(str(tmp_path))
    rec = InvariantRecord.fresh(
        canonical_key="k", strands=2, writhe=1, components=1, determinant=1
    )
    cache.store(rec)
    fresh = ResultCache(str(tmp_path))
    assert fresh.load("k").determinant == 1
    assert fresh.load("missing") is None


def test_cache_store_dedupes(tmp_path):
    cache = ResultCache(str(tmp_path))
    rec = InvariantRecord.fresh(canonical_key="k", strands=2, writhe=1, components=1)
    cache.store(rec)
    cache.store(rec)
    lines = (tmp_path / "invariants.jsonl").read_text().splitlines()
    assert len(lines) == 1


def test_cache_corrupt_line_skipped(tmp_path):
    good = InvariantRecord.fresh(
        canonical_key="k", strands=2, writhe=1, components=1, signature=0
    )
    path = tmp_path / "invariants.jsonl"
    path.write_text("this is not json\n" + good.to_json() + "\n")
    cache = ResultCache(str(tmp_path))
    with pytest.warns(UserWarning):
        assert cache.load("k").signature == 0


def test_cache_hit_report_identical(tmp_path, capsys):
    argv = ["invariants", "1 1 1", "--strands", "2", "--all", "--json",
            "--cache-dir", str(tmp_path)]
    code1, cold, _ = run(capsys, argv)
    code2, warm, _ = run(capsys, argv)
    assert code1 == code2 == 0
    assert cold == warm
    assert (tmp_path / "invariants.jsonl").exists()


def test_cache_cli_list_and_clear(tmp_path, capsys):
    run(capsys, ["invariants", "1", "--strands", "2", "--all",
                 "--cache-dir", str(tmp_path)])
    code, out, _ = run(capsys, ["cache", "list", "--cache-dir", str(tmp_path)])
    assert code == 0 and "1 record(s)" in out
    code, _, _ = run(capsys, ["cache", "clear", "--cache-dir", str(tmp_path)])
    assert code == 0
    code, out, _ = run(capsys, ["cache", "list", "--cache-dir", str(tmp_path)])
    assert code == 0 and "0 record(s)" in out


def test_cache_cli_requires_directory(capsys, monkeypatch):
    monkeypatch.delenv("KNOTBOUND_CACHE", raising=False)
    code, _, err = run(capsys, ["cache", "list"])
    assert code == 2 and "KNOTBOUND_CACHE" in err


def test_cache_env_variable(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("KNOTBOUND_CACHE", str(tmp_path))
    code, _, _ = run(capsys, ["invariants", "1", "--strands", "2", "--all"])
    assert code == 0
    assert (tmp_path / "invariants.jsonl").exists()


def test_json_output_deterministic(capsys):
    argv = ["invariants", "1 2 2 1 1 -2", "--strands", "3", "--all", "--json"]
    _, first, _ = run(capsys, argv)
    _, second, _ = run(capsys, argv)
    assert first == second
