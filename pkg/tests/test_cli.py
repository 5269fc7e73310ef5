import json

import pytest

from spechtend import cli, relations, selftest


def run(capsys, argv):
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_version_flag(capsys):
    code, out, err = run(capsys, ["--version"])
    assert code == 0


def test_tables_json(capsys):
    code, out, _ = run(capsys, ["tables", "--alpha", "4,2", "--beta", "3,3"])
    assert code == 0
    recs = json.loads(out)
    assert len(recs) == 3
    assert {"alpha": [4, 2], "beta": [3, 3], "entries": [[2, 2], [1, 1]]} in recs


def test_tables_text(capsys):
    code, out, _ = run(
        capsys, ["tables", "--alpha", "2,1", "--beta", "2,1", "--format", "text"]
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "2"
    assert "[[1, 1], [1, 0]]" in lines


def test_rel_dim_lambda(capsys):
    code, out, _ = run(capsys, ["rel-dim", "--lambda", "2,1"])
    assert code == 0
    rec = json.loads(out)
    assert rec["rel_dim"] == 1
    assert rec["num_tables"] == 2
    assert rec["support"] == [[[1, 1], [1, 0]]]
    assert len(rec["support_digest"]) == 64


def test_rel_dim_family_flags(capsys):
    code, out, _ = run(capsys, ["rel-dim", "--a", "3", "--m", "2", "--b", "3"])
    assert code == 0
    rec = json.loads(out)
    assert (rec["a"], rec["m"], rec["b"], rec["r"]) == (3, 2, 3, 6)
    assert rec["rel_dim"] == 1
    assert rec["support"] == [[[1, 3], [2, 0]]]


def test_rel_dim_needs_some_flags(capsys):
    code, _, err = run(capsys, ["rel-dim"])
    assert code == 2
    code, _, err = run(capsys, ["rel-dim", "--a", "3", "--m", "2"])
    assert code == 2


def test_end_dim(capsys):
    code, out, _ = run(capsys, ["end-dim", "--lambda", "3,1,1,1"])
    assert code == 0
    rec = json.loads(out)
    assert rec == {"lambda": [3, 1, 1, 1], "end_dim": 1}


def test_end_dim_cap_exceeded(capsys):
    code, _, err = run(capsys, ["end-dim", "--lambda", "2,1", "--max-bits", "1"])
    assert code == 2
    assert "error" in err


def test_verify_family(capsys):
    code, out, _ = run(capsys, ["verify", "--a", "3", "--m", "2", "--b", "3"])
    assert code == 0
    rec = json.loads(out)
    assert rec["rel_dim"] == 1
    assert rec["end_dim"] == 1
    assert rec["support"] == [[[1, 3], [2, 0]]]
    assert set(rec["audits"].values()) == {"pass"}


def test_verify_parity_mismatch_exits_2(capsys):
    code, _, err = run(capsys, ["verify", "--a", "4", "--m", "2", "--b", "1"])
    assert code == 2
    assert "parity" in err or "mod 2" in err


def test_verify_needs_family(capsys):
    code, _, _ = run(capsys, ["verify", "--lambda", "2,1"])
    assert code == 2


def test_unknown_subcommand(capsys):
    assert cli.main(["no-such-command"]) == 2
    capsys.readouterr()


def test_threads_must_be_positive(capsys):
    code, _, err = run(capsys, ["rel-dim", "--lambda", "2,1", "--threads", "0"])
    assert code == 2


def test_dump_relations(capsys):
    code, out, _ = run(capsys, ["dump-relations", "--lambda", "2,1"])
    assert code == 0
    rec = json.loads(out)
    assert rec["tables"] == [[[1, 1], [1, 0]], [[2, 0], [0, 1]]]
    assert rec["rows"] == [[1]]  # forces the coefficient of [[2,0],[0,1]] to zero
    assert len(rec["provenance"]) == 1


def test_scan_deterministic_with_cache(tmp_path, capsys):
    cache = str(tmp_path / "scan.jsonl")
    code, out1, _ = run(capsys, ["scan", "--max-r", "5", "--cache", cache])
    assert code == 0
    size_after_first = (tmp_path / "scan.jsonl").stat().st_size
    code, out2, _ = run(capsys, ["scan", "--max-r", "5", "--cache", cache])
    assert code == 0
    assert out1 == out2
    # the second run was served from the cache and appended nothing
    assert (tmp_path / "scan.jsonl").stat().st_size == size_after_first
    recs = [json.loads(line) for line in out1.strip().splitlines()]
    assert all(r["parity"] for r in recs)
    assert all(r["rel_dim"] == 1 for r in recs)
    assert all(r["end_dim"] == 1 for r in recs)


def test_scan_parity_mismatch_filter(capsys):
    code, out, _ = run(capsys, ["scan", "--max-r", "4", "--parity", "mismatch"])
    assert code == 0
    recs = [json.loads(line) for line in out.strip().splitlines()]
    assert recs and all(not r["parity"] for r in recs)


def test_scan_skips_corrupt_cache_lines(tmp_path, capsys):
    cache = tmp_path / "scan.jsonl"
    cache.write_text("this is not json\n")
    code, out, err = run(capsys, ["scan", "--max-r", "4", "--cache", str(cache)])
    assert code == 0
    assert "corrupt cache line 1" in err
    assert out.strip()


def test_paper_examples(capsys):
    code, out, _ = run(capsys, ["paper-examples"])
    assert code == 0
    rec = json.loads(out)
    assert set(rec.values()) == {"pass"}


def test_selftest_passes(capsys):
    code, out, _ = run(capsys, ["selftest"])
    assert code == 0
    rec = json.loads(out)
    assert set(rec) == set(selftest.CHECKS)
    assert set(rec.values()) == {"pass"}


def test_selftest_reports_injected_failure(capsys, monkeypatch):
    def boom():
        raise AssertionError("injected failure")

    monkeypatch.setitem(selftest.CHECKS, "oracle_equivalence", boom)
    code, _, err = run(capsys, ["selftest"])
    assert code == 1
    assert "injected failure" in err


def test_selftest_detects_corrupted_z_coefficient(capsys, monkeypatch):
    # flipping the parity of z makes the Z rows leave the R/C row space,
    # which the redundancy invariant must notice
    original = relations.z_coefficient
    monkeypatch.setattr(
        relations, "z_coefficient", lambda A, j, k: 1 - original(A, j, k)
    )
    with pytest.raises(AssertionError):
        selftest.check_z_redundancy(6)
