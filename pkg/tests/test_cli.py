import json

from dnacf import reference
from dnacf.cli import main, read_code_file


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_seeds_command(tmp_path, capsys):
    out = tmp_path / "seeds.txt"
    code, _, _ = run(capsys, "seeds", "--n", "3", "--ell", "1", "--gc", "2", "--out", str(out))
    assert code == 0
    words = read_code_file(str(out))
    assert len(words) == 16
    header = out.read_text().splitlines()[0]
    assert header.startswith("# dnacf seeds")


def test_seeds_counts(tmp_path, capsys):
    for n, ell, g, expect in ((4, 2, 2, 48), (2, 1, 1, 8)):
        out = tmp_path / f"s{n}.txt"
        assert run(capsys, "seeds", "--n", str(n), "--ell", str(ell), "--gc", str(g),
                   "--out", str(out))[0] == 0
        assert len(read_code_file(str(out))) == expect


def test_seeds_usage_error(capsys):
    code, _, err = run(capsys, "seeds", "--n", "4", "--ell", "3", "--gc", "2")
    assert code == 2
    assert "error" in err


def test_search_deterministic_json(tmp_path, capsys):
    args = ["search", "--n", "4", "--ell", "2", "--gc", "2",
            "--trials", "3000", "--seed", "1"]
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert run(capsys, *args, "--out", str(a))[0] == 0
    assert run(capsys, *args, "--out", str(b))[0] == 0
    assert a.read_bytes() == b.read_bytes()
    doc = json.loads(a.read_text())
    assert doc["seed_set_size"] == 48
    assert doc["parameters"]["master_seed"] == 1


def test_search_empty_seed_set_errors(capsys):
    # no conflict-free string of length 4 over {A,T} survives block level 2
    code, _, err = run(capsys, "search", "--n", "4", "--ell", "2", "--gc", "0",
                       "--trials", "10")
    assert code == 2
    assert "empty seed set" in err


def test_search_reaches_published_cell(tmp_path, capsys):
    out = tmp_path / "t.json"
    assert run(capsys, "search", "--n", "4", "--ell", "2", "--gc", "2",
               "--trials", "20000", "--seed", "1", "--out", str(out))[0] == 0
    doc = json.loads(out.read_text())
    assert doc["buckets"]["3"]["size"] >= 12


def test_verify_published_codes(tmp_path, capsys):
    for (n, M, d), words in reference.CODEWORD_TABLES.items():
        f = tmp_path / f"code_{n}_{M}_{d}.txt"
        f.write_text("\n".join(words) + "\n")
        code, out, _ = run(capsys, "verify", str(f), "--claim-distance", str(d),
                           "--claim-reverse", "--claim-rc",
                           "--claim-conflict", str(n // 2), "--claim-gc", str(n // 2))
        assert code == 0, (n, M, d)
        doc = json.loads(out)
        assert doc["report"]["min_hamming"] == d
        assert doc["report"]["size"] == M


def test_verify_failure_exit(tmp_path, capsys):
    f = tmp_path / "bad.txt"
    f.write_text("AA\n")
    code, out, _ = run(capsys, "verify", str(f), "--claim-conflict", "1")
    assert code == 1
    assert json.loads(out)["pass"] is False


def test_verify_parse_error_names_line(tmp_path, capsys):
    f = tmp_path / "bad.txt"
    f.write_text("ACGT\nACGN\n")
    code, _, err = run(capsys, "verify", str(f))
    assert code == 2
    assert ":2:" in err


def test_verify_mixed_lengths(tmp_path, capsys):
    f = tmp_path / "mixed.txt"
    f.write_text("ACGT\nACG\n")
    code, _, err = run(capsys, "verify", str(f))
    assert code == 2


def test_pairs_command(tmp_path, capsys):
    for ell, expect in ((3, 8), (4, 32)):
        out = tmp_path / f"p{ell}.tsv"
        assert run(capsys, "pairs", "--ell", str(ell), "--out", str(out))[0] == 0
        lines = [l for l in out.read_text().splitlines() if l and not l.startswith("#")]
        assert len(lines) == expect
        assert all("\t" in l for l in lines)
        assert f"# count: {expect}" in out.read_text()


def test_encode_roundtrip(tmp_path, capsys):
    out = tmp_path / "ham.dna"
    code, _, _ = run(capsys, "encode", "--code", "hamming74", "--ell", "3",
                     "--pair", "ATA,CGC", "--out", str(out))
    assert code == 0
    report = json.loads((tmp_path / "ham.dna.report.json").read_text())
    assert report["pass"] is True
    measured = report["measured"]
    assert measured["min_hamming"] == 6
    # verify round-trips the measured values exactly
    code, vout, _ = run(capsys, "verify", str(out), "--claim-distance", "6")
    assert code == 0
    assert json.loads(vout)["report"] == measured


def test_encode_named_codes(tmp_path, capsys):
    out = tmp_path / "rep.dna"
    assert run(capsys, "encode", "--code", "repetition5", "--ell", "3",
               "--out", str(out))[0] == 0
    assert len(read_code_file(str(out))) == 2
    out2 = tmp_path / "rm.dna"
    assert run(capsys, "encode", "--code", "rm,1,3", "--ell", "3",
               "--out", str(out2))[0] == 0
    report = json.loads((tmp_path / "rm.dna.report.json").read_text())
    assert report["measured"]["gc_constant"] == 12
    assert report["measured"]["conflict_free_level"] >= 5


def test_encode_invalid_pair_names_flag(capsys):
    code, _, err = run(capsys, "encode", "--code", "hamming74", "--ell", "3",
                       "--pair", "ACT,CTG")
    assert code == 1
    assert "conflict_safe" in err


def test_encode_unknown_code(capsys):
    code, _, err = run(capsys, "encode", "--code", "mystery", "--ell", "3")
    assert code == 2


def test_tables_pairs(capsys):
    code, out, _ = run(capsys, "tables", "--which", "pairs")
    assert code == 0
    assert "MATCH" in out and "DIFF" not in out


def test_tables_params(capsys):
    code, out, _ = run(capsys, "tables", "--which", "params")
    assert code == 0
    assert "golay23" in out and "skipped" in out  # nordstrom-robinson row


def test_tables_bounds_small(capsys):
    code, out, _ = run(capsys, "tables", "--which", "bounds", "--n-max", "3",
                       "--trials", "4000")
    assert code == 0
    assert "n=2 ell=1" in out and "n=3 ell=1" in out


def test_out_dir_env(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("DNACF_OUT_DIR", str(tmp_path))
    assert run(capsys, "seeds", "--n", "2", "--ell", "1", "--gc", "1",
               "--out", "rel/seeds.txt")[0] == 0
    assert (tmp_path / "rel" / "seeds.txt").exists()
