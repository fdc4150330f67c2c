import json

from strongodd import from_dimacs, is_strong_odd, parse_coloring, union_formula
from strongodd.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestGen:
    def test_wheel_file(self, tmp_path, capsys):
        out = tmp_path / "w14.col"
        code, _, _ = run(capsys, "gen", "--family", "wheel", "--n", "14", "-o", str(out))
        assert code == 0
        g = from_dimacs(out.read_text())
        assert g.n == 15 and g.edge_count == 28

    def test_stdout_when_no_output(self, capsys):
        code, stdout, _ = run(capsys, "gen", "--family", "cycle", "--n", "3", "--no-labels")
        assert code == 0
        assert stdout == "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n"

    def test_embed_prints_euler(self, tmp_path, capsys):
        out = tmp_path / "u.col"
        code, stdout, _ = run(capsys, "gen", "--family", "union-g", "--m", "8", "--n", "8",
                              "-o", str(out), "--embed")
        assert code == 0
        assert "euler: ok" in stdout
        rot = json.loads((tmp_path / "u.col.rot.json").read_text())
        assert len(rot) == 19

    def test_embed_to_stdout_without_output(self, capsys):
        code, stdout, _ = run(capsys, "gen", "--family", "union-g", "--m", "8", "--n", "8", "--embed")
        assert code == 0
        assert "euler: ok" in stdout

    def test_family_aliases(self, tmp_path, capsys):
        a = tmp_path / "a.col"
        b = tmp_path / "b.col"
        assert run(capsys, "gen", "--family", "g-graph", "--n", "6", "-o", str(a))[0] == 0
        assert run(capsys, "gen", "--family", "bipyramid", "--n", "6", "-o", str(b))[0] == 0
        assert a.read_bytes() == b.read_bytes()

    def test_usage_error_small_cycle(self, capsys):
        code, _, err = run(capsys, "gen", "--family", "cycle", "--n", "2")
        assert code == 1 and "error" in err

    def test_embed_unsupported_family(self, tmp_path, capsys):
        code, _, err = run(capsys, "gen", "--family", "join-cycle-empty", "--n", "6", "--m", "3",
                           "-o", str(tmp_path / "j.col"), "--embed")
        assert code == 1 and "embedding" in err

    def test_missing_parameter(self, capsys):
        assert run(capsys, "gen", "--family", "wheel")[0] == 1

    def test_unknown_family(self, capsys):
        assert run(capsys, "gen", "--family", "petersen", "--n", "5")[0] == 1

    def test_deterministic_bytes(self, tmp_path, capsys):
        a = tmp_path / "a.col"
        b = tmp_path / "b.col"
        run(capsys, "gen", "--family", "join-cycle-empty", "--n", "9", "--m", "2", "-o", str(a))
        run(capsys, "gen", "--family", "join-cycle-empty", "--n", "9", "--m", "2", "-o", str(b))
        assert a.read_bytes() == b.read_bytes()


class TestVerify:
    def test_generated_coloring_passes(self, tmp_path, capsys):
        from strongodd import format_coloring, wheel_coloring

        g = tmp_path / "w9.col"
        c = tmp_path / "w9.coloring"
        run(capsys, "gen", "--family", "wheel", "--n", "9", "-o", str(g))
        c.write_text(format_coloring(wheel_coloring(9)))
        code, stdout, _ = run(capsys, "verify", str(g), str(c), "--mode", "strong-odd")
        assert code == 0 and "ok" in stdout

    def test_c4_alternating_lists_four_violations(self, tmp_path, capsys):
        g = tmp_path / "c4.col"
        c = tmp_path / "c4.coloring"
        run(capsys, "gen", "--family", "cycle", "--n", "4", "-o", str(g))
        c.write_text("1 1\n2 2\n3 1\n4 2\n")
        code, stdout, _ = run(capsys, "verify", str(g), str(c), "--mode", "strong-odd")
        assert code == 2
        assert stdout.count("sees color") == 4

    def test_modes(self, tmp_path, capsys):
        g = tmp_path / "c4.col"
        c = tmp_path / "c4.coloring"
        run(capsys, "gen", "--family", "cycle", "--n", "4", "-o", str(g))
        c.write_text("1 1\n2 2\n3 1\n4 2\n")
        assert run(capsys, "verify", str(g), str(c), "--mode", "proper")[0] == 0
        assert run(capsys, "verify", str(g), str(c), "--mode", "odd")[0] == 2

    def test_missing_vertex_line_is_parse_error(self, tmp_path, capsys):
        g = tmp_path / "c4.col"
        c = tmp_path / "bad.coloring"
        run(capsys, "gen", "--family", "cycle", "--n", "4", "-o", str(g))
        c.write_text("1 1\n2 2\n3 1\n")
        assert run(capsys, "verify", str(g), str(c))[0] == 1

    def test_improper_reported(self, tmp_path, capsys):
        g = tmp_path / "c3.col"
        c = tmp_path / "c3.coloring"
        run(capsys, "gen", "--family", "cycle", "--n", "3", "-o", str(g))
        c.write_text("1 1\n2 1\n3 2\n")
        code, stdout, _ = run(capsys, "verify", str(g), str(c), "--mode", "proper")
        assert code == 2 and "improper" in stdout


class TestSolve:
    def test_exact_wheel9(self, tmp_path, capsys):
        g = tmp_path / "w9.col"
        w = tmp_path / "w9.witness"
        run(capsys, "gen", "--family", "wheel", "--n", "9", "-o", str(g))
        code, stdout, _ = run(capsys, "solve", str(g), "--exact", "-o", str(w))
        assert code == 0
        assert "value: 4" in stdout
        graph = from_dimacs(g.read_text())
        assert is_strong_odd(graph, parse_coloring(w.read_text(), graph.n))

    def test_decide_no(self, tmp_path, capsys):
        g = tmp_path / "c4.col"
        run(capsys, "gen", "--family", "cycle", "--n", "4", "-o", str(g))
        code, stdout, _ = run(capsys, "solve", str(g), "--decide", "3")
        assert code == 2 and "answer: no" in stdout

    def test_decide_yes(self, tmp_path, capsys):
        g = tmp_path / "c4.col"
        run(capsys, "gen", "--family", "cycle", "--n", "4", "-o", str(g))
        assert run(capsys, "solve", str(g), "--decide", "4")[0] == 0

    def test_budget_exit(self, tmp_path, capsys):
        g = tmp_path / "w12.col"
        run(capsys, "gen", "--family", "wheel", "--n", "12", "-o", str(g))
        code, stdout, _ = run(capsys, "solve", str(g), "--exact", "--max-nodes", "3")
        assert code == 3
        assert "status: bounds" in stdout

    def test_decide_budget_exit(self, tmp_path, capsys):
        g = tmp_path / "w12.col"
        run(capsys, "gen", "--family", "wheel", "--n", "12", "-o", str(g))
        code, stdout, _ = run(capsys, "solve", str(g), "--decide", "5", "--max-nodes", "2")
        assert code == 3 and "answer: timeout" in stdout

    def test_bad_timeout_string(self, tmp_path, capsys):
        g = tmp_path / "c3.col"
        run(capsys, "gen", "--family", "cycle", "--n", "3", "-o", str(g))
        assert run(capsys, "solve", str(g), "--exact", "--timeout", "soon")[0] == 1

    def test_timeout_suffixes_accepted(self, tmp_path, capsys):
        g = tmp_path / "w9.col"
        run(capsys, "gen", "--family", "wheel", "--n", "9", "-o", str(g))
        code, stdout, _ = run(capsys, "solve", str(g), "--exact", "--timeout", "1s")
        assert code == 0 and "value: 4" in stdout
        assert run(capsys, "solve", str(g), "--exact", "--timeout", "0.5m")[0] == 0

    def test_parse_error_propagates(self, tmp_path, capsys):
        bad = tmp_path / "bad.col"
        bad.write_text("p edge 2 1\ne 1 5\n")
        assert run(capsys, "solve", str(bad), "--exact")[0] == 1

    def test_missing_file(self, tmp_path, capsys):
        assert run(capsys, "solve", str(tmp_path / "nope.col"), "--exact")[0] == 1


class TestFormula:
    def test_wheel_14(self, capsys):
        code, stdout, _ = run(capsys, "formula", "wheel", "14")
        assert code == 0
        assert stdout.splitlines()[0] == "7"
        assert "n = 14" in stdout

    def test_union_8_8(self, capsys):
        code, stdout, _ = run(capsys, "formula", "union", "8", "8")
        assert code == 0 and stdout.splitlines()[0] == "17"

    def test_join_9_2(self, capsys):
        code, stdout, _ = run(capsys, "formula", "join", "9", "2")
        assert code == 0
        assert stdout.splitlines()[0] == "5"
        assert "m even" in stdout

    def test_wrong_arity(self, capsys):
        assert run(capsys, "formula", "wheel", "3", "4")[0] == 1

    def test_out_of_range(self, capsys):
        assert run(capsys, "formula", "wheel", "2")[0] == 1


class TestCertify:
    def test_counterexample_bundle(self, tmp_path, capsys):
        outdir = tmp_path / "bundle"
        code, stdout, _ = run(capsys, "certify", "--family", "counterexample", "--n", "11",
                              "-o", str(outdir))
        assert code == 0
        assert "claimed value: 14" in stdout
        cert = outdir / "bipyramid_union_8_11.cert.json"
        graph = outdir / "bipyramid_union_8_11.col"
        coloring = outdir / "bipyramid_union_8_11.coloring"
        assert cert.exists() and graph.exists() and coloring.exists()
        # the standalone files verify through the ordinary pipeline
        assert run(capsys, "verify", str(graph), str(coloring), "--mode", "strong-odd")[0] == 0

    def test_pair_17(self, tmp_path, capsys):
        code, stdout, _ = run(capsys, "certify", "--pair", "8", "8", "-o", str(tmp_path / "p"))
        assert code == 0 and "claimed value: 17" in stdout

    def test_off_family_usage_error(self, tmp_path, capsys):
        assert run(capsys, "certify", "--family", "counterexample", "--n", "12",
                   "-o", str(tmp_path / "x"))[0] == 1

    def test_recheck_good_and_tampered(self, tmp_path, capsys):
        outdir = tmp_path / "bundle"
        run(capsys, "certify", "--pair", "7", "8", "-o", str(outdir))
        cert = outdir / "bipyramid_union_7_8.cert.json"
        assert run(capsys, "certify", "--recheck", str(cert))[0] == 0
        data = json.loads(cert.read_text())
        data["claimed_value"] = 12
        bad = tmp_path / "tampered.json"
        bad.write_text(json.dumps(data))
        assert run(capsys, "certify", "--recheck", str(bad))[0] == 4

    def test_try_exact_on_small_instance(self, tmp_path, capsys):
        # (3, 3) is small enough to refute value-1 within a desk budget;
        # only the pair entry points are restricted, so drive the API check
        # through recheck of a library-made exact certificate instead
        from strongodd import Budget, make_union_certificate

        cert = make_union_certificate(3, 3, try_exact_budget=Budget(max_nodes=2_000_000))
        path = tmp_path / "exact.json"
        path.write_text(cert.to_json())
        assert run(capsys, "certify", "--recheck", str(path))[0] == 0

    def test_deterministic_bundles(self, tmp_path, capsys):
        d1 = tmp_path / "one"
        d2 = tmp_path / "two"
        run(capsys, "certify", "--pair", "6", "8", "-o", str(d1))
        run(capsys, "certify", "--pair", "6", "8", "-o", str(d2))
        name = "bipyramid_union_6_8.cert.json"
        assert (d1 / name).read_bytes() == (d2 / name).read_bytes()

    def test_missing_output_dir(self, capsys):
        assert run(capsys, "certify", "--pair", "8", "8")[0] == 1

    def test_try_exact_requires_budget(self, tmp_path, capsys):
        assert run(capsys, "certify", "--pair", "8", "8", "-o", str(tmp_path / "x"),
                   "--try-exact")[0] == 1

    def test_try_exact_exhausted_stays_upper_bound(self, tmp_path, capsys):
        outdir = tmp_path / "b"
        code, stdout, _ = run(capsys, "certify", "--pair", "8", "8", "-o", str(outdir),
                              "--try-exact", "--max-nodes", "10")
        assert code == 0 and "upper-bound" in stdout


class TestOracle:
    def test_small_graph(self, tmp_path, capsys):
        g = tmp_path / "c4.col"
        run(capsys, "gen", "--family", "cycle", "--n", "4", "-o", str(g))
        code, stdout, _ = run(capsys, "oracle", str(g))
        assert code == 0 and "value: 4" in stdout

    def test_refuses_large(self, tmp_path, capsys):
        g = tmp_path / "w14.col"
        run(capsys, "gen", "--family", "wheel", "--n", "14", "-o", str(g))
        assert run(capsys, "oracle", str(g))[0] == 1


class TestSubprocess:
    def test_module_entry_point(self, tmp_path):
        import subprocess
        import sys

        out = tmp_path / "w9.col"
        r = subprocess.run(
            [sys.executable, "-m", "strongodd", "gen", "--family", "wheel", "--n", "9", "-o", str(out)],
            capture_output=True,
            text=True,
        )
        assert r.returncode == 0 and out.exists()
        r = subprocess.run(
            [sys.executable, "-m", "strongodd", "solve", str(out), "--decide", "3"],
            capture_output=True,
            text=True,
        )
        assert r.returncode == 2 and "answer: no" in r.stdout


class TestParser:
    def test_help_exits_zero(self, capsys):
        assert main(["--help"]) == 0

    def test_unknown_flag_exits_one(self, capsys):
        assert main(["gen", "--walrus"]) == 1

    def test_no_subcommand(self, capsys):
        assert main([]) == 1

    def test_union_value_consistency(self, capsys):
        # the printed formula agrees with the library
        code = main(["formula", "union", "8", "11"])
        out = capsys.readouterr().out
        assert code == 0 and out.splitlines()[0] == str(union_formula(8, 11))
