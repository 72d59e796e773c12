import csv

import pytest

from localgraph.cli import main

TWO_TRIANGLES_EL = "0 1\n0 2\n1 2\n3 4\n3 5\n4 5\n"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestConvert:
    def test_edgelist_to_adjacencylist(self, tmp_path, capsys):
        src = tmp_path / "g.el"
        src.write_text("# This is a comment\n0 1 0.5\n1 2 1\n2 0 3\n")
        dst = tmp_path / "g.al"
        code, out, err = run(capsys, "convert", "--input", str(src), "--output", str(dst),
                             "--from", "edgelist", "--to", "adjacencylist")
        assert code == 0
        assert dst.read_text() == "0: 1:0.5 2:3\n1: 0:0.5 2:1\n2: 0:3 1:1\n"

    def test_identity_canonicalizes(self, tmp_path, capsys):
        src = tmp_path / "g.el"
        src.write_text("2 0 3\n0 1 0.5\n1 2 1\n")
        mid = tmp_path / "c1.el"
        out2 = tmp_path / "c2.el"
        assert run(capsys, "convert", "--input", str(src), "--output", str(mid),
                   "--from", "edgelist", "--to", "edgelist")[0] == 0
        assert run(capsys, "convert", "--input", str(mid), "--output", str(out2),
                   "--from", "edgelist", "--to", "edgelist")[0] == 0
        assert mid.read_text() == out2.read_text()

    def test_parse_error_reports_line(self, tmp_path, capsys):
        src = tmp_path / "bad.el"
        src.write_text("0 1\n1 2\nbogus line here\n")
        code, out, err = run(capsys, "convert", "--input", str(src),
                             "--output", str(tmp_path / "o.al"),
                             "--from", "edgelist", "--to", "adjacencylist")
        assert code == 1
        assert "line 3" in err

    def test_missing_input_is_io_error(self, tmp_path, capsys):
        code, out, err = run(capsys, "convert", "--input", str(tmp_path / "nope.el"),
                             "--output", str(tmp_path / "o.al"),
                             "--from", "edgelist", "--to", "adjacencylist")
        assert code == 2
        assert err.startswith("error:")

    def test_usage_error(self, tmp_path):
        with pytest.raises(SystemExit) as exc:
            main(["convert", "--input", "x", "--output", "y", "--from", "weird", "--to", "edgelist"])
        assert exc.value.code == 64


class TestLocalCluster:
    @pytest.fixture
    def graph_file(self, tmp_path):
        path = tmp_path / "tri.el"
        path.write_text(TWO_TRIANGLES_EL)
        return path

    def test_component_recovery(self, graph_file, capsys):
        code, out, err = run(capsys, "local-cluster", "--graph", str(graph_file),
                             "--format", "edgelist", "--seed", "0", "--target-volume", "6")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "0, 1, 2,"
        assert lines[1] == "conductance=0"

    def test_unknown_seed_exit_3(self, graph_file, capsys):
        code, out, err = run(capsys, "local-cluster", "--graph", str(graph_file),
                             "--format", "edgelist", "--seed", "77", "--target-volume", "6")
        assert code == 3
        assert "77" in err

    def test_alpha_epsilon_override(self, graph_file, capsys):
        code, out, _ = run(capsys, "local-cluster", "--graph", str(graph_file),
                           "--format", "edgelist", "--seed", "3",
                           "--alpha", "0.01", "--epsilon", "1e-6")
        assert code == 0
        assert out.splitlines()[0] == "3, 4, 5,"

    def test_alpha_without_epsilon_is_usage_error(self, graph_file):
        with pytest.raises(SystemExit) as exc:
            main(["local-cluster", "--graph", str(graph_file), "--format", "edgelist",
                  "--seed", "0", "--alpha", "0.01"])
        assert exc.value.code == 64

    def test_disk_mode_requires_adjacencylist(self, graph_file):
        with pytest.raises(SystemExit) as exc:
            main(["local-cluster", "--graph", str(graph_file), "--format", "edgelist",
                  "--seed", "0", "--target-volume", "6", "--mode", "disk"])
        assert exc.value.code == 64

    def test_disk_mode_matches_memory(self, tmp_path, capsys):
        el = tmp_path / "g.el"
        el.write_text(TWO_TRIANGLES_EL)
        al = tmp_path / "g.al"
        assert main(["convert", "--input", str(el), "--output", str(al),
                     "--from", "edgelist", "--to", "adjacencylist"]) == 0
        capsys.readouterr()
        _, out_mem, _ = run(capsys, "local-cluster", "--graph", str(al), "--seed", "0",
                            "--target-volume", "6", "--mode", "memory")
        _, out_disk, _ = run(capsys, "local-cluster", "--graph", str(al), "--seed", "0",
                             "--target-volume", "6", "--mode", "disk")
        assert out_mem == out_disk


class TestGen:
    def test_er_k5(self, tmp_path, capsys):
        out_path = tmp_path / "k5.el"
        code, _, _ = run(capsys, "gen", "er", "--n", "5", "--p", "1", "--output", str(out_path))
        assert code == 0
        assert len(out_path.read_text().splitlines()) == 10

    def test_sbm_writes_labels(self, tmp_path, capsys):
        out_path = tmp_path / "g.al"
        code, _, _ = run(capsys, "gen", "sbm", "--k", "2", "--cluster-size", "100",
                         "--p", "0.05", "--q", "0.005", "--rng-seed", "1",
                         "--output", str(out_path))
        assert code == 0
        labels = (tmp_path / "g.al.labels").read_text().splitlines()
        assert labels == ["0"] * 100 + ["1"] * 100
        assert out_path.read_text().startswith("0:")

    def test_deterministic(self, tmp_path, capsys):
        a, b = tmp_path / "a.el", tmp_path / "b.el"
        args = ["gen", "er", "--n", "50", "--p", "0.2", "--rng-seed", "9"]
        assert main(args + ["--output", str(a)]) == 0
        assert main(args + ["--output", str(b)]) == 0
        capsys.readouterr()
        assert a.read_text() == b.read_text()

    def test_format_inferred_from_extension(self, tmp_path, capsys):
        out_path = tmp_path / "g.al"
        code, _, _ = run(capsys, "gen", "er", "--n", "4", "--p", "1", "--output", str(out_path))
        assert code == 0
        assert out_path.read_text().splitlines()[0] == "0: 1 2 3"

    def test_unknown_extension_needs_format(self, tmp_path):
        with pytest.raises(SystemExit) as exc:
            main(["gen", "er", "--n", "4", "--p", "1", "--output", str(tmp_path / "g.txt")])
        assert exc.value.code == 64


class TestBench:
    def test_csv_shape(self, tmp_path, capsys):
        out_path = tmp_path / "bench.csv"
        code, _, err = run(capsys, "bench", "--ks", "1,2", "--cluster-size", "60",
                           "--target-volume", "100", "--modes", "memory,disk",
                           "--rng-seed", "3", "--output", str(out_path))
        assert code == 0
        with open(out_path) as f:
            rows = list(csv.DictReader(f))
        assert len(rows) == 4
        assert set(r["mode"] for r in rows) == {"memory", "disk"}
        for r in rows:
            assert abs(float(r["total_seconds"])
                       - float(r["load_seconds"]) - float(r["cluster_seconds"])) <= 1e-6
            assert 0.0 <= float(r["precision"]) <= 1.0
            assert int(r["n"]) == int(r["k"]) * 60

    def test_single_mode_single_k(self, tmp_path, capsys):
        out_path = tmp_path / "bench.csv"
        code, _, _ = run(capsys, "bench", "--ks", "1", "--cluster-size", "40",
                         "--target-volume", "50", "--modes", "memory",
                         "--rng-seed", "1", "--output", str(out_path))
        assert code == 0
        with open(out_path) as f:
            rows = list(csv.DictReader(f))
        assert len(rows) == 1
        assert 0.0 <= float(rows[0]["precision"]) <= 1.0


class TestSpectral:
    def test_two_triangles(self, tmp_path, capsys):
        path = tmp_path / "g.el"
        path.write_text(TWO_TRIANGLES_EL)
        code, out, _ = run(capsys, "spectral-cluster", "--graph", str(path),
                           "--format", "edgelist", "--k", "2", "--rng-seed", "0")
        assert code == 0
        labels = {}
        for line in out.splitlines():
            v, c = line.split()
            labels[int(v)] = int(c)
        assert len(labels) == 6
        assert labels[0] == labels[1] == labels[2]
        assert labels[3] == labels[4] == labels[5]
        assert labels[0] != labels[3]

    def test_k1_all_zero(self, tmp_path, capsys):
        path = tmp_path / "g.el"
        path.write_text(TWO_TRIANGLES_EL)
        code, out, _ = run(capsys, "spectral-cluster", "--graph", str(path),
                           "--format", "edgelist", "--k", "1")
        assert code == 0
        assert all(line.endswith(" 0") for line in out.splitlines())


class TestStats:
    def test_weighted_triangle_single_vertex(self, tmp_path, capsys):
        path = tmp_path / "g.el"
        path.write_text("0 1 0.5\n1 2 1\n2 0 3\n")
        code, out, _ = run(capsys, "stats", "--graph", str(path),
                           "--format", "edgelist", "--set", "0")
        assert code == 0
        assert out.strip() == "volume=3.5 cut=3.5 conductance=1 local_conductance=1"

    def test_full_set_conductance_error_field(self, tmp_path, capsys):
        path = tmp_path / "g.el"
        path.write_text("0 1 0.5\n1 2 1\n2 0 3\n")
        code, out, _ = run(capsys, "stats", "--graph", str(path),
                           "--format", "edgelist", "--set", "0,1,2")
        assert code == 0
        assert "cut=0" in out
        assert "conductance=error" in out
        assert "local_conductance=0" in out

    def test_k4_pair(self, tmp_path, capsys):
        path = tmp_path / "k4.el"
        path.write_text("0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n")
        code, out, _ = run(capsys, "stats", "--graph", str(path),
                           "--format", "edgelist", "--set", "0,1")
        assert code == 0
        assert "conductance=0.666667" in out
