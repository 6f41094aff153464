import io

import pytest

from hyperprufer.cli import main

from test_files import T1_FILE

TRIANGLE = "root 3\n1 2\n2 3\n1 3\n"


@pytest.fixture
def t1_path(tmp_path):
    path = tmp_path / "t1.txt"
    path.write_text(T1_FILE)
    return str(path)


def run(capsys, *argv):
    rc = main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


class TestValidate:
    def test_fixture_report(self, capsys, t1_path):
        rc, out, _ = run(capsys, "validate", t1_path)
        assert rc == 0
        assert out.splitlines()[0] == "n=14 k=8 leaves={2,3,5,6,9,10,11,12,13} OK"
        assert out.splitlines()[1] == "sum(size-1)=13=n-1 sum(deg-1)=7=k-1"

    def test_triangle_fails(self, capsys, tmp_path):
        path = tmp_path / "triangle.txt"
        path.write_text(TRIANGLE)
        rc, _, err = run(capsys, "validate", str(path))
        assert rc == 1
        assert "NotATree" in err

    def test_degenerate(self, capsys, tmp_path):
        path = tmp_path / "one.txt"
        path.write_text("root 1\n")
        rc, out, _ = run(capsys, "validate", str(path))
        assert rc == 0
        assert out.startswith("n=1 k=0 leaves={} OK")

    def test_parse_error_exit_2(self, capsys, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("root x\n")
        rc, _, err = run(capsys, "validate", str(path))
        assert rc == 2
        assert "parse error" in err

    def test_missing_file_exit_2(self, capsys):
        rc, _, err = run(capsys, "validate", "/nonexistent/file.txt")
        assert rc == 2

    def test_stdin_dash(self, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO("root 2\n1 2\n"))
        rc, out, _ = run(capsys, "validate", "-")
        assert rc == 0
        assert out.startswith("n=2 k=1")


class TestEncodeDecode:
    def test_encode_classic_golden(self, capsys, t1_path):
        rc, out, _ = run(capsys, "encode", t1_path, "--codec", "classic")
        assert rc == 0
        assert "word 1 8 4 14 4 7 8\n" in out
        assert "partition 1,10,12;2;3,9;4,7;5;6;8,13;11\n" in out

    def test_encode_star_golden(self, capsys, t1_path):
        rc, out, _ = run(capsys, "encode", t1_path, "--codec", "star")
        assert rc == 0
        assert "word 1 8 4 8 4 14 7\n" in out

    @pytest.mark.parametrize("codec", ["classic", "star"])
    def test_decode_reproduces_tree(self, capsys, tmp_path, t1_path, codec):
        rc, code_text, _ = run(capsys, "encode", t1_path, "--codec", codec)
        assert rc == 0
        code_path = tmp_path / "code.txt"
        code_path.write_text(code_text)
        rc, out, _ = run(capsys, "decode", str(code_path))
        assert rc == 0
        assert out == T1_FILE

    def test_trivial_empty_word(self, capsys, tmp_path):
        path = tmp_path / "trivial.txt"
        path.write_text("root 3\n1 2 3\n")
        for codec in ("classic", "star"):
            rc, out, _ = run(capsys, "encode", str(path), "--codec", codec)
            assert rc == 0
            assert "word\n" in out

    def test_deterministic(self, capsys, t1_path):
        _, first, _ = run(capsys, "encode", t1_path, "--codec", "star")
        _, second, _ = run(capsys, "encode", t1_path, "--codec", "star")
        assert first == second


class TestEnumerateCount:
    def test_count_only(self, capsys):
        assert run(capsys, "enumerate", "--n", "4", "--count-only")[1] == "29\n"
        assert run(capsys, "enumerate", "--n", "5", "--count-only")[1] == "311\n"

    def test_count(self, capsys):
        assert run(capsys, "count", "--n", "4", "--k", "2")[1] == "12\n"

    def test_single_tree_stream(self, capsys):
        rc, out, _ = run(capsys, "enumerate", "--n", "3", "--k", "1")
        assert rc == 0
        assert out == "root 3\n1 2 3  # {1,2}_3\n"

    def test_stream_count_matches(self, capsys):
        rc, out, _ = run(capsys, "enumerate", "--n", "4")
        assert rc == 0
        assert out.count("root 4\n") == 29

    def test_out_of_range(self, capsys):
        rc, _, err = run(capsys, "enumerate", "--n", "7")
        assert rc == 1
        assert "OutOfRange" in err


class TestOrbitsPerm:
    def test_perm_identity(self, capsys):
        assert run(capsys, "perm", "--sigma", "1")[1] == "1\n"

    def test_perm_swap(self, capsys):
        assert run(capsys, "perm", "--sigma", "2 1")[1] == "2 1\n"

    def test_perm_rejects_garbage(self, capsys):
        rc, _, err = run(capsys, "perm", "--sigma", "1 1")
        assert rc == 1
        assert "NotAPermutation" in err

    def test_orbits_n4(self, capsys):
        rc, out, _ = run(capsys, "orbits", "--n", "4")
        assert rc == 0
        lines = out.splitlines()
        assert "2341 3241 4231 4321" in lines
        assert "2431 3421" in lines
        assert "1243 1423 2143 2413 4123 4213" in lines
        assert "1342 1432 3142 3412 4132 4312" in lines
        assert "1234" in lines
        assert len(lines) == 8


class TestDot:
    def test_fixture_counts(self, capsys, t1_path):
        rc, out, _ = run(capsys, "dot", t1_path)
        assert rc == 0
        vertex_nodes = [l for l in out.splitlines() if l.strip().rstrip(";").isdigit()]
        polygons = [l for l in out.splitlines() if "shape=polygon" in l]
        assert len(vertex_nodes) == 14
        assert len(polygons) == 4
        assert out.count("[style=bold]") == 4

    def test_trivial_one_polygon(self, capsys, tmp_path):
        path = tmp_path / "trivial.txt"
        path.write_text("root 3\n1 2 3\n")
        rc, out, _ = run(capsys, "dot", str(path))
        assert out.count("shape=polygon") == 1

    def test_steps_fixture(self, capsys, t1_path):
        rc, out, _ = run(capsys, "dot", t1_path, "--steps")
        assert rc == 0
        assert out.count("graph step") == 6
        # the final stage is the trivial hypertree on all 14 vertices
        assert "{1,2,3,4,5,6,7,8,9,10,11,12,13}_14" in out


class TestUsage:
    def test_no_command_exit_2(self, capsys):
        assert run(capsys, )[0] == 2

    def test_unknown_command_exit_2(self, capsys):
        assert run(capsys, "frobnicate")[0] == 2

    def test_encode_requires_codec(self, capsys, t1_path):
        assert run(capsys, "encode", t1_path)[0] == 2
