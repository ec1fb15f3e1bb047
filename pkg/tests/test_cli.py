import json

import pytest

from pgro import cli
from pgro.basis import InternalError
from pgro.corpus import CorpusError, corpus_entry
from pgro.dumps import read_nontips
from pgro.groupfile import load_group


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def info_fields(out):
    return dict(line.split(": ", 1) for line in out.strip().splitlines())


def test_info_c4(capsys):
    code, out, _ = run_cli(capsys, "info", "corpus:C4")
    assert code == 0
    f = info_fields(out)
    assert f["order"] == "4 = 2^2"
    assert f["nilpotency degree N"] == "4"
    assert f["Jennings layer counts d_r"] == "1 1"
    assert f["Jennings layer polynomial"] == "1 1 1 1"
    assert f["Je(G) = n(n+1)/2"] == "3"


def test_info_v4_and_g32ex(capsys):
    f = info_fields(run_cli(capsys, "info", "corpus:V4")[1])
    assert f["nilpotency degree N"] == "3"
    assert f["radical layer dims"] == "1 2 1"
    f = info_fields(run_cli(capsys, "info", "corpus:G32ex")[1])
    assert f["Jennings layer counts d_r"] == "2 2 1"
    assert f["Je(G) = n(n+1)/2"] == "15"
    assert f["radical layer dims"] == f["Jennings layer polynomial"]


def test_grobner_c4_jennings(tmp_path, capsys):
    code, _, _ = run_cli(capsys, "grobner", "corpus:C4", "--ordering", "jennings",
                         "--use-given-generators", "-o", str(tmp_path))
    assert code == 0
    basis = (tmp_path / "basis.txt").read_text().splitlines()
    assert basis == ["a2*a2 = 0", "a1*a2 = 1*a2*a1", "a1*a1 = 1*a2"]
    nt = (tmp_path / "nontips.txt").read_text().splitlines()
    assert nt[0] == "nontips 2 2 2 4 jennings"
    assert nt[1] == "# dims 1 2"
    assert nt[2:] == ["0 0 1 -1 0", "1 1 a1 0 1", "2 1 a2 0 2", "3 2 a2*a1 2 1"]


def test_grobner_rll_header(tmp_path, capsys):
    run_cli(capsys, "grobner", "corpus:V4", "--ordering", "rll", "-o", str(tmp_path))
    assert (tmp_path / "basis.txt").read_text().startswith("modulo words of length >= 3\n")


def test_nontips_file_roundtrip(tmp_path, capsys):
    run_cli(capsys, "grobner", "corpus:Q8", "--ordering", "ll", "-o", str(tmp_path))
    header, nodes = read_nontips((tmp_path / "nontips.txt").read_text())
    assert header == {"p": 2, "n": 3, "alphabet_size": 2, "N": 5, "ordering": "ll"}
    assert len(nodes) == 8
    words = [w for _, _, w, _, _ in nodes]
    for i, length, w, parent, child in nodes[1:]:
        assert length == len(w)
        assert words[parent] == w[:-1] and child == w[-1] + 1


@pytest.mark.parametrize("ordering", ["ll", "rll", "jennings"])
def test_grobner_deterministic(tmp_path, capsys, ordering):
    outs = []
    for k in range(2):
        d = tmp_path / str(k)
        run_cli(capsys, "grobner", "corpus:D32", "--ordering", ordering,
                "--seed", "7", "-o", str(d))
        outs.append(((d / "nontips.txt").read_bytes(), (d / "basis.txt").read_bytes()))
    assert outs[0] == outs[1]


def test_grobner_from_file(tmp_path, capsys):
    path = tmp_path / "q8.grp"
    path.write_text(corpus_entry("Q8").text)
    code, out, _ = run_cli(capsys, "grobner", str(path), "--ordering", "ll",
                           "-o", str(tmp_path / "out"))
    assert code == 0 and out.startswith("q8:")


def test_experiment_json(capsys):
    code, out, _ = run_cli(capsys, "experiment", "corpus:D8", "corpus:Q8", "--ordering", "ll",
                           "--ordering", "rll", "--ordering", "jennings",
                           "--attempts", "3", "--json")
    assert code == 0
    doc = json.loads(out)
    assert len(doc["reports"]) == 6
    for r in doc["reports"]:
        assert len(r["sizes"]) == 3 and r["min"] <= r["mean"] <= r["max"]
        if r["ordering"] == "jennings":
            assert r["sizes"] == [6, 6, 6] and r["stddev"] == 0
    assert {c["group"] for c in doc["comparison"]} == {"D8", "Q8"}
    assert all(c["d"] == c["eLL"] - c["eRLL"] for c in doc["comparison"])


def test_experiment_outputs(tmp_path, capsys):
    code, out, _ = run_cli(capsys, "experiment", "corpus:M32", "--attempts", "2",
                           "--selection", "smallest", "--selection", "arbitrary",
                           "-o", str(tmp_path))
    assert code == 0
    assert "order 32:" in out
    for name in ["report.tsv", "comparison.tsv", "sizes.png", "comparison.png"]:
        assert (tmp_path / name).stat().st_size > 0
    assert (tmp_path / "sizes.png").read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"
    rows = (tmp_path / "report.tsv").read_text().splitlines()
    assert len(rows) == 1 + 4


def test_experiment_no_figures(tmp_path, capsys):
    run_cli(capsys, "experiment", "corpus:C4", "--attempts", "1", "--no-figures",
            "-o", str(tmp_path))
    assert not (tmp_path / "sizes.png").exists()
    assert (tmp_path / "report.tsv").exists()


def test_corpus_list_and_dump(tmp_path, capsys):
    code, out, _ = run_cli(capsys, "corpus", "list")
    assert code == 0
    assert any(line.split()[:2] == ["G32ex", "32"] for line in out.splitlines())
    code, _, _ = run_cli(capsys, "corpus", "dump", "C9", "D8", "-o", str(tmp_path))
    assert code == 0
    assert sorted(p.name for p in tmp_path.iterdir()) == ["C9.grp", "D8.grp"]
    assert load_group(tmp_path / "C9.grp").order == 9
    code, _, err = run_cli(capsys, "corpus", "dump", "nope", "-o", str(tmp_path))
    assert code == 2 and "nope" in err


def test_directory_source(tmp_path, capsys):
    run_cli(capsys, "corpus", "dump", "C2", "V4", "-o", str(tmp_path))
    code, out, _ = run_cli(capsys, "experiment", str(tmp_path), "--attempts", "1", "--json")
    assert code == 0
    assert {r["group"] for r in json.loads(out)["reports"]} == {"C2", "V4"}


@pytest.mark.parametrize("argv", [
    ["info", "no/such/file"],
    ["info", "corpus:NOPE"],
    ["info", "corpus"],
    ["experiment", "corpus:C4", "--attempts", "0"],
])
def test_input_errors_exit_2(capsys, argv):
    code, _, err = run_cli(capsys, *argv)
    assert code == 2
    assert err.startswith("pgro:")


@pytest.mark.parametrize("text", [
    "",
    "perm 3 1\n2 3\n",
    "perm 3 1\n2 3 3\n",
    "perm 3 2\n2 1 3\n2 3 1\n",
    "table 2 1\n1 2\n1 2\n2\n",
])
def test_bad_group_files_exit_2(tmp_path, capsys, text):
    path = tmp_path / "bad.grp"
    path.write_text(text)
    code, _, err = run_cli(capsys, "info", str(path))
    assert code == 2 and err


def test_internal_error_exit_3(monkeypatch, tmp_path, capsys):
    def boom(*a, **k):
        raise InternalError("broken")
    monkeypatch.setattr(cli, "run", boom)
    code, _, err = run_cli(capsys, "grobner", "corpus:C4", "--ordering", "ll",
                           "-o", str(tmp_path))
    assert code == 3 and "broken" in err


def test_corpus_error_exit_3(monkeypatch, capsys):
    def boom():
        raise CorpusError("checksum")
    monkeypatch.setattr(cli, "load_corpus", boom)
    code, _, _ = run_cli(capsys, "corpus", "list")
    assert code == 3
