import json

import pytest

from pinperm.cli import main, read_basis


@pytest.fixture
def files(tmp_path):
    sep = tmp_path / "separable.basis"
    sep.write_text("# separable permutations\n2413\n\n3 1 4 2  # spaced form\n")
    av = tmp_path / "av123.basis"
    av.write_text("123\n")
    bad = tmp_path / "bad.basis"
    bad.write_text("1 1\n")
    return sep, av, bad


def test_basis_file_format(files):
    sep, _, bad = files
    assert read_basis(str(sep)) == [(2, 4, 1, 3), (3, 1, 4, 2)]


def test_decide_exit_codes(files, capsys):
    sep, av, bad = files
    assert main(["--format", "json", "decide", str(sep)]) == 0
    assert json.loads(capsys.readouterr().out)["finite"] is True
    assert main(["--format", "json", "decide", str(av)]) == 1
    assert json.loads(capsys.readouterr().out)["stages"]["parallel"] is False
    assert main(["decide", str(bad)]) == 2
    assert main(["decide", str(sep.parent / "missing.basis")]) == 2
    assert main(["--mode", "fast", "decide", str(sep)]) == 2


def test_text_and_json_agree(files, capsys):
    _, av, _ = files
    main(["decide", str(av)])
    text = capsys.readouterr().out
    main(["--format", "json", "decide", str(av)])
    data = json.loads(capsys.readouterr().out)
    assert ("verdict: finite" in text) == data["finite"]
    for k, v in data["stages"].items():
        assert f"{k}: {'pass' if v else 'fail'}" in text


def test_dot_and_oracle_check(files, tmp_path, capsys):
    sep, _, _ = files
    out = tmp_path / "dot"
    assert main(["--emit-dot", str(out), "--oracle-check", "7", "--format", "json", "decide", str(sep)]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["oracle_check"]["simples"] == [] and data["oracle_check"]["problems"] == []
    assert sorted(p.name for p in out.iterdir()) == ["A_0.dot", "A_1.dot", "A_C.dot"]


def test_pinwords(capsys):
    assert main(["--format", "json", "--oracle-check", "1", "pinwords", "21"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["count"] == 16 and data["oracle_agrees"]
    assert main(["pinwords", "4726315"]) == 0
    assert "0 pin words" in capsys.readouterr().out
    assert main(["pinwords", "12a"]) == 2


def test_automaton(capsys, tmp_path):
    assert main(["--oracle-check", "1", "--format", "json", "--emit-dot", str(tmp_path), "automaton", "2413"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["oracle_mismatch"] is None and (tmp_path / "A_0.dot").exists()
    assert main(["automaton", "4726315"]) == 2


def test_oracle_scan(capsys):
    assert main(["--format", "json", "oracle-scan", "11", "12"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["count"] == 12 and data["inconsistent"] == 0
