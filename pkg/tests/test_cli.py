import io

import pytest

from eucrhythm.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_gen(capsys):
    code, out, _ = run(capsys, "gen", "3", "8")
    assert code == 0
    assert out.splitlines() == ["x..x..x.", "(3,3,2)", "{0,3,6}/8"]
    code, out, _ = run(capsys, "gen", "7", "16", "--algo", "generated:5")
    assert code == 0 and out.splitlines()[2] == "{0,4,5,9,10,14,15}/16"
    code, out, _ = run(capsys, "gen", "3", "8", "--rotate", "2")
    assert out.splitlines()[0] == "x.x..x.."


def test_gen_is_deterministic(capsys):
    first = run(capsys, "gen", "5", "13", "--algo", "snap")
    assert run(capsys, "gen", "5", "13", "--algo", "snap") == first


def test_gen_errors(capsys):
    code, _, err = run(capsys, "gen", "9", "8")
    assert code == 2 and "error" in err
    code, _, err = run(capsys, "gen", "3", "8", "--algo", "nope")
    assert code == 2 and "unknown algorithm" in err
    code, _, _ = run(capsys, "gen", "3", "8", "--algo", "generated:x")
    assert code == 2
    with pytest.raises(SystemExit) as info:
        main(["gen", "three", "8"])
    assert info.value.code == 2


def test_analyze_args_and_stdin(capsys, monkeypatch):
    code, out, _ = run(capsys, "analyze", "x..x..x.", "(3,3,4,3,3)")
    assert code == 0
    assert "Erdős-deep           yes" in out
    assert "{0,3,6,10,13}/16" in out
    monkeypatch.setattr("sys.stdin", io.StringIO("{0,1,2,4}/6\n\n"))
    code, out, _ = run(capsys, "analyze")
    assert code == 0 and "maximally even (*)   no" in out


def test_analyze_parse_error(capsys, monkeypatch):
    code, _, err = run(capsys, "analyze", "x..q")
    assert code == 2 and "3" in err
    monkeypatch.setattr("sys.stdin", io.StringIO(""))
    code, _, err = run(capsys, "analyze")
    assert code == 2 and "no pattern" in err


def test_verify(capsys, monkeypatch):
    code, out, _ = run(capsys, "verify", "digital-line", "--max-n", "20")
    assert code == 0 and out.startswith("PASS")
    code, out, _ = run(capsys, "verify", "winograd-implies-erdos", "--max-n", "6")
    assert code == 1 and "{0,1,2}/3" in out
    code, _, err = run(capsys, "verify", "deep-characterization", "--max-n", "21")
    assert code == 2 and "EUCRHYTHM_MAX_N" in err
    code, _, _ = run(capsys, "verify", "even-uniqueness", "--max-n", "0")
    assert code == 2


def test_svg(capsys, tmp_path):
    target = tmp_path / "bossa.svg"
    code, out, _ = run(capsys, "svg", "x..x..x...x..x..", str(target))
    assert code == 0 and str(target) in out
    text = target.read_text(encoding="utf-8")
    assert text.startswith("<svg") or text.startswith("<?xml")
    assert text.count("<circle") >= 6
    code, _, err = run(capsys, "svg", "x..x", str(tmp_path / "missing" / "x.svg"))
    assert code == 2 and "cannot write" in err


def test_corpus_commands(capsys, tmp_path):
    code, out, _ = run(capsys, "corpus", "check")
    assert code == 0 and out.startswith("PASS corpus check: 47 entries")
    code, out, _ = run(capsys, "corpus", "list", "--aksak", "quasi")
    assert code == 0 and len(out.splitlines()) == 2
    code, out, _ = run(capsys, "corpus", "list", "--name", "habanera")
    assert out.split()[0] == "E(3,8)"
    code, out, _ = run(capsys, "corpus", "show", "E(3,8)")
    assert code == 0 and "tresillo" in out and "x..x..x." in out
    code, _, err = run(capsys, "corpus", "show", "E(4,12)")
    assert code == 2 and "no corpus entry" in err
    code, _, _ = run(capsys, "corpus", "show")
    assert code == 2


def test_corpus_flag_and_bad_file(capsys, tmp_path, monkeypatch):
    bad = tmp_path / "bad.txt"
    bad.write_text("E(3,8)|3|8|x..x..x.|(3,3,2)|pseudo|euclidean|tresillo|\n", encoding="utf-8")
    code, out, _ = run(capsys, "--corpus", str(bad), "corpus", "check")
    assert code == 1 and "string class" in out
    code, _, err = run(capsys, "--corpus", str(bad), "corpus", "list")
    assert code == 2 and "string class" in err
    code, _, err = run(capsys, "--corpus", str(tmp_path / "nope.txt"), "corpus", "list")
    assert code == 2 and "cannot read corpus" in err
