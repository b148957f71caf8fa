from __future__ import annotations

import json

import pytest

from gl3cg.cli import (EXIT_FAIL, EXIT_INPUT, EXIT_OK, build_parser, main)

THREEJ_ARGS = [
    "threej",
    "--v", "1,0,0", "--w", "1,0,0", "--u", "2,0,0",
    "--pv", "1,0,1", "--pw", "1,0,1", "--pu", "2,0,2",
]


def test_threej_plain(capsys):
    assert main(THREEJ_ARGS) == EXIT_OK
    assert capsys.readouterr().out.strip() == "2"


def test_threej_both_agree(capsys):
    assert main(THREEJ_ARGS + ["--method", "both"]) == EXIT_OK
    captured = capsys.readouterr()
    assert captured.out.strip() == "2"
    assert "agree=True" in captured.err


def test_threej_json(capsys):
    assert main(THREEJ_ARGS + ["--format", "json"]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data["value"] == "2"
    assert data["label"] == [1, 1, 0, 0, 0, 0, 0, 0]


def test_threej_bad_constituent(capsys):
    args = list(THREEJ_ARGS)
    args[args.index("2,0,0")] = "3,0,0"
    assert main(args) == EXIT_INPUT
    assert "does not occur" in capsys.readouterr().err


def test_threej_malformed_weight():
    with pytest.raises(SystemExit) as exc:
        main(["threej", "--v", "1,0", "--w", "1,0,0", "--u", "2,0,0",
              "--pv", "1,0,1", "--pw", "1,0,1", "--pu", "2,0,2"])
    assert exc.value.code == 2


def test_threej_label_conflict():
    with pytest.raises(SystemExit) as exc:
        main(THREEJ_ARGS + ["--label", "1,1,0,0,0,0,0,0", "--label-index", "0"])
    assert exc.value.code == 2


def test_table_csv(capsys):
    assert main(["table", "--v", "1,0,0", "--w", "1,0,0", "--u", "2,0,0",
                 "--nonzero-only", "--format", "csv"]) == EXIT_OK
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "v_pattern,w_pattern,u_pattern,label,value"
    assert len(lines) == 10
    assert all(line.count(",") >= 4 for line in lines[1:])


def test_table_plain_rows(capsys):
    assert main(["table", "--v", "1,0,0", "--w", "1,0,0", "--u", "1,1,0",
                 "--nonzero-only"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "label=0,0,0,0,1,0,0,0" in out
    assert all(line.startswith("pv=") for line in out.strip().splitlines())


def test_table_decomposition(capsys):
    assert main(["table", "--v", "1,0,0", "--w", "1,0,0"]) == EXIT_OK
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0].startswith("u=2,0,0 multiplicity=1")
    assert lines[1].startswith("u=1,1,0 multiplicity=1")


def test_table_decomposition_csv(capsys):
    assert main(["table", "--v", "1,0,0", "--w", "1,0,0",
                 "--format", "csv"]) == EXIT_OK
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "u,multiplicity,labels"
    assert lines[1].startswith('"2,0,0",1,')


def test_verify_single_suite(capsys):
    assert main(["verify", "--suite", "micro", "--max-weight", "1"]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.startswith("verification report")
    assert "FAIL" not in out
    assert "0 failed" in out


def test_verify_json(capsys):
    assert main(["verify", "--suite", "lattices", "--max-weight", "1",
                 "--format", "json"]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data["passed"] is True


def test_cache_roundtrip(tmp_path, capsys, monkeypatch):
    cache = tmp_path / "cache"
    monkeypatch.setenv("GL3CG_CACHE_DIR", str(cache))
    assert main(THREEJ_ARGS) == EXIT_OK
    first = capsys.readouterr().out
    files = list(cache.glob("*.json"))
    assert len(files) == 1
    # second run is served from the cache and prints the same thing
    assert main(THREEJ_ARGS) == EXIT_OK
    assert capsys.readouterr().out == first
    assert list(cache.glob("*.json")) == files


def test_cache_flag_overrides_env(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("GL3CG_CACHE_DIR", str(tmp_path / "env"))
    flag_dir = tmp_path / "flag"
    assert main(THREEJ_ARGS + ["--cache-dir", str(flag_dir)]) == EXIT_OK
    capsys.readouterr()
    assert list(flag_dir.glob("*.json"))
    assert not (tmp_path / "env").exists()


def test_verbose_echoes_request(capsys):
    assert main(THREEJ_ARGS + ["--verbose"]) == EXIT_OK
    assert capsys.readouterr().err.startswith("request: {")


def test_parser_rejects_unknown_suite():
    parser = build_parser()
    with pytest.raises(SystemExit):
        parser.parse_args(["verify", "--suite", "bogus"])
