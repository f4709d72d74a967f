import json
from pathlib import Path

import pytest

from dichordal.cli import main

DATA = Path(__file__).resolve().parent.parent / "demos" / "data"
EX1 = str(DATA / "example1.dg")
EX2 = str(DATA / "example2.dg")


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_recognize_example1_negative(capsys):
    code, out, _ = run(capsys, "recognize", EX1, "--variant", "semi-strict")
    assert code == 1
    assert "semi-strict: NO" in out
    assert "witness" in out and "stalled" in out


def test_recognize_example2_positive(capsys):
    code, out, _ = run(capsys, "recognize", EX2)
    assert code == 0
    assert "semi-strict: YES" in out
    assert "ordering: a b d c e" in out


def test_recognize_all_variants(capsys):
    # example1 is chordal in the plain sense but not semi-strict or strict
    code, out, _ = run(capsys, "recognize", EX1, "--variant", "all")
    assert code == 1
    assert "chordal: YES" in out
    assert "semi-strict: NO" in out
    assert "strict: NO" in out


def test_recognize_empty_digraph(capsys, tmp_path):
    f = tmp_path / "empty.dg"
    f.write_text("0 0\n")
    code, out, _ = run(capsys, "recognize", str(f))
    assert code == 0 and "YES" in out


def test_recognize_json(capsys):
    code, out, _ = run(capsys, "recognize", EX1, "--json")
    payload = json.loads(out)
    assert payload["chordal"] is False
    assert len(payload["witness"]) == 3


def test_order_subcommand(capsys):
    code, out, _ = run(capsys, "order", EX2)
    assert code == 0 and out.strip() == "a b d c e"
    code, out, _ = run(capsys, "order", EX1)
    assert code == 1 and out.strip() == "NONE"


def test_knot_example1(capsys):
    code, out, _ = run(capsys, "knot", EX1)
    assert code == 0
    assert "7 classes, 6 edges" in out
    assert "d^1 = {c->d, d->a, d->b}" in out


def test_knot_example2_counts(capsys):
    code, out, _ = run(capsys, "knot", EX2)
    assert "11 classes, 10 edges" in out


def test_knot_single_arc(capsys, tmp_path):
    f = tmp_path / "arc.dg"
    f.write_text("2 1\n0 1\n")
    code, out, _ = run(capsys, "knot", str(f))
    assert "2 classes, 1 edges" in out


def test_knot_dot(capsys):
    code, out, _ = run(capsys, "knot", EX1, "--dot")
    assert out.startswith("graph K {") and "cluster_0" in out


def test_classify_cycle(capsys, tmp_path):
    f = tmp_path / "c3.dg"
    f.write_text("3 3\n0 1\n1 2\n2 0\n")
    code, out, _ = run(capsys, "classify", str(f))
    assert "semicomplete: yes" in out
    assert "weakly-quasi-transitive: yes" in out
    assert "oriented: yes" in out


def test_classify_example1_witness(capsys):
    code, out, _ = run(capsys, "classify", EX1)
    assert "weakly-quasi-transitive: no   (violated by a, b, c)" in out


def test_forbidden_cycle(capsys, tmp_path):
    f = tmp_path / "c3.dg"
    f.write_text("3 3\n0 1\n1 2\n2 0\n")
    code, out, _ = run(capsys, "forbidden", str(f))
    assert code == 1
    assert out.startswith("fig1d:")


def test_forbidden_example2_none(capsys):
    code, out, _ = run(capsys, "forbidden", EX2)
    assert code == 0 and out.strip() == "none"


def test_forbidden_lollipop(capsys, tmp_path):
    from dichordal.digraph import serialize
    from dichordal.patterns import expand_template, lollipop_template

    host = expand_template(lollipop_template(3))[0]
    f = tmp_path / "lol.dg"
    f.write_text(serialize(host))
    code, out, _ = run(capsys, "forbidden", str(f))
    assert code == 1 and "lollipop3:" in out


def test_forbidden_jsonl(capsys, tmp_path):
    f = tmp_path / "c3.dg"
    f.write_text("3 3\n0 1\n1 2\n2 0\n")
    code, out, _ = run(capsys, "forbidden", str(f), "--json")
    lines = [json.loads(ln) for ln in out.splitlines()]
    assert lines[0]["name"] == "fig1d"


def test_verify_subcommand(capsys):
    code, out, _ = run(capsys, "verify", "--check", "theorem4", "--n", "4")
    assert code == 0
    assert "failures=0" in out and "status: PASS" in out


def test_verify_unknown_check(capsys):
    code, _, err = run(capsys, "verify", "--check", "nonsense")
    assert code == 2 and "unknown check" in err


def test_verify_json_deterministic(capsys):
    code, out1, _ = run(capsys, "verify", "--check", "nesting", "--n", "3", "--json")
    code, out2, _ = run(capsys, "verify", "--check", "nesting", "--n", "3", "--json")
    assert out1 == out2
    assert json.loads(out1)["status"] == "PASS"


def test_gen_wqt(capsys):
    from dichordal.classes import is_weakly_quasi_transitive
    from dichordal.digraph import parse

    code, out, _ = run(capsys, "gen", "--class", "wqt", "--seed", "7")
    assert code == 0
    assert is_weakly_quasi_transitive(parse(out))
    code, out2, _ = run(capsys, "gen", "--class", "wqt", "--seed", "7")
    assert out == out2


def test_gen_lsc(capsys):
    from dichordal.classes import is_locally_semicomplete
    from dichordal.digraph import parse

    code, out, _ = run(capsys, "gen", "--class", "locally-semicomplete", "--n", "6", "--seed", "3")
    assert is_locally_semicomplete(parse(out))


def test_enumerate_n2(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "2")
    blocks = [b for b in out.split("\n\n") if b.strip()]
    assert len(blocks) == 4


def test_enumerate_filtered(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "3", "--filter", "semicomplete")
    blocks = [b for b in out.split("\n\n") if b.strip()]
    assert len(blocks) == 27  # 3 kinds per pair, 3 pairs


def test_enumerate_cap(capsys):
    code, _, err = run(capsys, "enumerate", "--n", "6")
    assert code == 2 and "cap" in err


def test_parse_error_exit_2(capsys, tmp_path):
    f = tmp_path / "bad.dg"
    f.write_text("bogus\n")
    code, _, err = run(capsys, "recognize", str(f))
    assert code == 2 and "error:" in err


def test_missing_file_exit_2(capsys):
    code, _, err = run(capsys, "recognize", "/nonexistent/file.dg")
    assert code == 2
