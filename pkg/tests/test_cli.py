"""End-to-end command-line tests via main(argv)."""

import pytest

from hyperalg import fuzzy, hyper, io
from hyperalg.cli import main


def test_check_builtin_hyperring(capsys):
    assert main(["check", "signs"]) == 0
    out = capsys.readouterr().out
    assert "hyperring axioms: pass" in out


def test_check_builtin_fuzzy(capsys):
    assert main(["check", "signfuzzy"]) == 0
    assert "fuzzy ring axioms: pass" in capsys.readouterr().out


def test_check_file(tmp_path, capsys):
    p = tmp_path / "k.json"
    io.save_structure(hyper.krasner(), p)
    assert main(["check", str(p), "--kind", "hyperring"]) == 0


def test_check_failing_structure(tmp_path, capsys):
    # shrinking 1 + (-1) to {0} breaks associativity; exit code 1
    s = hyper.signs()
    add = [list(r) for r in s.add]
    add[1][2] = add[2][1] = 1
    bad = hyper.FiniteHyperring(
        3, tuple(map(tuple, add)), s.mul, s.neg, False, "broken"
    )
    p = tmp_path / "bad.json"
    io.save_structure(bad, p)
    assert main(["check", str(p)]) == 1
    assert "FAIL" in capsys.readouterr().out


def test_malformed_file_exits_2(tmp_path, capsys):
    p = tmp_path / "junk.json"
    p.write_text('{"schema_version": "1", "kind": "nope"}')
    assert main(["check", str(p)]) == 2


def test_missing_file_exits_2(capsys):
    assert main(["check", "/no/such/file.json"]) == 2


def test_construct_F(tmp_path, capsys):
    out = tmp_path / "fk.json"
    assert main(["construct", "F", "--in", "krasner", "--out", str(out)]) == 0
    k = io.load_structure(out, "fuzzyring")
    kf = fuzzy.krasner_fuzzy()
    assert k.add == kf.add and k.k0 == kf.k0


def test_construct_quotient(tmp_path, capsys):
    out = tmp_path / "q.json"
    rc = main(
        ["construct", "quotient", "--in", "gf5", "--units", "1,4", "--out", str(out)]
    )
    assert rc == 0
    q = io.load_structure(out, "hyperring")
    assert hyper.check_hyperfield(q).passed
    assert q.n == 3


def test_construct_khef(tmp_path):
    out = tmp_path / "khef.json"
    assert main(["construct", "KHef", "--in", "klein4", "--out", str(out)]) == 0
    h = io.load_structure(out, "hyperring")
    assert h.n == 7


def test_construct_unitfield_z(tmp_path, capsys):
    out = tmp_path / "uz.json"
    assert main(["construct", "unitfield", "--in", "z", "--out", str(out)]) == 0
    h = io.load_structure(out, "hyperring")
    assert h.partial
    assert h.add[1][1] == 0  # 1 + 1 is the empty hypersum


def test_construct_F1(tmp_path):
    out = tmp_path / "f1.json"
    assert main(["construct", "F1", "--in", "signs", "--out", str(out)]) == 0
    p = io.load_structure(out, "demifield")
    assert len(p.family) == 4
    assert main(["check", str(out)]) == 0


def test_morphisms_hyperring(capsys):
    assert main(["morphisms", "signs", "krasner"]) == 0
    assert "1 homomorphisms" in capsys.readouterr().out


def test_morphisms_fuzzy_weak(capsys):
    assert main(["morphisms", "signfuzzy", "krasnerfuzzy", "--kind", "fuzzy-weak"]) == 0
    assert "1 weak morphisms" in capsys.readouterr().out


def test_morphisms_fuzzy_strong(capsys):
    rc = main(
        ["morphisms", "krasnerfuzzy", "krasnerfuzzy", "--kind", "fuzzy-strong"]
    )
    assert rc == 0
    assert "strong morphisms" in capsys.readouterr().out


def test_matroids_with_oracle(capsys):
    assert main(["matroids", "--coeff", "krasner", "-n", "4", "-r", "2", "--oracle"]) == 0
    out = capsys.readouterr().out
    assert "36 Grassmann-Pluecker functions" in out
    assert "oracle agreement: pass" in out


def test_iso_found(tmp_path, capsys):
    out = tmp_path / "g.json"
    assert main(["construct", "G", "--in", "signfuzzy", "--out", str(out)]) == 0
    assert main(["iso", str(out), "signs"]) == 0
    assert "isomorphism:" in capsys.readouterr().out


def test_iso_not_found(capsys):
    assert main(["iso", "krasner", "signs"]) == 1
    assert "no isomorphism" in capsys.readouterr().out


def test_triangle_demo(capsys):
    assert main(["triangle-demo"]) == 0
    out = capsys.readouterr().out
    assert "[1, 5]" in out and "[1, 25]" in out and "[0, 25]" in out
    assert "not equal" in out


def test_ordgrp_demo(capsys):
    assert main(["--jobs", "2", "ordgrp-demo", "--window", "2"]) == 0
    out = capsys.readouterr().out
    assert out.count(": pass") == 4


def test_usage_error_exits_2():
    with pytest.raises(SystemExit) as e:
        main(["check"])  # missing path
    assert e.value.code == 2
