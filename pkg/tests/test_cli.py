import json
import subprocess
import sys

import pytest

from hamiltonia.cli import main, resolve_group
from hamiltonia.errors import GroupError


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize(
    "ref,order",
    [
        ("cyclic:7", 7),
        ("dihedral:10", 10),
        ("dicyclic:3", 12),
        ("sym:4", 24),
        ("alt:5", 60),
        ("sl:2:3", 24),
        ("psl:2:7", 168),
        ("pgl:2:5", 120),
        ("semidirect:3^2:2:2", 18),
        ("semidirect:5^2:2^2:4", 100),
        ("prod:cyclic:2,alt:5", 120),
        ("prod:cyclic:2,(prod:cyclic:3,cyclic:5)", 30),
    ],
)
def test_group_refs(ref, order):
    assert resolve_group(ref).order == order


@pytest.mark.parametrize("ref", ["dihedral:5", "dihedral:2", "cyclic:x", "foo:3", "semidirect:3:2", "prod:cyclic:2", "sl:2:6"])
def test_bad_refs(ref):
    with pytest.raises(GroupError):
        resolve_group(ref)


def test_file_ref(tmp_path):
    p = tmp_path / "g.grp"
    p.write_text("degree 3\ngen (1 2)\ngen (1 2 3)\n")
    assert resolve_group(str(p)).order == 6


def test_analyze_a5(capsys):
    code, out, _ = run(capsys, "analyze", "alt:5", "--family", "nilpotent", "--format", "json")
    d = json.loads(out)
    assert code == 0
    assert d["flags"]["para_hamiltonian"] and not d["flags"]["meta_hamiltonian"] and d["flags"]["biminimal_non"]
    assert d["primes"] == [2, 3, 5]


def test_analyze_sl25(capsys):
    code, out, _ = run(capsys, "analyze", "sl:2:5")
    assert code == 0
    assert "SL(2,5)" in out and "Frattini order: 2" in out


def test_analyze_trivial(capsys):
    code, out, _ = run(capsys, "analyze", "cyclic:1", "--format", "json")
    d = json.loads(out)
    assert code == 0 and d["order"] == 1 and d["flags"]["in_family"]
    code, out, _ = run(capsys, "analyze", "cyclic:1", "--family", "abelian", "--format", "json")
    assert json.loads(out)["flags"]["in_family"]


@pytest.mark.parametrize("ref,count,classes", [("alt:5", 59, 9), ("sl:2:5", 76, None), ("sym:4", 30, 11)])
def test_lattice(capsys, ref, count, classes):
    code, out, _ = run(capsys, "lattice", ref, "--format", "json")
    d = json.loads(out)
    assert code == 0 and d["subgroups"] == count
    if classes:
        assert d["conjugacy_classes"] == classes


def test_lattice_cache_env(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("HAMILTONIA_CACHE_DIR", str(tmp_path))
    _, out, _ = run(capsys, "lattice", "sym:4", "--format", "json")
    assert json.loads(out)["cache"] == "miss"
    _, out, _ = run(capsys, "lattice", "sym:4", "--format", "json")
    assert json.loads(out)["cache"] == "hit"
    for f in tmp_path.iterdir():
        f.write_text("garbage")
    code, out, err = run(capsys, "lattice", "sym:4", "--format", "json")
    assert code == 0 and json.loads(out)["cache"] == "rebuilt"


def test_exit_codes(capsys):
    assert run(capsys, "verify", "--claims", "T9.9")[0] == 2
    assert run(capsys, "analyze", "dihedral:5")[0] == 2
    assert run(capsys, "analyze", "psl:2:11")[0] == 3
    assert run(capsys, "lattice", "sym:4", "--cap", "10")[0] == 3
    assert run(capsys, "analyze", "/no/such/file.grp")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_verify_t36(capsys):
    code, out, _ = run(capsys, "verify", "--claims", "T3.6", "--format", "json")
    (d,) = json.loads(out)
    assert code == 0 and d["verdict"] == "pass"
    assert "insoluble para-nilpotent-Hamiltonian: ['A5', 'SL(2,5)']" in d["meta"]["notes"]


def test_verify_failure_exit(capsys, monkeypatch):
    from hamiltonia.verify import claims
    from hamiltonia.verify.report import Instance

    monkeypatch.setitem(claims.CLAIMS, "T4.8", ("forced", lambda s, w: ([], [Instance("x", "fail", "forced")], [])))
    assert run(capsys, "verify", "--claims", "T4.8")[0] == 1


def test_census(capsys):
    code, out, _ = run(capsys, "census", "--max-order", "60", "--format", "json")
    rows = json.loads(out)["rows"]
    a5 = next(r for r in rows if r["label"] == "A5")
    assert code == 0 and a5["primes"] == [2, 3, 5]
    code, out, _ = run(capsys, "census", "--max-order", "1", "--format", "json")
    assert [r["label"] for r in json.loads(out)["rows"]] == ["C1"]
    code, out, _ = run(capsys, "census", "--max-order", "200", "--format", "json")
    psl = next(r for r in json.loads(out)["rows"] if r["label"] == "PSL(2,7)")
    assert not psl["flags"]["nilpotent"]["para_hamiltonian"]


def test_census_strict(capsys):
    code, out, _ = run(capsys, "census", "--scope", "psl:2:11", "--format", "json")
    assert code == 0 and json.loads(out)["rows"][0]["skipped"]
    assert run(capsys, "census", "--scope", "psl:2:11", "--strict")[0] == 3


def test_lattice_default_cache(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("XDG_CACHE_HOME", str(tmp_path))
    _, out, _ = run(capsys, "lattice", "alt:4", "--format", "json")
    assert json.loads(out)["cache"] == "miss"
    assert any((tmp_path / "hamiltonia").iterdir())
    _, out, _ = run(capsys, "lattice", "alt:4", "--no-cache", "--format", "json")
    assert json.loads(out)["cache"] == "off"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hamiltonia", "lattice", "alt:5", "--no-cache"], capture_output=True, text=True)
    assert proc.returncode == 0 and "subgroups: 59" in proc.stdout
