import json

import pytest

from hamiltonia.catalog import default_catalog, named
from hamiltonia.errors import GroupError
from hamiltonia.verify import (
    CLAIMS,
    Workspace,
    check_claim,
    dickson_audit,
    run_census,
    suzuki_arithmetic,
)

WS = Workspace()


@pytest.fixture(scope="module")
def catalog():
    return default_catalog()


@pytest.mark.parametrize("claim", list(CLAIMS))
def test_every_claim_passes_on_default_catalog(claim, catalog):
    r = check_claim(claim, catalog, WS)
    assert r.passed, r.to_text()
    assert r.checked > 0


def test_unknown_claim():
    with pytest.raises(GroupError):
        check_claim("T9.9", default_catalog(), WS)


def test_empty_scope_rejected():
    with pytest.raises(GroupError):
        check_claim("T3.6", [], WS)


def test_vacuous_pass_is_visible():
    r = check_claim("T3.6", [named("S4")], WS)
    assert r.passed and r.vacuous
    assert r.summary() == "pass (vacuous, n=0)"
    assert r.to_dict()["meta"]["vacuous"] is True


def test_named_witness_for_negative_control():
    r = check_claim("L3.4", [named("PSL(2,7)")], WS)
    assert r.instances[0].witness["name"] == "S4"


def test_failure_always_has_witness(monkeypatch):
    from hamiltonia.verify import claims
    from hamiltonia.verify.report import Instance

    def broken(scope, ws):
        return [e.label for e in scope], [Instance(e.label, "fail", "forced") for e in scope], []

    monkeypatch.setitem(claims.CLAIMS, "T4.8", ("forced failure", broken))
    r = check_claim("T4.8", [named("S3")], WS)
    assert not r.passed
    assert r.instances[0].witness["order"] == 6


@pytest.mark.parametrize("q", [4, 5, 7])
def test_psl_subgroup_audit(q):
    r = dickson_audit(q)
    assert r.passed, r.to_text()


def test_psl_audit_clause_table():
    r7 = dickson_audit(7)
    s4 = [i for i in r7.instances if "(iv)" in i.detail]
    assert s4 and "present" in s4[0].detail
    r5 = dickson_audit(5)
    s4 = [i for i in r5.instances if "(iv)" in i.detail]
    assert s4 and "absent" in s4[0].detail
    with pytest.raises(GroupError):
        dickson_audit(11)


@pytest.mark.parametrize("m,a,b_", [(1, 13, 5), (2, 41, 25), (3, 145, 113)])
def test_sz_arithmetic(m, a, b_):
    r = suzuki_arithmetic(m)
    assert r.passed
    q = 2 ** (2 * m + 1)
    assert a * b_ == q * q + 1
    assert r.instances[0].extra["factors"] == [a, b_]


def test_t36_report(catalog):
    r = check_claim("T3.6", catalog, WS)
    members = [i.group for i in r.instances if i.status == "pass" and "para-nilpotent-Hamiltonian: True" in i.detail]
    assert members == ["A5", "SL(2,5)"]
    for neg in ("S5", "C2xA5", "PSL(2,7)"):
        inst = next(i for i in r.instances if i.group == neg)
        assert inst.witness is not None and inst.witness["name"]


def test_l31_small_scope():
    r = check_claim("L3.1", [named("D18"), named("C25:C4")], WS)
    assert r.passed and r.checked == 2
    d18 = r.instances[0]
    assert "C9:C2" in d18.detail


def test_report_json_shape(catalog):
    r = check_claim("T3.10", catalog, WS)
    d = json.loads(r.to_json())
    assert list(d) == ["schema", "claim", "scope", "verdict", "instances", "meta"]
    assert d["schema"] == "1" and d["verdict"] == "pass"
    assert "elapsed" not in json.dumps(d)


def test_census_rows():
    t = run_census([named("S3")], workspace=WS)
    (row,) = t.rows
    assert row.order == 6 and row.primes == [2, 3]
    assert row.flags["nilpotent"]["minimal_non"] and row.flags["nilpotent"]["meta_hamiltonian"]
    t = run_census([named("A5")], workspace=WS)
    f = t.rows[0].flags["nilpotent"]
    assert t.rows[0].primes == [2, 3, 5] and f["para_hamiltonian"] and not f["meta_hamiltonian"]
    assert run_census([], workspace=WS).rows == []


def test_census_full(catalog):
    t = run_census(catalog, workspace=WS)
    assert t.violations == []
    assert [(r.order, r.label) for r in t.rows] == sorted((r.order, r.label) for r in t.rows)
    for r in t.rows:
        n = r.order
        assert all(n % p == 0 for p in r.primes)
        assert all(any(q == p for q in r.primes) for p in range(2, n + 1) if n % p == 0 and all(p % d for d in range(2, p)))


def test_census_skips_over_cap():
    from hamiltonia.catalog import builders as b

    t = run_census([b.matrix_group("PSL", 2, 11)], workspace=WS)
    assert t.rows[0].skipped
