import json

import pytest

from gxclean.errors import AxiomFailure, ParseError, SizeCapExceeded, UnknownTheorem
from gxclean.poly import int_poly
from gxclean.decompose import ring_check
from gxclean.verifier import (
    DEFAULT_SPECS,
    SUITES,
    SuiteContext,
    _pairs,
    build_catalog,
    counterexample,
    hunt_odd_asymmetry,
    revalidate_comparison,
    revalidate_counterexample,
    run_all,
    run_suite,
    theorem41_conditions,
)


@pytest.fixture(scope="module")
def reports(catalog):
    return {r.theorem_id: r for r in run_all(catalog, seed=0)}


def test_default_catalog_contents(catalog):
    assert len(catalog) == len(DEFAULT_SPECS) == 21
    orders = {name: R.order for name, R in catalog}
    assert orders["GR (Zn 7) C3"] == 343
    assert max(o for n, o in orders.items() if n != "GR (Zn 7) C3") <= 512
    assert orders["Mat 2 (Zn 3)"] == 81 and orders["Prod(Zn 2,Zn 2,Zn 2)"] == 8


def test_build_catalog_examples():
    cat = build_catalog(["Zn 4", "GR (Zn 7) C3"])
    assert [R.order for _, R in cat] == [4, 343]
    assert build_catalog(["Mat 2 (Zn 2)"]).get("Mat 2 (Zn 2)").order == 16
    with pytest.raises(ParseError):
        build_catalog(["Zn 0"])
    with pytest.raises(SizeCapExceeded):
        build_catalog(["Mat 2 (Zn 3)"], cap=50)


def test_build_catalog_rejects_broken_ring(monkeypatch):
    import gxclean.verifier as ver
    from gxclean.ring import AxiomCheck, AxiomReport

    monkeypatch.setattr(ver, "verify_axioms",
                        lambda R: AxiomReport([AxiomCheck("mul_associative", False, (1, 2, 3))]))
    with pytest.raises(AxiomFailure):
        ver.build_catalog(["Zn 4"])


@pytest.mark.parametrize("theorem_id", list(SUITES))
def test_every_suite_passes(reports, theorem_id):
    report = reports[theorem_id]
    assert report.rows, theorem_id
    assert report.passed, report.to_table()


def test_every_suite_covers_the_catalog(reports, catalog):
    names = set(catalog.names)
    for tid in ("T2.4.1", "C2.5", "P3.1", "T3.6", "T4.1", "P4.5", "P4.7", "P4.8"):
        assert {row.ring for row in reports[tid].rows} >= names, tid


def test_t241_boolean_square_row(reports, catalog):
    R = catalog.get("Prod(Zn 2,Zn 2)")
    c = R.labels.index("(1,0)")
    rows = [r for r in reports["T2.4.1"].rows
            if r.ring == R.spec and r.params.get("a") == R.one and r.params.get("b") == c]
    assert len(rows) == 1
    d = rows[0].details
    assert d["gx_clean"] is False
    assert d["strongly_clean"] is True and d["b_minus_a_unit"] is False


def test_t41_rows(reports):
    by_ring = {}
    for row in reports["T4.1"].rows:
        by_ring.setdefault(row.ring, []).append(row.details)
    assert len(by_ring["Zn 2"]) == 2
    for d in by_ring["Zn 2"]:
        assert not any(d.values())
    for name in ("Zn 3", "Zn 5", "Zn 7", "Zn 9"):
        for d in by_ring[name]:
            assert all(d.values()), (name, d)


def test_theorem41_conditions_direct(catalog):
    for name in ("Zn 2", "Zn 3", "Zn 9"):
        R = catalog.get(name)
        for n in (1, 2):
            values = set(theorem41_conditions(R, n).values())
            assert values == ({False} if name == "Zn 2" else {True})


def test_examples_rows(reports):
    rows = {(r.ring, r.params.get("g"), r.params.get("r")): r for r in reports["EX"].rows}
    z7 = rows[("GR (Zn 7) C3", "x^6-1", None)]
    assert z7.ok and z7.details["holds"] is True
    f2 = rows[("Prod(Zn 2,Zn 2)", "(x+1)(x+c)", None)]
    assert f2.ok and f2.details["holds"] is False and f2.details["failing_element"] == 2
    assert revalidate_counterexample(f2.counterexample)
    assert rows[("Z", "x^2+x", 2)].details["holds"] is False
    assert rows[("Z", "x^2-x", 2)].details["holds"] is True


def test_counterexample_revalidation(catalog):
    R = catalog.get("Zn 2")
    g = int_poly(R, [-1, 0, 1])
    v = ring_check(R, g)
    payload = counterexample(R, v.failing_element, g, "rhs")
    assert json.loads(json.dumps(payload)) == payload
    assert revalidate_counterexample(payload)
    assert not revalidate_counterexample(dict(payload, element=0))


def test_pair_sampling_is_seeded(catalog):
    R = catalog.get("GR (Zn 7) C3")
    a = _pairs("GR (Zn 7) C3", R, SuiteContext(seed=0))
    b = _pairs("GR (Zn 7) C3", R, SuiteContext(seed=0))
    c = _pairs("GR (Zn 7) C3", R, SuiteContext(seed=1))
    assert a == b and len(a) == 24 and a != c
    small = catalog.get("Mat 2 (Zn 3)")
    assert len(_pairs("Mat 2 (Zn 3)", small, SuiteContext())) == len(small.center) ** 2


def test_json_has_no_timing_by_default(reports):
    d = json.loads(reports["C2.5"].to_json())
    assert "elapsed_seconds" not in d
    assert "elapsed_seconds" in json.loads(reports["C2.5"].to_json(include_timing=True))


def test_same_seed_same_bytes(catalog):
    a = [r.to_json() for r in run_all(catalog, seed=3)]
    b = [r.to_json() for r in run_all(catalog, seed=3)]
    assert a == b


def test_parallel_matches_sequential(catalog):
    for tid in ("T2.4.1", "P4.8"):
        seq = run_suite(catalog, tid, seed=0, workers=1)
        par = run_suite(catalog, tid, seed=0, workers=2)
        assert seq.to_json() == par.to_json()


def test_unknown_theorem(catalog):
    with pytest.raises(UnknownTheorem):
        run_suite(catalog, "T9.9")


def test_table_rendering(reports):
    text = reports["C2.5"].to_table()
    assert "C2.5" in text and "overall: PASS" in text
    assert "Zn 2" in text


def test_hunt_on_default_catalog(catalog):
    report = hunt_odd_asymmetry(catalog, 1)
    assert len(report.comparisons) == len(catalog)
    found = {f["ring"] for f in report.findings}
    assert "Zn 3" in found and "Zn 2" not in found
    for comparison in report.comparisons:
        assert revalidate_comparison(comparison, 1, catalog.get(comparison["ring"]))


def test_hunt_small_catalogs():
    z2 = hunt_odd_asymmetry(build_catalog(["Zn 2"]), 1)
    assert not z2.findings and z2.summary == "no asymmetric instance in catalog"
    assert z2.comparisons[0]["minus_holds"] == z2.comparisons[0]["plus_holds"]
    z3 = hunt_odd_asymmetry(build_catalog(["Zn 3"]), 1)
    (f,) = z3.findings
    # every element of Z3 is a root of x^3 - x; x^3 + x only vanishes at 0
    assert f["minus_holds"] is True and f["plus_holds"] is False and f["plus_failing"] == 0
    assert revalidate_comparison(f, 1)


def test_hunt_revalidation_detects_tampering():
    report = hunt_odd_asymmetry(build_catalog(["Zn 3"]), 1)
    bad = dict(report.comparisons[0], plus_holds=True)
    assert not revalidate_comparison(bad, 1)
    forged = json.loads(json.dumps(report.comparisons[0]))
    forged["minus_witnesses"][0]["u"] = 0
    assert not revalidate_comparison(forged, 1)


def test_hunt_json_round_trips(catalog):
    report = hunt_odd_asymmetry(build_catalog(["Zn 3", "Zn 5"]), 2)
    d = json.loads(report.to_json())
    assert d["n"] == 2 and d["degree"] == 5
    for c in d["comparisons"]:
        assert revalidate_comparison(c, 2)
