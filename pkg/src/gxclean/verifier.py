"""Theorem suites over a catalog of constructed rings, and the odd-degree hunt.

Each suite runs independently per catalog entry and yields rows; a report
passes when no row fails. One-directional statements are checked only in
the stated direction.
"""

from __future__ import annotations

import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .decompose import (
    certified_elements,
    clean_check,
    gx_witness,
    integers_gx_check,
    is_valid,
    lemma46_conditions,
    p47_disjunction,
    ring_check,
    u_n_set,
    unit_plus_root_check,
    witness_from_dict,
    witness_to_dict,
)
from .errors import AxiomFailure, UnknownTheorem
from .parsing import parse_ring_spec
from .poly import induced_poly, int_poly, make_poly, monic_quadratic, poly_mul
from .ring import (
    FiniteRing,
    canonical_epi,
    canonical_int,
    ideal_closure,
    make_corner,
    make_product,
    make_triangular,
    make_trunc_power_series,
    verify_axioms,
)
from .transforms import odd_even_poly, p45_lift, p48_negate, pushforward, t24_forward

DEFAULT_SPECS = (
    "Zn 2", "Zn 3", "Zn 4", "Zn 5", "Zn 6", "Zn 7", "Zn 8", "Zn 9",
    "Prod(Zn 2,Zn 2)", "Prod(Zn 2,Zn 2,Zn 2)", "Prod(Zn 2,Zn 3)",
    "Mat 2 (Zn 2)", "Mat 2 (Zn 3)",
    "Tri 2 (Zn 2)", "Tri 2 (Zn 3)", "Tri 2 (Zn 4)",
    "GR (Zn 2) C2", "GR (Zn 2) C3", "GR (Zn 7) C3",
    "TPS (Zn 2) 2", "TPS (Zn 4) 2",
)

# fixed probe families
PROBES = {
    "x^2-x": [0, -1, 1],
    "x^2+x": [0, 1, 1],
    "x^2-1": [-1, 0, 1],
    "x^3-x": [0, -1, 0, 1],
    "x^4-x": [0, -1, 0, 0, 1],
}
PRODUCT_PROBES = ("x^2-x", "x^2+x", "x^2-1", "x^3-x")
MULTIPLIERS = {"1": [1], "x": [0, 1], "x+1": [1, 1], "x^2": [0, 0, 1]}

FULL_PAIR_ORDER = 64
FULL_PAIR_CENTER = 16
PAIR_SAMPLE = 24
DERIVED_ORDER_CAP = 512
PRODUCT_PARTNERS = ("Zn 2", "Zn 3", "Zn 4")


@dataclass
class Catalog:
    entries: list[tuple[str, FiniteRing]]

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    @property
    def names(self):
        return [name for name, _ in self.entries]

    def get(self, name):
        for n, R in self.entries:
            if n == name:
                return R
        raise KeyError(name)


def build_catalog(specs: Sequence[str], cap: int | None = None) -> Catalog:
    entries = []
    for spec in specs:
        R = parse_ring_spec(spec, cap=cap)
        report = verify_axioms(R)
        if not report.ok:
            bad = report.failures()[0]
            raise AxiomFailure(f"{spec}: {bad.name} fails at {bad.witness}")
        entries.append((spec, R))
    return Catalog(entries)


_default = None


def default_catalog() -> Catalog:
    global _default
    if _default is None:
        _default = build_catalog(DEFAULT_SPECS)
    return _default


# ------------------------------------------------------------- reports

@dataclass
class SuiteRow:
    ring: str
    params: dict
    ok: bool
    details: dict = field(default_factory=dict)
    counterexample: dict | None = None

    def to_dict(self):
        d = {"ring": self.ring, "params": self.params, "ok": self.ok, "details": self.details}
        if self.counterexample is not None:
            d["counterexample"] = self.counterexample
        return d


@dataclass
class TheoremReport:
    theorem_id: str
    statement: str
    rows: list[SuiteRow]
    elapsed: float = 0.0

    @property
    def passed(self):
        return all(row.ok for row in self.rows)

    @property
    def failures(self):
        return [row for row in self.rows if not row.ok]

    def to_dict(self, include_timing=False):
        d = {
            "theorem_id": self.theorem_id,
            "statement": self.statement,
            "passed": self.passed,
            "rows": [row.to_dict() for row in self.rows],
        }
        if include_timing:
            d["elapsed_seconds"] = round(self.elapsed, 3)
        return d

    def to_json(self, include_timing=False):
        return json.dumps(self.to_dict(include_timing), sort_keys=True, indent=1)

    def to_table(self):
        lines = [f"{self.theorem_id}: {self.statement}"]
        per_ring: dict[str, list[SuiteRow]] = {}
        for row in self.rows:
            per_ring.setdefault(row.ring, []).append(row)
        width = max((len(name) for name in per_ring), default=4)
        for name, rows in per_ring.items():
            bad = sum(not r.ok for r in rows)
            status = "PASS" if not bad else "FAIL"
            lines.append(f"  {name:<{width}}  {len(rows):>5} cells  {status}" + (f" ({bad} failing)" if bad else ""))
            for r in rows:
                if not r.ok:
                    lines.append(f"      {r.params} {r.counterexample or r.details}")
        lines.append(f"  overall: {'PASS' if self.passed else 'FAIL'}  ({self.elapsed:.2f}s)")
        return "\n".join(lines)


def counterexample(R: FiniteRing, element, poly, side: str) -> dict:
    """Payload naming an element that has no decomposition against ``poly``."""
    return {"ring_spec": R.spec, "element": element,
            "poly": list(poly.coeffs) if poly is not None else None, "side": side}


def revalidate_counterexample(payload: dict, ring: FiniteRing | None = None) -> bool:
    """Re-run the search in isolation; True when the element still has no witness."""
    R = ring if ring is not None else parse_ring_spec(payload["ring_spec"])
    poly = make_poly(R, payload["poly"])
    return gx_witness(R, payload["element"], poly) is None


# --------------------------------------------------------------- helpers

@dataclass(frozen=True)
class SuiteContext:
    seed: int = 0
    pair_sample: int = PAIR_SAMPLE


def _pairs(name, R, ctx, left=None, right=None):
    """All ordered (a, b) over ``left`` x ``right`` for small rings, else a seeded sample."""
    left = list(R.center if left is None else left)
    right = list(R.center if right is None else right)
    cells = [(a, b) for a in left for b in right]
    if R.order <= FULL_PAIR_ORDER or len(R.center) <= FULL_PAIR_CENTER or len(cells) <= ctx.pair_sample:
        return cells
    rng = random.Random(f"{ctx.seed}:{name}")
    return sorted(rng.sample(cells, ctx.pair_sample))


def _failing(v):
    return None if v.holds else v.failing_element


def _probe(R, key):
    return int_poly(R, PROBES[key])


def _unit_with_2(R):
    return R.is_unit(canonical_int(R, 2))


def _epis(name, R):
    """Canonical surjections out of R used by the homomorphism suites."""
    maps = []
    gens = range(R.order) if R.order <= FULL_PAIR_ORDER else range(min(R.order, 16))
    seen = set()
    for g in gens:
        ideal = ideal_closure(R, [g])
        if ideal in seen:
            continue
        seen.add(ideal)
        maps.append((f"quotient({g})", canonical_epi("quotient", R, [g])))
    kind = R.construction.get("kind")
    if kind == "product":
        for i in range(len(R.construction["factors"])):
            maps.append((f"product_projection({i})", canonical_epi("product_projection", R, i)))
    elif kind == "triangular":
        maps.append(("triangular_corner", canonical_epi("triangular_corner", R)))
    elif kind == "tps":
        maps.append(("series_augmentation", canonical_epi("series_augmentation", R)))
    return maps


# ---------------------------------------------------------------- suites

def suite_t241(name, R, ctx):
    clean = clean_check(R).holds
    rows = []
    for a, b in _pairs(name, R, ctx):
        g = monic_quadratic(R, a, b)
        v = ring_check(R, g)
        unit = R.is_unit(R.sub(b, a))
        rhs = clean and unit
        row = SuiteRow(name, {"a": a, "b": b}, v.holds == rhs,
                       {"gx_clean": v.holds, "strongly_clean": clean, "b_minus_a_unit": unit,
                        "failing_element": _failing(v)})
        if not row.ok and not v.holds:
            row.counterexample = counterexample(R, v.failing_element, g, "left")
        elif not row.ok:
            row.counterexample = {"ring_spec": R.spec, "side": "right", "a": a, "b": b}
        rows.append(row)
    return rows


def suite_t242(name, R, ctx):
    if not clean_check(R).holds:
        return [SuiteRow(name, {}, True, {"vacuous": "not strongly clean"})]
    rows = []
    for a, b in _pairs(name, R, ctx):
        if not R.is_unit(R.sub(b, a)):
            continue
        q = monic_quadratic(R, a, b)
        for label, h in MULTIPLIERS.items():
            g = poly_mul(q, int_poly(R, h))
            v = ring_check(R, g)
            row = SuiteRow(name, {"a": a, "b": b, "h": label}, v.holds, {"gx_clean": v.holds})
            if not v.holds:
                row.counterexample = counterexample(R, v.failing_element, g, "conclusion")
            rows.append(row)
    return rows or [SuiteRow(name, {}, True, {"vacuous": "no central pair with b - a a unit"})]


def suite_c25(name, R, ctx):
    clean = clean_check(R, want_witnesses=True)
    g = _probe(R, "x^2+x")
    v = ring_check(R, g)
    transform_ok = True
    if clean.holds:
        # a = 0, b = -1: each clean witness of -r gives an (x^2+x) witness of r
        a, b = R.zero, R.neg(R.one)
        for r in R.elements:
            x = R.mul(R.sub(r, a), R.inv(R.sub(b, a)))
            out = t24_forward(R, a, b, r, clean.witness_map[x])
            transform_ok &= is_valid(out) and out.poly == g
    row = SuiteRow(name, {}, clean.holds == v.holds and transform_ok,
                   {"strongly_clean": clean.holds, "x2_plus_x_clean": v.holds,
                    "transform_ok": transform_ok,
                    "failing_element": _failing(v)})
    if clean.holds != v.holds:
        side = "x^2+x" if not v.holds else "clean"
        poly = g if not v.holds else _probe(R, "x^2-x")
        elem = v.failing_element if not v.holds else clean.failing_element
        row.counterexample = counterexample(R, elem, poly, side)
    return [row]


def _epi_rows(name, R, maps, probes, suite_tag):
    rows = []
    for label, m in maps:
        for key in probes:
            g = _probe(R, key)
            dom = ring_check(R, g, want_witnesses=True)
            g2 = induced_poly(m, g)
            cod = ring_check(m.codomain, g2)
            pushed_ok = True
            if dom.holds:
                for w in dom.witness_map.values():
                    if not is_valid(pushforward(m, w)):
                        pushed_ok = False
            ok = (not dom.holds or cod.holds) and pushed_ok
            row = SuiteRow(name, {"map": label, "g": key, "codomain_order": m.codomain.order}, ok,
                           {"domain_holds": dom.holds, "codomain_holds": cod.holds,
                            "pushforward_ok": pushed_ok, "suite": suite_tag})
            if dom.holds and not cod.holds:
                row.counterexample = counterexample(m.codomain, cod.failing_element, g2, "codomain")
            rows.append(row)
    return rows


def suite_p31(name, R, ctx):
    return _epi_rows(name, R, _epis(name, R), tuple(PROBES), "P3.1")


def _implication_rows(name, big, small, label, probes):
    rows = []
    for key in probes:
        bv = ring_check(big, _probe(big, key))
        sv = ring_check(small, _probe(small, key))
        direction = "direct" if bv.holds else ("contrapositive" if not sv.holds else "vacuous")
        row = SuiteRow(name, {"extension": label, "g": key}, (not bv.holds) or sv.holds,
                       {"extension_holds": bv.holds, "base_holds": sv.holds, "direction": direction})
        if bv.holds and not sv.holds:
            row.counterexample = counterexample(small, sv.failing_element, _probe(small, key), "base")
        rows.append(row)
    return rows


def suite_c33(name, R, ctx):
    rows = []
    for n in (2, 3):
        if R.order ** (n * (n + 1) // 2) > DERIVED_ORDER_CAP:
            continue
        T = make_triangular(R, n)
        rows.extend(_implication_rows(name, T, R, f"Tri {n}", tuple(PROBES)))
    if R.construction.get("kind") == "triangular":
        rows.extend(_epi_rows(name, R, [("triangular_corner", canonical_epi("triangular_corner", R))],
                              tuple(PROBES), "C3.3"))
    return rows or [SuiteRow(name, {}, True, {"vacuous": "no triangular extension within cap"})]


def suite_c34(name, R, ctx):
    rows = []
    for k in (2, 3):
        if R.order ** k > DERIVED_ORDER_CAP:
            continue
        T = make_trunc_power_series(R, k)
        rows.extend(_implication_rows(name, T, R, f"TPS {k}", tuple(PROBES)))
    if R.construction.get("kind") == "tps":
        rows.extend(_epi_rows(name, R, [("series_augmentation", canonical_epi("series_augmentation", R))],
                              tuple(PROBES), "C3.4"))
    return rows or [SuiteRow(name, {}, True, {"vacuous": "no truncated series extension within cap"})]


def _product_rows(name, P, factors, label):
    rows = []
    for key in PRODUCT_PROBES:
        pv = ring_check(P, _probe(P, key))
        fv = [ring_check(F, _probe(F, key)).holds for F in factors]
        row = SuiteRow(name, {"product": label, "g": key}, pv.holds == all(fv),
                       {"product_holds": pv.holds, "factor_holds": fv})
        if not row.ok:
            row.counterexample = (counterexample(P, pv.failing_element, _probe(P, key), "product")
                                  if not pv.holds else {"ring_spec": P.spec, "side": "factors"})
        rows.append(row)
    return rows


def suite_p35(name, R, ctx):
    rows = []
    if R.construction.get("kind") == "product":
        rows.extend(_product_rows(name, R, R.construction["factors"], "self"))
    for spec in PRODUCT_PARTNERS:
        S = parse_ring_spec(spec)
        if R.order * S.order > DERIVED_ORDER_CAP:
            continue
        rows.extend(_product_rows(name, make_product([R, S]), [R, S], f"x {spec}"))
    return rows or [SuiteRow(name, {}, True, {"vacuous": "no product within cap"})]


def suite_t36(name, R, ctx):
    rows = []
    corners = {}
    for a, b in _pairs(name, R, ctx):
        if not ring_check(R, monic_quadratic(R, a, b)).holds:
            continue
        failures = []
        for e in R.idempotents:
            if e not in corners:
                corners[e] = make_corner(R, e)
            C = corners[e]
            pos = C.construction["position"]
            ea, eb = int(pos[R.mul(e, a)]), int(pos[R.mul(e, b)])
            v = ring_check(C, monic_quadratic(C, ea, eb))
            if not v.holds:
                failures.append({"e": e, "ea": ea, "eb": eb, "failing_element": v.failing_element})
        row = SuiteRow(name, {"a": a, "b": b}, not failures,
                       {"idempotents": len(R.idempotents), "failures": failures})
        if failures:
            f = failures[0]
            C = corners[f["e"]]
            row.counterexample = counterexample(C, f["failing_element"],
                                                monic_quadratic(C, f["ea"], f["eb"]), f"corner e={f['e']}")
        rows.append(row)
    return rows or [SuiteRow(name, {}, True, {"vacuous": "no central pair satisfies the hypothesis"})]


def theorem41_conditions(R: FiniteRing, n: int) -> dict[str, bool]:
    c1 = ring_check(R, int_poly(R, [0, -(2 ** n), 1])).holds
    c2 = ring_check(R, int_poly(R, [-1, 0, 1])).holds
    c3 = clean_check(R).holds and _unit_with_2(R)
    c4 = len(u_n_set(R, 2)) == R.order and unit_plus_root_check(R, 2).holds
    return {"x^2-2^n x": c1, "x^2-1": c2, "clean_and_2_unit": c3, "U2_and_unit_plus_root": c4}


def suite_t41(name, R, ctx):
    rows = []
    for n in (1, 2):
        conds = theorem41_conditions(R, n)
        ok = len(set(conds.values())) == 1
        rows.append(SuiteRow(name, {"n": n}, ok, conds))
    return rows


def suite_p45(name, R, ctx):
    rows = []
    everything = R.order
    central_units = [d for d in R.center if R.is_unit(d)]
    for c, d in _pairs(name, R, ctx, R.center, central_units):
        g = make_poly(R, [d, c, R.one])
        if not ring_check(R, g).holds:
            continue
        u2 = len(u_n_set(R, 2)) == everything
        rows.append(SuiteRow(name, {"c": c, "d": d}, u2, {"U2_is_R": u2}))
    g = int_poly(R, [1, 1, 1])
    v = ring_check(R, g, want_witnesses=True)
    if v.holds:
        lifted_ok = True
        for w in v.witness_map.values():
            quartic, cubic = p45_lift(w)
            lifted_ok &= is_valid(quartic) and is_valid(cubic)
        quartic_holds = ring_check(R, _probe(R, "x^4-x")).holds
        u2 = len(u_n_set(R, 2)) == everything
        rows.append(SuiteRow(name, {"g": "x^2+x+1"}, lifted_ok and quartic_holds and u2,
                             {"lift_ok": lifted_ok, "x^4-x": quartic_holds, "U2_is_R": u2}))
    return rows or [SuiteRow(name, {}, True, {"vacuous": "no x^2+cx+d hypothesis holds"})]


def suite_l46(name, R, ctx):
    rows = []
    for n in (1, 2, 3):
        discrepancies = []
        for a in R.elements:
            c = lemma46_conditions(R, a, n)
            if len(set(c)) != 1:
                discrepancies.append({"a": a, "conditions": list(c)})
        rows.append(SuiteRow(name, {"n": n}, not discrepancies,
                             {"elements": R.order, "discrepancies": discrepancies}))
    return rows


def suite_p47(name, R, ctx):
    rows = []
    for n in (2, 3, 4):
        g = int_poly(R, [0, -1] + [0] * (n - 2) + [1])
        if not ring_check(R, g).holds:
            rows.append(SuiteRow(name, {"n": n}, True, {"vacuous": f"not strongly (x^{n}-x)-clean"}))
            continue
        counts = {"branch_i": 0, "branch_ii": 0, "both": 0, "strict_reading_failures": 0}
        failures = []
        for a in R.elements:
            res = p47_disjunction(R, a, n)
            counts["branch_i"] += res.branch_i
            counts["branch_ii"] += res.branch_ii
            counts["both"] += res.branch_i and res.branch_ii
            counts["strict_reading_failures"] += not (res.branch_i or res.proper_branch_ii)
            if not res.holds:
                failures.append(a)
        rows.append(SuiteRow(name, {"n": n}, not failures, {**counts, "failures": failures}))
    return rows


def _small_central(R):
    if len(R.center) <= 4:
        return list(R.center)
    picks = {canonical_int(R, m) for m in (0, 1, 2, 3, -1)}
    picks.update(R.center[:4])
    return sorted(picks)


def suite_p48(name, R, ctx):
    rows = []
    choices = _small_central(R)
    for n in (1, 2):
        for a in choices:
            for b in choices:
                minus = odd_even_poly(R, a, b, n)
                plus = odd_even_poly(R, a, R.neg(b), n)
                vm = ring_check(R, minus, want_witnesses=True)
                vp = ring_check(R, plus, want_witnesses=True)
                cm, cp = set(certified_elements(R, minus)), set(certified_elements(R, plus))
                negated = {R.neg(x) for x in cm}
                forward_ok = all(is_valid(p48_negate(w, a, b, n)) and R.neg(w.r) in cp
                                 for w in vm.witness_map.values())
                backward_ok = all(is_valid(p48_negate(w, a, R.neg(b), n)) and R.neg(w.r) in cm
                                  for w in vp.witness_map.values())
                ok = vm.holds == vp.holds and negated == cp and len(cm) == len(cp) and forward_ok and backward_ok
                row = SuiteRow(name, {"n": n, "a": a, "b": b}, ok,
                               {"minus_holds": vm.holds, "plus_holds": vp.holds,
                                "certified": len(cm), "bijection_ok": negated == cp,
                                "negation_ok": forward_ok and backward_ok})
                if vm.holds != vp.holds:
                    bad = vp if not vp.holds else vm
                    row.counterexample = counterexample(R, bad.failing_element, bad.poly,
                                                        "plus" if bad is vp else "minus")
                rows.append(row)
    return rows


def suite_examples(name, R, ctx):
    rows = []
    if R.spec == "GR (Zn 7) C3":
        v = ring_check(R, int_poly(R, [-1, 0, 0, 0, 0, 0, 1]))
        rows.append(SuiteRow(name, {"g": "x^6-1", "expect": True}, v.holds,
                             {"holds": v.holds, "failing_element": _failing(v)}))
    if R.spec == "Prod(Zn 2,Zn 2)":
        c = R.labels.index("(1,0)")
        g = poly_mul(int_poly(R, [1, 1]), make_poly(R, [c, R.one]))
        v = ring_check(R, g)
        row = SuiteRow(name, {"g": "(x+1)(x+c)", "c": c, "expect": False},
                       (not v.holds) and v.failing_element == c,
                       {"holds": v.holds, "failing_element": _failing(v)})
        if not v.holds:
            row.counterexample = counterexample(R, v.failing_element, g, "example")
        rows.append(row)
    return rows


def integer_rows(ctx):
    rows = []
    for r, coeffs, label, expect in ((2, [0, 1, 1], "x^2+x", False), (2, [0, -1, 1], "x^2-x", True)):
        d = integers_gx_check(r, coeffs)
        rows.append(SuiteRow("Z", {"r": r, "g": label, "expect": expect}, d.holds == expect,
                             {"holds": d.holds, "s": d.s, "u": d.u}))
    return rows


SUITES: dict[str, tuple[str, Callable]] = {
    "T2.4.1": ("strongly (x-a)(x-b)-clean iff strongly clean and b-a a unit", suite_t241),
    "T2.4.2": ("strongly clean with b-a a unit implies strongly (x-a)(x-b)h-clean", suite_t242),
    "C2.5": ("strongly clean iff strongly (x^2+x)-clean", suite_c25),
    "P3.1": ("surjections carry strong g-cleanness to the induced polynomial", suite_p31),
    "C3.3": ("T_n(R) strongly g-clean implies R strongly g-clean", suite_c33),
    "C3.4": ("R[t]/(t^k) strongly g-clean implies R strongly g-clean", suite_c34),
    "P3.5": ("a product is strongly g-clean iff every factor is", suite_p35),
    "T3.6": ("strongly (x-a)(x-b)-clean R gives strongly (x-ea)(x-eb)-clean eRe", suite_t36),
    "T4.1": ("x^2-2^n x, x^2-1, clean with 2 a unit, unit plus square root of 1: all agree", suite_t41),
    "P4.5": ("strongly (x^2+cx+d)-clean with d a unit implies R = U_2(R)", suite_p45),
    "L4.6": ("a = a(ua)^n, a = ve, a = fw agree", suite_l46),
    "P4.7": ("in a strongly (x^n-x)-clean ring each a is a unit plus a root of 1, or aR, Ra hold idempotents", suite_p47),
    "P4.8": ("strongly (ax^2n - bx)-clean iff strongly (ax^2n + bx)-clean", suite_p48),
    "EX": ("anchored example instances", suite_examples),
}
SUITE_EXTRAS = {"EX": integer_rows}


def _run_cell(args):
    theorem_id, name, R, ctx = args
    return SUITES[theorem_id][1](name, R, ctx)


def run_suite(cat: Catalog, theorem_id: str, seed: int = 0, workers: int = 1) -> TheoremReport:
    if theorem_id not in SUITES:
        raise UnknownTheorem(f"unknown theorem id {theorem_id!r}; known: {', '.join(SUITES)}")
    statement, _ = SUITES[theorem_id]
    ctx = SuiteContext(seed=seed)
    start = time.perf_counter()
    cells = [(theorem_id, name, R, ctx) for name, R in cat]
    if workers > 1 and len(cells) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            per_ring = list(pool.map(_run_cell, cells))
    else:
        per_ring = [_run_cell(c) for c in cells]
    rows = [row for chunk in per_ring for row in chunk]
    if theorem_id in SUITE_EXTRAS:
        rows.extend(SUITE_EXTRAS[theorem_id](ctx))
    return TheoremReport(theorem_id, statement, rows, time.perf_counter() - start)


def run_all(cat: Catalog, seed: int = 0, workers: int = 1) -> list[TheoremReport]:
    return [run_suite(cat, tid, seed=seed, workers=workers) for tid in SUITES]


# ------------------------------------------------------------------ hunt

@dataclass
class HuntReport:
    n: int
    comparisons: list[dict]
    elapsed: float = 0.0

    @property
    def findings(self):
        return [c for c in self.comparisons if c["minus_holds"] != c["plus_holds"]]

    @property
    def summary(self):
        if not self.findings:
            return "no asymmetric instance in catalog"
        return f"{len(self.findings)} asymmetric instance(s): " + ", ".join(f["ring"] for f in self.findings)

    def to_dict(self, include_timing=False):
        d = {"n": self.n, "degree": 2 * self.n + 1, "summary": self.summary,
             "findings": self.findings, "comparisons": self.comparisons}
        if include_timing:
            d["elapsed_seconds"] = round(self.elapsed, 3)
        return d

    def to_json(self, include_timing=False):
        return json.dumps(self.to_dict(include_timing), sort_keys=True, indent=1)

    def to_table(self):
        lines = [f"x^{2 * self.n + 1} - x  vs  x^{2 * self.n + 1} + x"]
        for c in self.comparisons:
            mark = "DIFFER" if c["minus_holds"] != c["plus_holds"] else "same"
            lines.append(f"  {c['ring']:<24} minus={c['minus_holds']!s:<5} plus={c['plus_holds']!s:<5} {mark}")
        lines.append(f"  {self.summary}  ({self.elapsed:.2f}s)")
        return "\n".join(lines)


def odd_pair(R: FiniteRing, n: int):
    deg = 2 * n + 1
    minus = int_poly(R, [0, -1] + [0] * (deg - 2) + [1])
    plus = int_poly(R, [0, 1] + [0] * (deg - 2) + [1])
    return minus, plus


def _compare_odd(R, name, n):
    minus, plus = odd_pair(R, n)
    out = {"ring": name, "order": R.order}
    for tag, g in (("minus", minus), ("plus", plus)):
        v = ring_check(R, g, want_witnesses=True)
        out[f"{tag}_holds"] = v.holds
        out[f"{tag}_failing"] = v.failing_element
        out[f"{tag}_certified"] = len(v.witness_map)
        if v.holds != (len(v.witness_map) == R.order):
            raise AssertionError("witness map disagrees with verdict")
        if not all(is_valid(w) for w in v.witness_map.values()):
            raise AssertionError("invalid witness in hunt")
        if R.order != len(v.witness_map) or R.order <= 16:
            out[f"{tag}_witnesses"] = [witness_to_dict(v.witness_map[r]) for r in sorted(v.witness_map)]
    return out


def hunt_odd_asymmetry(cat: Catalog, n: int = 1) -> HuntReport:
    """Compare strong (x^(2n+1) - x)- and (x^(2n+1) + x)-cleanness on every entry.

    Reports the rings where the verdicts differ; reports nothing else.
    """
    start = time.perf_counter()
    comparisons = [_compare_odd(R, name, n) for name, R in cat]
    return HuntReport(n, comparisons, time.perf_counter() - start)


def revalidate_comparison(comparison: dict, n: int, ring: FiniteRing | None = None) -> bool:
    """Recompute one hunt row from scratch and check it matches the report."""
    R = ring if ring is not None else parse_ring_spec(comparison["ring"])
    fresh = _compare_odd(R, comparison["ring"], n)
    keys = ("minus_holds", "plus_holds", "minus_failing", "plus_failing", "minus_certified", "plus_certified")
    if any(fresh[k] != comparison[k] for k in keys):
        return False
    minus, plus = odd_pair(R, n)
    for tag, g in (("minus", minus), ("plus", plus)):
        for d in comparison.get(f"{tag}_witnesses", []):
            if d["poly"] != list(g.coeffs) or not is_valid(witness_from_dict(d, R)):
                return False
        if comparison[f"{tag}_failing"] is not None and gx_witness(R, comparison[f"{tag}_failing"], g) is not None:
            return False
    return True
