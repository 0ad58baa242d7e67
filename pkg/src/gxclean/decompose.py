"""Exhaustive search for root-plus-unit decompositions.

All searches scan candidates in ascending element index and return the
first hit, so witnesses are reproducible.
"""

from __future__ import annotations

import json
import math
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

import numpy as np

from .errors import InvalidConstruction, PreconditionFailed, ZeroPolynomial
from .poly import CentralPolynomial, evaluate, evaluate_all, int_poly, make_poly
from .ring import FiniteRing

GX_CLEAN = "gx_clean"
CLEAN = "clean"
UNIT_PLUS_ROOT = "unit_plus_root"


@dataclass(frozen=True)
class Witness:
    """Certificate that ``r = s + u`` with ``u`` a unit commuting with ``s``.

    For ``gx_clean`` the root condition is ``poly(s) = 0``; for ``clean`` it
    is ``s*s = s``; for ``unit_plus_root`` it is ``s**k = 1`` (``s`` then
    plays the root of unity ``v``).
    """

    ring: FiniteRing = field(repr=False, compare=False)
    r: int
    s: int
    u: int
    poly: CentralPolynomial = field(repr=False)
    kind: str = GX_CLEAN
    k: int | None = None

    def pair(self):
        return (self.s, self.u)


def check_witness(w: Witness) -> dict[str, bool]:
    """Validate a witness straight from the tables, without cached sets."""
    R = w.ring
    n = R.order
    in_range = all(0 <= x < n for x in (w.r, w.s, w.u))
    if not in_range:
        return {"sum_ok": False, "root_ok": False, "unit_ok": False, "commute_ok": False}
    M = R.mul_table
    sum_ok = int(R.add_table[w.s, w.u]) == w.r
    unit_ok = bool(((M[w.u, :] == R.one) & (M[:, w.u] == R.one)).any())
    commute_ok = M[w.s, w.u] == M[w.u, w.s]
    if w.kind == CLEAN:
        root_ok = M[w.s, w.s] == w.s
    elif w.kind == UNIT_PLUS_ROOT:
        acc = R.one
        for _ in range(w.k):
            acc = M[acc, w.s]
        root_ok = acc == R.one
    else:
        root_ok = evaluate(w.poly, w.s) == R.zero
    return {"sum_ok": bool(sum_ok), "root_ok": bool(root_ok),
            "unit_ok": bool(unit_ok), "commute_ok": bool(commute_ok)}


def is_valid(w: Witness) -> bool:
    return all(check_witness(w).values())


# Every witness handed back by a search or transform passes through
# _record so tests can audit the whole run.
_audits: list[list] = []


@contextmanager
def witness_audit():
    log: list[Witness] = []
    _audits.append(log)
    try:
        yield log
    finally:
        _audits.remove(log)


def _record(w):
    if w is not None:
        for log in _audits:
            log.append(w)
    return w


# ------------------------------------------------------------ searches

def _first_fit(R, r, candidates):
    cands = np.asarray(candidates, dtype=np.intp)
    if not len(cands):
        return None
    u = R.sub_table[r, cands]
    ok = R.unit_mask[u] & (R.mul_table[cands, u] == R.mul_table[u, cands])
    hit = np.flatnonzero(ok)
    if not len(hit):
        return None
    return int(cands[hit[0]]), int(u[hit[0]])


def _fit_matrix(R, candidates):
    """Boolean (order x len(candidates)) table: r - c is a unit commuting with c."""
    cands = np.asarray(candidates, dtype=np.intp)
    U = R.sub_table[:, cands]
    C = cands[None, :]
    ok = R.unit_mask[U] & (R.mul_table[C, U] == R.mul_table[U, C])
    return ok, U


def clean_poly(R: FiniteRing) -> CentralPolynomial:
    return int_poly(R, [0, -1, 1])


def gx_witness(R: FiniteRing, r: int, p: CentralPolynomial) -> Witness | None:
    hit = _first_fit(R, r, np.flatnonzero(evaluate_all(p) == R.zero))
    if hit is None:
        return None
    return _record(Witness(R, r, hit[0], hit[1], p))


def strongly_clean_witness(R: FiniteRing, r: int) -> Witness | None:
    hit = _first_fit(R, r, R.idempotents)
    if hit is None:
        return None
    return _record(Witness(R, r, hit[0], hit[1], clean_poly(R), kind=CLEAN))


def root_of_unity_candidates(R: FiniteRing, k: int):
    return np.flatnonzero(R.powers(k) == R.one)


def unit_plus_root_witness(R: FiniteRing, r: int, k: int) -> Witness | None:
    """First ``v`` with ``v**k = 1`` such that ``r - v`` is a commuting unit."""
    hit = _first_fit(R, r, root_of_unity_candidates(R, k))
    if hit is None:
        return None
    root_poly = make_poly(R, [R.neg(R.one)] + [R.zero] * (k - 1) + [R.one])
    return _record(Witness(R, r, hit[0], hit[1], root_poly, kind=UNIT_PLUS_ROOT, k=k))


@dataclass
class Verdict:
    ring: FiniteRing = field(repr=False)
    poly: CentralPolynomial | None = field(repr=False)
    holds: bool
    failing_element: int | None = None
    witness_map: dict[int, Witness] | None = None
    kind: str = GX_CLEAN


def _verdict(R, poly, candidates, want_witnesses, make):
    ok, U = _fit_matrix(R, candidates)
    has = ok.any(axis=1) if ok.shape[1] else np.zeros(R.order, dtype=bool)
    failing = np.flatnonzero(~has)
    v = Verdict(R, poly, holds=not len(failing),
                failing_element=int(failing[0]) if len(failing) else None)
    if want_witnesses:
        first = ok.argmax(axis=1) if ok.shape[1] else None
        cands = np.asarray(candidates, dtype=np.intp)
        v.witness_map = {
            r: _record(make(r, int(cands[first[r]]), int(U[r, first[r]])))
            for r in np.flatnonzero(has).tolist()
        }
    return v


def ring_check(R: FiniteRing, p: CentralPolynomial, want_witnesses: bool = False) -> Verdict:
    """Decide whether every element of R is strongly p-clean."""
    candidates = np.flatnonzero(evaluate_all(p) == R.zero)
    return _verdict(R, p, candidates, want_witnesses, lambda r, s, u: Witness(R, r, s, u, p))


def clean_check(R: FiniteRing, want_witnesses: bool = False) -> Verdict:
    """Strong cleanness through the idempotent scan."""
    P = clean_poly(R)
    v = _verdict(R, P, R.idempotents, want_witnesses,
                 lambda r, s, u: Witness(R, r, s, u, P, kind=CLEAN))
    v.kind = CLEAN
    return v


def unit_plus_root_check(R: FiniteRing, k: int) -> Verdict:
    v = _verdict(R, None, root_of_unity_candidates(R, k), False, None)
    v.kind = UNIT_PLUS_ROOT
    return v


def certified_elements(R: FiniteRing, p: CentralPolynomial) -> tuple[int, ...]:
    """Elements that are strongly p-clean."""
    ok, _ = _fit_matrix(R, np.flatnonzero(evaluate_all(p) == R.zero))
    if not ok.shape[1]:
        return ()
    return tuple(int(i) for i in np.flatnonzero(ok.any(axis=1)))


def u_n_set(R: FiniteRing, n: int) -> tuple[int, ...]:
    """Elements that are sums of at most ``n`` units (one or more)."""
    units = np.asarray(R.units, dtype=np.intp)
    level = units
    seen = set(units.tolist())
    for _ in range(n - 1):
        level = np.unique(R.add_table[np.ix_(level, units)])
        seen.update(level.tolist())
    return tuple(sorted(seen))


# ---------------------------------------------------- integers special case

class IntegerDecision(NamedTuple):
    holds: bool
    s: int | None = None
    u: int | None = None


def _int_eval(coeffs, x):
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _divisors(m):
    m = abs(m)
    out = set()
    for d in range(1, math.isqrt(m) + 1):
        if m % d == 0:
            out.update((d, m // d))
    return out


def integer_roots(int_coeffs: Sequence[int]) -> list[int]:
    """All integer roots of a nonzero integer polynomial, ascending."""
    coeffs = list(int_coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if not coeffs:
        raise ZeroPolynomial("integer root search needs a nonzero polynomial")
    shift = 0
    while coeffs[shift] == 0:
        shift += 1
    found = {0} if shift else set()
    cofactor = coeffs[shift:]
    for d in _divisors(cofactor[0]):
        for s in (d, -d):
            if _int_eval(cofactor, s) == 0:
                found.add(s)
    return sorted(found)


def integers_gx_check(r: int, int_coeffs: Sequence[int]) -> IntegerDecision:
    """Decide whether the integer ``r`` is strongly g-clean in Z.

    U(Z) = {1, -1} and Z is commutative, so ``r`` qualifies exactly when some
    integer root ``s`` of g has ``r - s`` equal to 1 or -1.
    """
    for s in integer_roots(int_coeffs):
        if r - s in (1, -1):
            return IntegerDecision(True, s, r - s)
    return IntegerDecision(False)


# --------------------------------------------------- unit-regular conditions

def _pow_vec(R, xs, k):
    acc = np.full(len(xs), R.one, dtype=np.intp)
    for _ in range(k):
        acc = R.mul_table[acc, xs]
    return acc


def lemma46_conditions(R: FiniteRing, a: int, n: int) -> tuple[bool, bool, bool]:
    """Three conditions on ``a``, each by exhaustive search:

    1. ``a = a (u a)**n`` for some unit ``u``;
    2. ``a = v e`` for a unit ``v`` and ``e**(n+1) = e``;
    3. ``a = f w`` for a unit ``w`` and ``f**(n+1) = f``.
    """
    U = np.asarray(R.units, dtype=np.intp)
    ua = R.mul_table[U, a]
    c1 = bool((R.mul_table[a, _pow_vec(R, ua, n)] == a).any())
    xs = np.arange(R.order)
    E = xs[R.mul_table[R.powers(n), xs] == xs]
    c2 = bool((R.mul_table[np.ix_(U, E)] == a).any())
    c3 = bool((R.mul_table[np.ix_(E, U)] == a).any())
    return c1, c2, c3


@dataclass
class DisjunctionResult:
    """Outcome of classifying one element; both branches may hold.

    ``left_idempotent``/``right_idempotent`` are the first nonzero
    idempotents in ``aR``/``Ra``; ``proper_branch_ii`` additionally asks for
    idempotents other than 1 in both.
    """

    element: int
    n: int
    unit_plus_root: Witness | None
    left_idempotent: int | None
    right_idempotent: int | None
    proper_branch_ii: bool = False

    @property
    def branch_i(self):
        return self.unit_plus_root is not None

    @property
    def branch_ii(self):
        return self.left_idempotent is not None and self.right_idempotent is not None

    @property
    def holds(self):
        return self.branch_i or self.branch_ii


def _idempotents_in(R, values, exclude):
    present = set(np.unique(values).tolist())
    return [e for e in R.idempotents if e in present and e not in exclude]


def p47_disjunction(R: FiniteRing, a: int, n: int) -> DisjunctionResult:
    """Classify ``a`` in a strongly (x^n - x)-clean ring.

    Branch (i): ``a = u + v`` with ``v**(n-1) = 1`` commuting with the unit
    ``u``. Branch (ii): both ``aR`` and ``Ra`` contain a nonzero idempotent.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    g = int_poly(R, [0, -1] + [0] * (n - 2) + [1])
    if not ring_check(R, g).holds:
        raise PreconditionFailed(f"ring is not strongly (x^{n} - x)-clean")
    left = _idempotents_in(R, R.mul_table[a, :], {R.zero})
    right = _idempotents_in(R, R.mul_table[:, a], {R.zero})
    return DisjunctionResult(
        element=a, n=n,
        unit_plus_root=unit_plus_root_witness(R, a, n - 1),
        left_idempotent=left[0] if left else None,
        right_idempotent=right[0] if right else None,
        proper_branch_ii=any(e != R.one for e in left) and any(e != R.one for e in right),
    )


# ------------------------------------------------------- serialization

def witness_to_dict(w: Witness) -> dict:
    d = {
        "ring_spec": w.ring.spec,
        "r": w.r, "s": w.s, "u": w.u,
        "poly": list(w.poly.coeffs),
        "kind": w.kind,
        "checks": check_witness(w),
    }
    if w.kind == UNIT_PLUS_ROOT:
        d["k"] = w.k
    return d


def witness_to_json(w: Witness) -> str:
    return json.dumps(witness_to_dict(w), sort_keys=True)


def witness_from_dict(d: dict, ring: FiniteRing | None = None) -> Witness:
    """Rebuild a witness from its certificate record (re-parsing the ring)."""
    if ring is None:
        from .parsing import parse_ring_spec

        if not d.get("ring_spec"):
            raise InvalidConstruction("certificate has no ring spec")
        ring = parse_ring_spec(d["ring_spec"])
    poly = make_poly(ring, d["poly"])
    return Witness(ring, int(d["r"]), int(d["s"]), int(d["u"]), poly,
                   kind=d.get("kind", GX_CLEAN), k=d.get("k"))


def verdict_to_dict(v: Verdict) -> dict:
    d = {
        "ring_spec": v.ring.spec,
        "poly": list(v.poly.coeffs) if v.poly is not None else None,
        "kind": v.kind,
        "holds": v.holds,
        "failing_element": v.failing_element,
    }
    if v.witness_map is not None:
        d["witnesses"] = [witness_to_dict(v.witness_map[r]) for r in sorted(v.witness_map)]
    return d
