"""Finite unital rings as explicit operation tables.

Every element of a :class:`FiniteRing` is an ``int`` index in
``range(R.order)``; indices are meaningless without their ring. Each
constructor fixes a deterministic element order:

* ``make_zn``: index ``i`` is the residue ``i``.
* ``make_product``: lexicographic in the factor indices (first factor most
  significant), i.e. the order of ``itertools.product``.
* ``make_matrix``, ``make_triangular``, ``make_group_ring``,
  ``make_trunc_power_series``: base-``q`` digits, little-endian. Slot ``k``
  carries weight ``q**k`` where slots are matrix entries in row-major order
  (upper-triangular entries only for ``make_triangular``), group elements in
  group-index order, or the coefficients ``a_0, a_1, ...`` of ``t``.
* ``make_quotient``: cosets ordered by their least representative.
* ``make_corner``: elements ``e*r*e`` ordered by their index in the parent.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

import numpy as np

from .errors import (
    InvalidConstruction,
    NotIdempotent,
    SizeCapExceeded,
)

DEFAULT_CAP = 65536


def _readonly(a):
    a = np.ascontiguousarray(a, dtype=np.intp)
    a.setflags(write=False)
    return a


def _check_cap(order, cap):
    cap = DEFAULT_CAP if cap is None else cap
    if order > cap:
        raise SizeCapExceeded(order, cap)


class FiniteRing:
    """A finite associative ring with identity, stored as Cayley tables.

    Derived sets (units, center, idempotents) are computed on first access
    and cached. Tables are read-only numpy arrays.
    """

    def __init__(self, add_table, mul_table, zero, one, neg_table=None,
                 labels=None, spec=None, construction=None):
        self.add_table = _readonly(add_table)
        self.mul_table = _readonly(mul_table)
        self.order = int(self.add_table.shape[0])
        self.zero = int(zero)
        self.one = int(one)
        if neg_table is None:
            hits = self.add_table == self.zero
            if not hits.any(axis=1).all():
                raise InvalidConstruction("addition table has no additive inverses")
            neg_table = hits.argmax(axis=1)
        self.neg_table = _readonly(neg_table)
        self.labels = tuple(labels) if labels is not None else tuple(str(i) for i in range(self.order))
        self.spec = spec
        self.construction = construction or {"kind": "tables"}

    def __repr__(self):
        name = self.spec or self.construction.get("kind", "tables")
        return f"<FiniteRing {name} order={self.order}>"

    def __len__(self):
        return self.order

    @property
    def elements(self):
        return range(self.order)

    # scalar arithmetic

    def add(self, x, y):
        return int(self.add_table[x, y])

    def mul(self, x, y):
        return int(self.mul_table[x, y])

    def neg(self, x):
        return int(self.neg_table[x])

    def sub(self, x, y):
        return int(self.add_table[x, self.neg_table[y]])

    def power(self, x, k):
        acc = self.one
        for _ in range(k):
            acc = int(self.mul_table[acc, x])
        return acc

    def powers(self, k):
        """Vector of ``x**k`` for every element ``x``."""
        acc = np.full(self.order, self.one, dtype=np.intp)
        base = np.arange(self.order)
        for _ in range(k):
            acc = self.mul_table[acc, base]
        return acc

    def inv(self, u):
        v = int(self.inverse_table[u])
        if v < 0:
            raise ValueError(f"element {u} is not a unit")
        return v

    def label(self, x):
        return self.labels[x]

    # cached derived data

    @cached_property
    def sub_table(self):
        return _readonly(self.add_table[:, self.neg_table])

    @cached_property
    def inverse_table(self):
        # two-sided inverse found by scan; -1 marks non-units
        both = (self.mul_table == self.one) & (self.mul_table.T == self.one)
        inv = np.where(both.any(axis=1), both.argmax(axis=1), -1)
        return _readonly(inv)

    @cached_property
    def unit_mask(self):
        m = self.inverse_table >= 0
        m.setflags(write=False)
        return m

    @cached_property
    def units(self):
        return tuple(int(i) for i in np.flatnonzero(self.unit_mask))

    @cached_property
    def central_mask(self):
        m = (self.mul_table == self.mul_table.T).all(axis=1)
        m.setflags(write=False)
        return m

    @cached_property
    def center(self):
        return tuple(int(i) for i in np.flatnonzero(self.central_mask))

    @cached_property
    def idempotents(self):
        idx = np.arange(self.order)
        return tuple(int(i) for i in np.flatnonzero(self.mul_table[idx, idx] == idx))

    @cached_property
    def characteristic(self):
        """Additive order of the identity."""
        acc, c = self.one, 1
        while acc != self.zero:
            acc = int(self.add_table[acc, self.one])
            c += 1
        return c

    @cached_property
    def is_commutative(self):
        return bool(self.central_mask.all())

    def is_unit(self, x):
        return bool(self.unit_mask[x])

    def is_central(self, x):
        return bool(self.central_mask[x])


def canonical_int(R: FiniteRing, m: int) -> int:
    """Image of the integer ``m`` under the unital map Z -> R."""
    k = m % R.characteristic
    acc = R.zero
    for _ in range(k):
        acc = int(R.add_table[acc, R.one])
    return acc


# ---------------------------------------------------------------- groups

class FiniteGroup:
    def __init__(self, op_table, identity, inverse_table=None, labels=None, name=None):
        self.op_table = _readonly(op_table)
        self.order = int(self.op_table.shape[0])
        self.identity = int(identity)
        if inverse_table is None:
            inverse_table = (self.op_table == self.identity).argmax(axis=1)
        self.inverse_table = _readonly(inverse_table)
        self.labels = tuple(labels) if labels is not None else tuple(f"g{i}" for i in range(self.order))
        self.name = name
        self._check()

    def _check(self):
        n, op = self.order, self.op_table
        idx = np.arange(n)
        if op.shape != (n, n) or op.min() < 0 or op.max() >= n:
            raise InvalidConstruction("group table is not total")
        if not ((op[self.identity] == idx).all() and (op[:, self.identity] == idx).all()):
            raise InvalidConstruction("identity is not two-sided")
        if not ((op[idx, self.inverse_table] == self.identity).all()
                and (op[self.inverse_table, idx] == self.identity).all()):
            raise InvalidConstruction("inverse table is wrong")
        for x in range(n):
            if not (op[op[x]] == op[x][op]).all():
                raise InvalidConstruction("group operation is not associative")

    def __repr__(self):
        return f"<FiniteGroup {self.name or ''} order={self.order}>"


def cyclic_group(k: int) -> FiniteGroup:
    """C_k with index ``i`` standing for ``g**i``."""
    if k < 1:
        raise ValueError("cyclic group order must be positive")
    idx = np.arange(k)
    op = (idx[:, None] + idx[None, :]) % k
    labels = ["e"] + ["g" if i == 1 else f"g^{i}" for i in range(1, k)]
    return FiniteGroup(op, 0, (-idx) % k, labels=labels, name=f"C{k}")


# ---------------------------------------------------------- constructors

def make_zn(n: int, cap: int | None = None) -> FiniteRing:
    if n < 1:
        raise ValueError("Z_n requires n >= 1")
    _check_cap(n, cap)
    idx = np.arange(n)
    return FiniteRing(
        (idx[:, None] + idx[None, :]) % n,
        (idx[:, None] * idx[None, :]) % n,
        zero=0, one=1 % n, neg_table=(-idx) % n,
        spec=f"Zn {n}", construction={"kind": "zn", "n": n},
    )


def _spec_or_none(fmt, *bases, **extra):
    if any(b.spec is None for b in bases):
        return None
    return fmt.format(*[b.spec for b in bases], **extra)


def _digit_matrix(q, slots):
    n = q ** slots
    idx = np.arange(n)
    return np.stack([(idx // q ** k) % q for k in range(slots)], axis=1) if slots else np.zeros((n, 0), np.intp)


def _encode(parts, q):
    out = 0
    for k, p in enumerate(parts):
        out = out + p * (q ** k)
    return out


def _slot_ring(R, slots, product, cap, make_label, spec, construction):
    """Ring whose elements are ``slots``-tuples over R with slotwise addition.

    ``product(X, Y)`` receives two lists of broadcastable base-index arrays
    and returns the list of product slots.
    """
    q = R.order
    _check_cap(q ** slots, cap)
    D = _digit_matrix(q, slots)
    X = [D[:, None, k] for k in range(slots)]
    Y = [D[None, :, k] for k in range(slots)]
    add_t = _encode([R.add_table[X[k], Y[k]] for k in range(slots)], q)
    mul_t = _encode(product(X, Y), q)
    neg_t = _encode([R.neg_table[D[:, k]] for k in range(slots)], q)
    n = q ** slots
    shape = (n, n)
    add_t = np.broadcast_to(add_t, shape)
    mul_t = np.broadcast_to(mul_t, shape)
    one_digits = construction.pop("_one")
    one = sum(d * q ** k for k, d in enumerate(one_digits))
    labels = [make_label([int(v) for v in D[i]]) for i in range(n)]
    zero = sum(R.zero * q ** k for k in range(slots))
    return FiniteRing(add_t, mul_t, zero=zero, one=one, neg_table=np.broadcast_to(neg_t, (n,)),
                      labels=labels, spec=spec, construction=construction)


def _sum_products(R, pairs):
    acc = None
    for x, y in pairs:
        term = R.mul_table[x, y]
        acc = term if acc is None else R.add_table[acc, term]
    return R.zero if acc is None else acc


def make_product(factors: Sequence[FiniteRing], cap: int | None = None) -> FiniteRing:
    factors = list(factors)
    if not factors:
        raise InvalidConstruction("product needs at least one factor")
    qs = [F.order for F in factors]
    n = int(np.prod(qs))
    _check_cap(n, cap)
    comps = np.array(list(itertools.product(*[range(q) for q in qs])), dtype=np.intp).reshape(n, len(qs))
    strides = [int(np.prod(qs[i + 1:])) for i in range(len(qs))]

    def encode(parts):
        return sum(p * s for p, s in zip(parts, strides))

    A = [comps[:, None, i] for i in range(len(qs))]
    B = [comps[None, :, i] for i in range(len(qs))]
    add_t = encode([F.add_table[a, b] for F, a, b in zip(factors, A, B)])
    mul_t = encode([F.mul_table[a, b] for F, a, b in zip(factors, A, B)])
    neg_t = encode([F.neg_table[comps[:, i]] for i, F in enumerate(factors)])
    zero = encode([F.zero for F in factors])
    one = encode([F.one for F in factors])
    labels = ["(" + ",".join(F.labels[c] for F, c in zip(factors, row)) + ")" for row in comps.tolist()]
    spec = None
    if all(F.spec is not None for F in factors):
        spec = "Prod(" + ",".join(F.spec for F in factors) + ")"
    return FiniteRing(np.broadcast_to(add_t, (n, n)), np.broadcast_to(mul_t, (n, n)),
                      zero=zero, one=one, neg_table=neg_t, labels=labels, spec=spec,
                      construction={"kind": "product", "factors": tuple(factors),
                                    "components": _readonly(comps)})


def make_matrix(R: FiniteRing, k: int, cap: int | None = None) -> FiniteRing:
    if k < 1:
        raise ValueError("matrix size must be positive")
    _check_cap(R.order ** (k * k), cap)

    def product(X, Y):
        return [_sum_products(R, [(X[i * k + l], Y[l * k + j]) for l in range(k)])
                for i in range(k) for j in range(k)]

    def label(d):
        rows = [",".join(R.labels[d[i * k + j]] for j in range(k)) for i in range(k)]
        return "[" + ",".join(f"[{r}]" for r in rows) + "]"

    one = [R.one if i == j else R.zero for i in range(k) for j in range(k)]
    return _slot_ring(R, k * k, product, cap, label,
                      _spec_or_none("Mat {k} ({0})", R, k=k),
                      {"kind": "matrix", "base": R, "k": k, "_one": one})


def triangular_positions(n):
    return [(i, j) for i in range(n) for j in range(i, n)]


def make_triangular(R: FiniteRing, n: int, cap: int | None = None) -> FiniteRing:
    if n < 1:
        raise ValueError("triangular size must be positive")
    pos = triangular_positions(n)
    slot = {p: s for s, p in enumerate(pos)}
    _check_cap(R.order ** len(pos), cap)

    def product(X, Y):
        return [_sum_products(R, [(X[slot[i, l]], Y[slot[l, j]]) for l in range(i, j + 1)])
                for (i, j) in pos]

    def label(d):
        rows = []
        for i in range(n):
            rows.append(",".join(R.labels[d[slot[i, j]]] if j >= i else R.labels[R.zero] for j in range(n)))
        return "[" + ",".join(f"[{r}]" for r in rows) + "]"

    one = [R.one if i == j else R.zero for (i, j) in pos]
    return _slot_ring(R, len(pos), product, cap, label,
                      _spec_or_none("Tri {n} ({0})", R, n=n),
                      {"kind": "triangular", "base": R, "n": n, "_one": one})


def make_group_ring(R: FiniteRing, G: FiniteGroup, cap: int | None = None) -> FiniteRing:
    m = G.order
    _check_cap(R.order ** m, cap)
    by_target = {h: [] for h in range(m)}
    for g in range(m):
        for g2 in range(m):
            by_target[int(G.op_table[g, g2])].append((g, g2))

    def product(X, Y):
        return [_sum_products(R, [(X[g], Y[g2]) for g, g2 in by_target[h]]) for h in range(m)]

    def label(d):
        terms = [f"{R.labels[c]}*{G.labels[g]}" for g, c in enumerate(d) if c != R.zero]
        return "+".join(terms) if terms else R.labels[R.zero]

    one = [R.one if g == G.identity else R.zero for g in range(m)]
    spec = None
    if R.spec is not None and G.name and G.name.startswith("C"):
        spec = f"GR ({R.spec}) {G.name}"
    return _slot_ring(R, m, product, cap, label, spec,
                      {"kind": "group_ring", "base": R, "group": G, "_one": one})


def make_trunc_power_series(R: FiniteRing, k: int, cap: int | None = None) -> FiniteRing:
    """R[t]/(t^k): truncated power series with coefficient a_i in slot i."""
    if k < 1:
        raise ValueError("truncation length must be positive")
    _check_cap(R.order ** k, cap)

    def product(X, Y):
        return [_sum_products(R, [(X[i], Y[m - i]) for i in range(m + 1)]) for m in range(k)]

    def label(d):
        terms = []
        for i, c in enumerate(d):
            if c == R.zero:
                continue
            terms.append(R.labels[c] if i == 0 else f"{R.labels[c]}*t" + (f"^{i}" if i > 1 else ""))
        return "+".join(terms) if terms else R.labels[R.zero]

    one = [R.one] + [R.zero] * (k - 1)
    return _slot_ring(R, k, product, cap, label,
                      _spec_or_none("TPS ({0}) {k}", R, k=k),
                      {"kind": "tps", "base": R, "k": k, "_one": one})


def ideal_closure(R: FiniteRing, gens) -> tuple[int, ...]:
    """Two-sided ideal generated by ``gens``, as an ascending tuple."""
    members = {R.zero}
    for g in gens:
        if not 0 <= g < R.order:
            raise InvalidConstruction(f"generator {g} is not an element of the ring")
        block = R.mul_table[R.mul_table[:, g]]  # [r, r'] = (r g) r'
        members.update(np.unique(block).tolist())
    S = np.array(sorted(members), dtype=np.intp)
    while True:
        grown = np.unique(np.concatenate([S, R.add_table[np.ix_(S, S)].ravel(), R.neg_table[S]]))
        if len(grown) == len(S):
            return tuple(int(x) for x in S)
        S = grown


def make_quotient(R: FiniteRing, gens, cap: int | None = None):
    """Return ``(R/I, quotient map)`` for the ideal I generated by ``gens``."""
    gens = sorted(set(int(g) for g in gens))
    ideal = np.array(ideal_closure(R, gens), dtype=np.intp)
    rep = R.add_table[:, ideal].min(axis=1)
    reps = np.unique(rep)
    position = np.full(R.order, -1, dtype=np.intp)
    position[reps] = np.arange(len(reps))
    proj = position[rep]
    grid = np.ix_(reps, reps)
    Q = FiniteRing(
        proj[R.add_table[grid]], proj[R.mul_table[grid]],
        zero=proj[R.zero], one=proj[R.one], neg_table=proj[R.neg_table[reps]],
        labels=[f"[{R.labels[r]}]" for r in reps],
        spec=None if R.spec is None else f"Quot ({R.spec}) {{{','.join(map(str, gens))}}}",
        construction={"kind": "quotient", "base": R, "gens": tuple(gens),
                      "ideal": tuple(int(x) for x in ideal),
                      "representatives": _readonly(reps)},
    )
    return Q, RingMap(R, Q, proj)


def make_corner(R: FiniteRing, e: int) -> FiniteRing:
    """Corner ring eRe with identity e."""
    if R.mul(e, e) != e:
        raise NotIdempotent(f"element {e} is not idempotent")
    members = np.unique(R.mul_table[R.mul_table[e, :], e])
    position = np.full(R.order, -1, dtype=np.intp)
    position[members] = np.arange(len(members))
    grid = np.ix_(members, members)
    return FiniteRing(
        position[R.add_table[grid]], position[R.mul_table[grid]],
        zero=position[R.zero], one=position[e], neg_table=position[R.neg_table[members]],
        labels=[R.labels[m] for m in members],
        spec=None if R.spec is None else f"Corner ({R.spec}) {e}",
        construction={"kind": "corner", "base": R, "e": int(e),
                      "parent_index": _readonly(members), "position": _readonly(position)},
    )


# ---------------------------------------------------------------- maps

class RingMap:
    """Unital ring homomorphism given element-wise; verified on construction."""

    def __init__(self, domain: FiniteRing, codomain: FiniteRing, image_of, check=True):
        self.domain = domain
        self.codomain = codomain
        self.image_of = _readonly(image_of)
        if self.image_of.shape != (domain.order,):
            raise InvalidConstruction("image_of must list one image per domain element")
        self.surjective = len(np.unique(self.image_of)) == codomain.order
        if check:
            problems = self.check()
            if problems:
                raise InvalidConstruction("not a ring homomorphism: " + "; ".join(problems))

    def __call__(self, x):
        return int(self.image_of[x])

    def check(self):
        """List of violated homomorphism conditions (empty when valid)."""
        f, D, C = self.image_of, self.domain, self.codomain
        problems = []
        if f.min(initial=0) < 0 or f.max(initial=0) >= C.order:
            return ["images out of range"]
        if (f[D.add_table] != C.add_table[f[:, None], f[None, :]]).any():
            problems.append("additivity")
        if (f[D.mul_table] != C.mul_table[f[:, None], f[None, :]]).any():
            problems.append("multiplicativity")
        if f[D.one] != C.one:
            problems.append("unitality")
        if self.surjective and not C.central_mask[f[D.central_mask]].all():
            problems.append("central images")
        return problems

    def __repr__(self):
        return f"<RingMap {self.domain!r} -> {self.codomain!r} surjective={self.surjective}>"


def identity_map(R: FiniteRing) -> RingMap:
    return RingMap(R, R, np.arange(R.order))


def canonical_epi(kind: str, *args) -> RingMap:
    """Named surjections onto simpler rings.

    ``quotient(R, gens)``, ``product_projection(P, i)``,
    ``triangular_corner(T)`` (A -> a_11) and ``series_augmentation(T)``
    (f -> a_0).
    """
    if kind == "quotient":
        if len(args) != 2 or not isinstance(args[0], FiniteRing):
            raise InvalidConstruction("quotient epi needs (ring, generators)")
        return make_quotient(*args)[1]
    if kind == "product_projection":
        if len(args) != 2 or not isinstance(args[0], FiniteRing):
            raise InvalidConstruction("product projection needs (product ring, factor index)")
        P, i = args
        if P.construction.get("kind") != "product":
            raise InvalidConstruction(f"{P!r} is not a constructed product")
        factors = P.construction["factors"]
        if not 0 <= i < len(factors):
            raise InvalidConstruction(f"factor index {i} out of range")
        return RingMap(P, factors[i], P.construction["components"][:, i])
    if kind in ("triangular_corner", "series_augmentation"):
        want = "triangular" if kind == "triangular_corner" else "tps"
        if len(args) != 1 or not isinstance(args[0], FiniteRing) or args[0].construction.get("kind") != want:
            raise InvalidConstruction(f"{kind} needs a ring built by the {want} constructor")
        T = args[0]
        base = T.construction["base"]
        # slot 0 holds the (1,1) entry / the constant coefficient
        return RingMap(T, base, np.arange(T.order) % base.order)
    raise InvalidConstruction(f"unknown epimorphism kind {kind!r}")


# -------------------------------------------------------------- axioms

@dataclass
class AxiomCheck:
    name: str
    passed: bool
    witness: tuple | None = None


@dataclass
class AxiomReport:
    checks: list[AxiomCheck] = field(default_factory=list)

    @property
    def ok(self):
        return all(c.passed for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.passed]


def _first_assoc_failure(op):
    for x in range(op.shape[0]):
        bad = np.argwhere(op[op[x]] != op[x][op])
        if len(bad):
            return (x, int(bad[0][0]), int(bad[0][1]))
    return None


def verify_axioms(R: FiniteRing) -> AxiomReport:
    """Exhaustively check every ring axiom against the tables."""
    report = AxiomReport()
    n = R.order
    A, M, N = R.add_table, R.mul_table, R.neg_table
    total = (A.shape == (n, n) and M.shape == (n, n) and N.shape == (n,)
             and all(t.size == 0 or (t.min() >= 0 and t.max() < n) for t in (A, M, N))
             and 0 <= R.zero < n and 0 <= R.one < n)
    report.checks.append(AxiomCheck("tables_total", total))
    if not total:
        return report

    def pairwise(name, bad):
        hit = np.argwhere(bad)
        report.checks.append(AxiomCheck(name, not len(hit), tuple(int(v) for v in hit[0]) if len(hit) else None))

    w = _first_assoc_failure(A)
    report.checks.append(AxiomCheck("add_associative", w is None, w))
    pairwise("add_commutative", A != A.T)
    pairwise("add_identity", np.array([A[R.zero] != np.arange(n)]))
    pairwise("add_inverse", np.array([A[np.arange(n), N] != R.zero]))
    w = _first_assoc_failure(M)
    report.checks.append(AxiomCheck("mul_associative", w is None, w))
    idx = np.arange(n)
    ok_one = (M[R.one] == idx).all() and (M[:, R.one] == idx).all()
    bad_one = np.flatnonzero((M[R.one] != idx) | (M[:, R.one] != idx))
    report.checks.append(AxiomCheck("one_identity", bool(ok_one), None if ok_one else (int(bad_one[0]),)))
    left = right = None
    for x in range(n):
        row = M[x]
        bad = np.argwhere(row[A] != A[row[:, None], row[None, :]])
        if len(bad) and left is None:
            left = (x, int(bad[0][0]), int(bad[0][1]))
        col = M[:, x]
        bad = np.argwhere(col[A] != A[col[:, None], col[None, :]])
        if len(bad) and right is None:
            right = (int(bad[0][0]), int(bad[0][1]), x)
        if left and right:
            break
    report.checks.append(AxiomCheck("left_distributive", left is None, left))
    report.checks.append(AxiomCheck("right_distributive", right is None, right))
    return report
