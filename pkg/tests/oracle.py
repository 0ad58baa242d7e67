"""Brute-force reference arithmetic, independent of the table machinery.

Elements are plain Python tuples; operations are written out directly from
their definitions. Decoding follows the documented index conventions.
"""

import itertools


def little_endian(x, q, slots):
    return tuple((x // q ** k) % q for k in range(slots))


def from_little_endian(digits, q):
    return sum(d * q ** k for k, d in enumerate(digits))


class TupleRing:
    """A ring given by element list and Python add/mul on decoded values."""

    def __init__(self, elements, add, mul, zero, one):
        self.elements = list(elements)
        self.index = {e: i for i, e in enumerate(self.elements)}
        self.add = add
        self.mul = mul
        self.zero = zero
        self.one = one

    def units(self):
        E = self.elements
        return {self.index[u] for u in E
                if any(self.mul(u, v) == self.one and self.mul(v, u) == self.one for v in E)}

    def center(self):
        E = self.elements
        return {self.index[c] for c in E if all(self.mul(c, r) == self.mul(r, c) for r in E)}

    def idempotents(self):
        return {self.index[e] for e in self.elements if self.mul(e, e) == e}


def zn(n):
    return TupleRing(range(n), lambda a, b: (a + b) % n, lambda a, b: (a * b) % n, 0, 1 % n)


def matrices(q, k):
    """k x k matrices over Z_q; index encodes row-major entries little-endian."""
    elements = [little_endian(x, q, k * k) for x in range(q ** (k * k))]

    def add(A, B):
        return tuple((a + b) % q for a, b in zip(A, B))

    def mul(A, B):
        return tuple(sum(A[i * k + l] * B[l * k + j] for l in range(k)) % q
                     for i in range(k) for j in range(k))

    one = tuple(1 % q if i == j else 0 for i in range(k) for j in range(k))
    return TupleRing(elements, add, mul, tuple([0] * (k * k)), one)


def triangular(q, n):
    pos = [(i, j) for i in range(n) for j in range(i, n)]
    elements = [little_endian(x, q, len(pos)) for x in range(q ** len(pos))]

    def full(d):
        M = [[0] * n for _ in range(n)]
        for (i, j), v in zip(pos, d):
            M[i][j] = v
        return M

    def add(A, B):
        return tuple((a + b) % q for a, b in zip(A, B))

    def mul(A, B):
        X, Y = full(A), full(B)
        return tuple(sum(X[i][l] * Y[l][j] for l in range(n)) % q for (i, j) in pos)

    one = tuple(1 % q if i == j else 0 for (i, j) in pos)
    return TupleRing(elements, add, mul, tuple([0] * len(pos)), one)


def cyclic_group_ring(q, m):
    elements = [little_endian(x, q, m) for x in range(q ** m)]

    def add(A, B):
        return tuple((a + b) % q for a, b in zip(A, B))

    def mul(A, B):
        out = [0] * m
        for g in range(m):
            for h in range(m):
                out[(g + h) % m] += A[g] * B[h]
        return tuple(c % q for c in out)

    return TupleRing(elements, add, mul, tuple([0] * m), tuple([1 % q] + [0] * (m - 1)))


def truncated_series(q, k):
    elements = [little_endian(x, q, k) for x in range(q ** k)]

    def add(A, B):
        return tuple((a + b) % q for a, b in zip(A, B))

    def mul(A, B):
        return tuple(sum(A[i] * B[m - i] for i in range(m + 1)) % q for m in range(k))

    return TupleRing(elements, add, mul, tuple([0] * k), tuple([1 % q] + [0] * (k - 1)))


def product(*factors):
    elements = list(itertools.product(*[F.elements for F in factors]))

    def add(A, B):
        return tuple(F.add(a, b) for F, a, b in zip(factors, A, B))

    def mul(A, B):
        return tuple(F.mul(a, b) for F, a, b in zip(factors, A, B))

    return TupleRing(elements, add, mul, tuple(F.zero for F in factors), tuple(F.one for F in factors))


def tables_agree(R, T):
    """Every table entry of FiniteRing R matches the oracle T (same indexing)."""
    n = len(T.elements)
    if R.order != n or R.zero != T.index[T.zero] or R.one != T.index[T.one]:
        return False
    for i, x in enumerate(T.elements):
        for j, y in enumerate(T.elements):
            if R.add_table[i, j] != T.index[T.add(x, y)] or R.mul_table[i, j] != T.index[T.mul(x, y)]:
                return False
    return True


def is_isomorphism(R, S, f):
    """``f`` (list) is a bijective ring map R -> S, checked pair by pair."""
    if sorted(f) != list(range(S.order)) or f[R.one] != S.one:
        return False
    return all(f[R.add(x, y)] == S.add(f[x], f[y]) and f[R.mul(x, y)] == S.mul(f[x], f[y])
               for x in range(R.order) for y in range(R.order))


def brute_witness(R, r, is_root):
    """First s (ascending) passing ``is_root`` with r - s a commuting two-sided unit."""
    n = R.order
    for s in range(n):
        if not is_root(s):
            continue
        u = next(x for x in range(n) if R.add(s, x) == r)
        if not any(R.mul(u, v) == R.one and R.mul(v, u) == R.one for v in range(n)):
            continue
        if R.mul(s, u) == R.mul(u, s):
            return s, u
    return None


def poly_value(R, coeffs, s):
    acc = R.zero
    for i, c in enumerate(coeffs):
        term = c
        for _ in range(i):
            term = R.mul(term, s)
        acc = R.add(acc, term)
    return acc


def int_bounded_check(r, coeffs, bound):
    for s in range(-bound, bound + 1):
        value = sum(c * s ** i for i, c in enumerate(coeffs))
        if value == 0 and r - s in (1, -1):
            return True
    return False
