"""Polynomials over the center of a finite ring."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import NonCentralCoefficient, NonCentralParameter, NotSurjective
from .ring import FiniteRing, RingMap, canonical_int


@dataclass(frozen=True, eq=False)
class CentralPolynomial:
    """Polynomial c0 + c1 x + ... with coefficients in the center of ``ring``.

    Coefficients are stored constant-first with trailing zeros trimmed; the
    zero polynomial has no coefficients and degree -1.
    """

    ring: FiniteRing
    coeffs: tuple[int, ...]

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        if not isinstance(other, CentralPolynomial):
            return NotImplemented
        return self.ring is other.ring and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((id(self.ring), self.coeffs))

    def __call__(self, s):
        return evaluate(self, s)

    def __str__(self):
        return format_poly(self)


def _trim(R, coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == R.zero:
        coeffs.pop()
    return tuple(coeffs)


def make_poly(R: FiniteRing, coeffs: Sequence[int]) -> CentralPolynomial:
    coeffs = [int(c) for c in coeffs]
    for i, c in enumerate(coeffs):
        if not 0 <= c < R.order:
            raise ValueError(f"coefficient {i} is not an element of the ring")
        if not R.central_mask[c]:
            raise NonCentralCoefficient(i, c)
    return CentralPolynomial(R, _trim(R, coeffs))


def int_poly(R: FiniteRing, int_coeffs: Sequence[int]) -> CentralPolynomial:
    """The integer polynomial ``int_coeffs`` read through Z -> R."""
    return make_poly(R, [canonical_int(R, c) for c in int_coeffs])


def monic_quadratic(R: FiniteRing, a: int, b: int) -> CentralPolynomial:
    """(x - a)(x - b) = x^2 - (a+b) x + ab."""
    _require_central(R, a, b)
    return make_poly(R, [R.mul(a, b), R.neg(R.add(a, b)), R.one])


def _require_central(R, *params):
    for p in params:
        if not R.central_mask[p]:
            raise NonCentralParameter(f"element {p} is not central")


def evaluate(p: CentralPolynomial, s: int) -> int:
    R = p.ring
    acc = R.zero
    for c in reversed(p.coeffs):
        acc = R.add(R.mul(acc, s), c)
    return acc


def evaluate_all(p: CentralPolynomial) -> np.ndarray:
    """``p(s)`` for every element ``s`` at once (Horner over the tables)."""
    R = p.ring
    xs = np.arange(R.order)
    acc = np.full(R.order, R.zero, dtype=np.intp)
    for c in reversed(p.coeffs):
        acc = R.add_table[R.mul_table[acc, xs], c]
    return acc


def roots(p: CentralPolynomial) -> tuple[int, ...]:
    return tuple(int(i) for i in np.flatnonzero(evaluate_all(p) == p.ring.zero))


def poly_add(p: CentralPolynomial, q: CentralPolynomial) -> CentralPolynomial:
    R = p.ring
    n = max(len(p.coeffs), len(q.coeffs))
    pc = list(p.coeffs) + [R.zero] * (n - len(p.coeffs))
    qc = list(q.coeffs) + [R.zero] * (n - len(q.coeffs))
    return CentralPolynomial(R, _trim(R, [R.add(x, y) for x, y in zip(pc, qc)]))


def poly_mul(p: CentralPolynomial, q: CentralPolynomial) -> CentralPolynomial:
    R = p.ring
    if p.is_zero or q.is_zero:
        return CentralPolynomial(R, ())
    out = [R.zero] * (len(p.coeffs) + len(q.coeffs) - 1)
    for i, x in enumerate(p.coeffs):
        for j, y in enumerate(q.coeffs):
            out[i + j] = R.add(out[i + j], R.mul(x, y))
    return CentralPolynomial(R, _trim(R, out))


def divide_monic_quadratic(p: CentralPolynomial, a: int, b: int):
    """Long division of ``p`` by (x - a)(x - b); returns (quotient, remainder)."""
    R = p.ring
    _require_central(R, a, b)
    divisor = monic_quadratic(R, a, b).coeffs  # (ab, -(a+b), 1)
    rem = list(p.coeffs)
    if len(rem) < 3:
        return CentralPolynomial(R, ()), p
    quot = [R.zero] * (len(rem) - 2)
    for top in range(len(rem) - 1, 1, -1):
        lead = rem[top]
        quot[top - 2] = lead
        for k, d in enumerate(divisor):
            i = top - 2 + k
            rem[i] = R.sub(rem[i], R.mul(lead, d))
    return CentralPolynomial(R, _trim(R, quot)), CentralPolynomial(R, _trim(R, rem[:2]))


def induced_poly(m: RingMap, p: CentralPolynomial) -> CentralPolynomial:
    """Apply ``m`` to each coefficient of ``p``."""
    if not m.surjective:
        raise NotSurjective("induced polynomial needs a surjective map")
    if p.ring is not m.domain:
        raise ValueError("polynomial is not over the map's domain")
    return make_poly(m.codomain, [m(c) for c in p.coeffs])


def format_poly(p: CentralPolynomial) -> str:
    R = p.ring
    if p.is_zero:
        return "0"
    terms = []
    for i in range(p.degree, -1, -1):
        c = p.coeffs[i]
        if c == R.zero:
            continue
        mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
        coef = R.labels[c]
        if not mono:
            terms.append(coef)
        elif c == R.one:
            terms.append(mono)
        else:
            terms.append(f"{coef}*{mono}")
    return " + ".join(terms)
