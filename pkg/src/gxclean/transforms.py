"""Closed-form conversions between decomposition witnesses.

None of these search: each takes a witness, checks it, and builds the new
pair arithmetically. Inputs that fail validation raise InvalidInputWitness.
"""

from __future__ import annotations

from .decompose import (
    CLEAN,
    GX_CLEAN,
    UNIT_PLUS_ROOT,
    Witness,
    _record,
    clean_poly,
    is_valid,
)
from .errors import InvalidInputWitness, NotAUnit, NotSurjective
from .poly import CentralPolynomial, induced_poly, int_poly, make_poly, monic_quadratic
from .ring import FiniteRing, RingMap


def _require(w: Witness, R: FiniteRing, r: int, kind: str, poly: CentralPolynomial | None = None):
    if w.ring is not R:
        raise InvalidInputWitness("witness belongs to a different ring")
    if w.r != r:
        raise InvalidInputWitness(f"witness certifies element {w.r}, expected {r}")
    if w.kind != kind:
        raise InvalidInputWitness(f"expected a {kind} witness, got {w.kind}")
    if poly is not None and kind == GX_CLEAN and w.poly != poly:
        raise InvalidInputWitness(f"witness is against {w.poly}, expected {poly}")
    if not is_valid(w):
        raise InvalidInputWitness(f"witness {w.pair()} for {w.r} does not validate")


def _as_clean(w: Witness):
    # a gx witness against x^2 - x is as good as a clean one
    if w.kind == GX_CLEAN and w.poly == clean_poly(w.ring):
        return Witness(w.ring, w.r, w.s, w.u, w.poly, kind=CLEAN)
    return w


def _difference_inverse(R, a, b):
    d = R.sub(b, a)
    if not R.is_unit(d):
        raise NotAUnit(f"b - a = {d} is not a unit")
    return d, R.inv(d)


def t24_forward(R: FiniteRing, a: int, b: int, r: int, w: Witness) -> Witness:
    """Clean witness (e, u) of (r - a)/(b - a)  ->  (x-a)(x-b) witness of r.

    s = e(b - a) + a and u' = u(b - a).
    """
    g = monic_quadratic(R, a, b)
    d, d_inv = _difference_inverse(R, a, b)
    w = _as_clean(w)
    _require(w, R, R.mul(R.sub(r, a), d_inv), CLEAN)
    s = R.add(R.mul(w.s, d), a)
    u = R.mul(w.u, d)
    return _record(Witness(R, r, s, u, g))


def t24_backward(R: FiniteRing, a: int, b: int, r: int, w: Witness) -> Witness:
    """(x-a)(x-b) witness (s, u) of r(b - a) + a  ->  clean witness of r.

    e = (s - a)/(b - a) and u' = u/(b - a).
    """
    g = monic_quadratic(R, a, b)
    d, d_inv = _difference_inverse(R, a, b)
    _require(w, R, R.add(R.mul(r, d), a), GX_CLEAN, g)
    e = R.mul(R.sub(w.s, a), d_inv)
    u = R.mul(w.u, d_inv)
    return _record(Witness(R, r, e, u, clean_poly(R), kind=CLEAN))


def _x2_minus_2x(R):
    return int_poly(R, [0, -2, 1])


def t41_forward(R: FiniteRing, a: int, w: Witness) -> Witness:
    """(x^2 - 2x) witness (s, u) of 1 - a  ->  a = (-u) + (1 - s) with (1 - s)^2 = 1."""
    _require(w, R, R.sub(R.one, a), GX_CLEAN, _x2_minus_2x(R))
    return _record(_root_two_witness(R, a, R.sub(R.one, w.s), R.neg(w.u)))


def _root_two_witness(R, a, v, u):
    return Witness(R, a, v, u, make_poly(R, [R.neg(R.one), R.zero, R.one]), kind=UNIT_PLUS_ROOT, k=2)


def t41_backward(R: FiniteRing, a: int, w: Witness) -> Witness:
    """Square-root-of-one witness (v, u) of 1 - a  ->  a = (-u) + (1 - v), (1-v)^2 = 2(1-v)."""
    if w.kind != UNIT_PLUS_ROOT or w.k != 2:
        raise InvalidInputWitness("expected a unit-plus-square-root-of-one witness")
    _require(w, R, R.sub(R.one, a), UNIT_PLUS_ROOT)
    return _record(Witness(R, a, R.sub(R.one, w.s), R.neg(w.u), _x2_minus_2x(R)))


def p45_lift(w: Witness) -> tuple[Witness, Witness]:
    """Witness against x^2 + x + 1  ->  (same pair against x^4 - x, cube-root-of-one view)."""
    R = w.ring
    _require(w, R, w.r, GX_CLEAN, int_poly(R, [1, 1, 1]))
    lifted = Witness(R, w.r, w.s, w.u, int_poly(R, [0, -1, 0, 0, 1]))
    cubic = Witness(R, w.r, w.s, w.u, int_poly(R, [-1, 0, 0, 1]), kind=UNIT_PLUS_ROOT, k=3)
    for out in (lifted, cubic):
        if not is_valid(out):
            raise InvalidInputWitness("lifted witness does not validate")
    return _record(lifted), _record(cubic)


def odd_even_poly(R: FiniteRing, a: int, b: int, n: int) -> CentralPolynomial:
    """a x^(2n) - b x."""
    coeffs = [R.zero] * (2 * n + 1)
    coeffs[1] = R.neg(b)
    coeffs[2 * n] = a
    return make_poly(R, coeffs)


def p48_negate(w: Witness, a: int, b: int, n: int) -> Witness:
    """Witness of r against a x^(2n) - b x  ->  witness of -r against a x^(2n) + b x.

    The reverse direction is ``p48_negate(w, a, -b, n)``.
    """
    R = w.ring
    _require(w, R, w.r, GX_CLEAN, odd_even_poly(R, a, b, n))
    target = odd_even_poly(R, a, R.neg(b), n)
    return _record(Witness(R, R.neg(w.r), R.neg(w.s), R.neg(w.u), target))


def pushforward(m: RingMap, w: Witness) -> Witness:
    """Image of a witness under a surjective ring map, against the induced polynomial."""
    if not m.surjective:
        raise NotSurjective("pushforward needs a surjective map")
    if w.ring is not m.domain:
        raise InvalidInputWitness("witness is not over the map's domain")
    if not is_valid(w):
        raise InvalidInputWitness(f"witness {w.pair()} for {w.r} does not validate")
    poly = induced_poly(m, w.poly)
    return _record(Witness(m.codomain, m(w.r), m(w.s), m(w.u), poly, kind=w.kind, k=w.k))
