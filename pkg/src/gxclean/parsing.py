"""Text grammars for rings and polynomials.

Ring specs::

    Zn <n>
    Prod(<spec>,<spec>,...)
    Mat <k> (<spec>)
    Tri <n> (<spec>)
    GR (<spec>) C<k>
    Quot (<spec>) {<idx>,...}
    Corner (<spec>) <idx>
    TPS (<spec>) <k>

Polynomial literals: ``poly[c0,c1,...]`` where each entry is an integer
(mapped through Z -> R) or ``#<idx>`` (an explicit element index).
"""

from __future__ import annotations

import re

from .errors import ParseError
from .poly import CentralPolynomial, make_poly
from .ring import (
    FiniteRing,
    canonical_int,
    cyclic_group,
    make_corner,
    make_group_ring,
    make_matrix,
    make_product,
    make_quotient,
    make_triangular,
    make_trunc_power_series,
    make_zn,
)

_TOKEN = re.compile(r"\s*(?:([A-Za-z]+)|(-?\d+)|(.))")


def _tokenize(text):
    text = text.rstrip()
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        start = m.start(m.lastindex) if m.lastindex else m.end()
        if m.group(1):
            tokens.append(("word", m.group(1), start))
        elif m.group(2):
            tokens.append(("int", int(m.group(2)), start))
        elif m.group(3):
            tokens.append(("punct", m.group(3), start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _RingParser:
    def __init__(self, text, cap):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0
        self.cap = cap

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind, value=None):
        tok = self.tokens[self.i]
        if tok[0] != kind or (value is not None and tok[1] != value):
            want = value if value is not None else kind
            raise ParseError(f"expected {want!r}, found {tok[1]!r}", tok[2])
        self.i += 1
        return tok

    def positive(self, what):
        tok = self.take("int")
        if tok[1] < 1:
            raise ParseError(f"{what} must be a positive integer, got {tok[1]}", tok[2])
        return tok[1]

    def index(self):
        tok = self.take("int")
        if tok[1] < 0:
            raise ParseError(f"element index must be non-negative, got {tok[1]}", tok[2])
        return tok

    def parens(self):
        self.take("punct", "(")
        R = self.ring()
        self.take("punct", ")")
        return R

    def ring(self) -> FiniteRing:
        kind, word, pos = self.take("word")
        cap = self.cap
        if word == "Zn":
            return make_zn(self.positive("n"), cap=cap)
        if word == "Prod":
            self.take("punct", "(")
            factors = [self.ring()]
            while self.peek()[1] == ",":
                self.take("punct", ",")
                factors.append(self.ring())
            self.take("punct", ")")
            return make_product(factors, cap=cap)
        if word == "Mat":
            k = self.positive("matrix size")
            return make_matrix(self.parens(), k, cap=cap)
        if word == "Tri":
            n = self.positive("triangular size")
            return make_triangular(self.parens(), n, cap=cap)
        if word == "GR":
            R = self.parens()
            self.take("word", "C")
            return make_group_ring(R, cyclic_group(self.positive("group order")), cap=cap)
        if word == "Quot":
            R = self.parens()
            self.take("punct", "{")
            gens = []
            if self.peek()[1] != "}":
                gens.append(self._element(R))
                while self.peek()[1] == ",":
                    self.take("punct", ",")
                    gens.append(self._element(R))
            self.take("punct", "}")
            return make_quotient(R, gens, cap=cap)[0]
        if word == "Corner":
            R = self.parens()
            return make_corner(R, self._element(R))
        if word == "TPS":
            R = self.parens()
            return make_trunc_power_series(R, self.positive("truncation length"), cap=cap)
        raise ParseError(f"unknown ring constructor {word!r}", pos)

    def _element(self, R):
        _, idx, pos = self.index()
        if idx >= R.order:
            raise ParseError(f"element {idx} out of range for ring of order {R.order}", pos)
        return idx


def parse_ring_spec(text: str, cap: int | None = None) -> FiniteRing:
    p = _RingParser(text, cap)
    R = p.ring()
    tok = p.peek()
    if tok[0] != "end":
        raise ParseError(f"trailing input {tok[1]!r}", tok[2])
    return R


_POLY = re.compile(r"\s*poly\s*\[(.*)\]\s*$", re.S)
_ENTRY = re.compile(r"\s*(#?)(-?\d+)\s*$")


def parse_poly_literal(text: str, R: FiniteRing) -> CentralPolynomial:
    m = _POLY.match(text)
    if m is None:
        raise ParseError(f"polynomial literal must look like poly[c0,c1,...]: {text!r}", 0)
    body = m.group(1)
    coeffs = []
    if body.strip():
        offset = m.start(1)
        for part in body.split(","):
            e = _ENTRY.match(part)
            if e is None:
                raise ParseError(f"bad coefficient {part.strip()!r}", offset)
            value = int(e.group(2))
            if e.group(1):
                if not 0 <= value < R.order:
                    raise ParseError(f"element #{value} out of range", offset)
                coeffs.append(value)
            else:
                coeffs.append(canonical_int(R, value))
            offset += len(part) + 1
    return make_poly(R, coeffs)


def parse_int_poly_literal(text: str) -> list[int]:
    """Integer coefficients of a ``poly[...]`` literal (no ``#idx`` entries)."""
    m = _POLY.match(text)
    if m is None:
        raise ParseError(f"polynomial literal must look like poly[c0,c1,...]: {text!r}", 0)
    coeffs = []
    offset = m.start(1)
    for part in m.group(1).split(",") if m.group(1).strip() else []:
        e = _ENTRY.match(part)
        if e is None or e.group(1):
            raise ParseError(f"integer coefficient expected, got {part.strip()!r}", offset)
        coeffs.append(int(e.group(2)))
        offset += len(part) + 1
    return coeffs


def format_int_poly(coeffs) -> str:
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
        mag = abs(c)
        body = str(mag) if not mono else (mono if mag == 1 else f"{mag}*{mono}")
        sign = "-" if c < 0 else "+"
        terms.append((sign, body))
    if not terms:
        return "0"
    head_sign, head = terms[0]
    out = ("-" if head_sign == "-" else "") + head
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out
