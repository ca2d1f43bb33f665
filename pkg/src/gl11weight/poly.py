"""Exact bivariate polynomials in the generators ``c`` and ``y``.

Coefficients are Python ints or ``Fraction``s.  A ``Fraction`` with unit
denominator is normalized back to ``int`` so that integral polynomials
compare and hash identically regardless of how they were produced.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Union

Number = Union[int, Fraction]
Exponent = tuple[int, int]


def _normalize(k: Number) -> Number:
    if isinstance(k, Fraction) and k.denominator == 1:
        return int(k.numerator)
    return k


class WeightPoly:
    """Immutable polynomial ``sum k * c^a * y^b`` keyed by ``(a, b)``."""

    __slots__ = ("_coeffs", "_hash")

    def __init__(self, coeffs: Mapping[Exponent, Number] | Iterable[tuple[Exponent, Number]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict[Exponent, Number] = {}
        for (a, b), k in items:
            if a < 0 or b < 0:
                raise ValueError(f"negative exponent ({a}, {b})")
            acc[(a, b)] = acc.get((a, b), 0) + k
        self._coeffs = {e: _normalize(k) for e, k in acc.items() if k != 0}
        self._hash: int | None = None

    # construction helpers

    @classmethod
    def const(cls, k: Number) -> WeightPoly:
        return cls({(0, 0): k})

    @classmethod
    def monomial(cls, a: int, b: int, k: Number = 1) -> WeightPoly:
        return cls({(a, b): k})

    @property
    def coeffs(self) -> dict[Exponent, Number]:
        return dict(self._coeffs)

    def coeff(self, a: int, b: int) -> Number:
        return self._coeffs.get((a, b), 0)

    def terms(self) -> list[tuple[Exponent, Number]]:
        """Terms in display order: descending c-exponent, then descending y-exponent."""
        return sorted(self._coeffs.items(), key=lambda t: (-t[0][0], -t[0][1]))

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_integral(self) -> bool:
        return all(isinstance(k, int) for k in self._coeffs.values())

    def is_homogeneous(self, n: int) -> bool:
        """True iff every term has weight ``n`` where wt(c)=1, wt(y)=2."""
        return all(a + 2 * b == n for a, b in self._coeffs)

    # arithmetic

    def __add__(self, other: WeightPoly | Number) -> WeightPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._coeffs)
        for e, k in other._coeffs.items():
            out[e] = out.get(e, 0) + k
        return WeightPoly(out)

    __radd__ = __add__

    def __neg__(self) -> WeightPoly:
        return WeightPoly({e: -k for e, k in self._coeffs.items()})

    def __sub__(self, other: WeightPoly | Number) -> WeightPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Number) -> WeightPoly:
        return _coerce(other) - self

    def __mul__(self, other: WeightPoly | Number) -> WeightPoly:
        if isinstance(other, (int, Fraction)):
            return WeightPoly({e: k * other for e, k in self._coeffs.items()})
        if not isinstance(other, WeightPoly):
            return NotImplemented
        out: dict[Exponent, Number] = {}
        for (a1, b1), k1 in self._coeffs.items():
            for (a2, b2), k2 in other._coeffs.items():
                e = (a1 + a2, b1 + b2)
                out[e] = out.get(e, 0) + k1 * k2
        return WeightPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> WeightPoly:
        if k < 0:
            raise ValueError("negative power")
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = WeightPoly.const(other)
        if not isinstance(other, WeightPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._coeffs.items()))
        return self._hash

    def eval(self, c_val: Number, y_val: Number) -> Number:
        total: Number = 0
        for (a, b), k in self._coeffs.items():
            total += k * Fraction(c_val) ** a * Fraction(y_val) ** b
        return _normalize(Fraction(total))

    def ddc(self) -> WeightPoly:
        """Formal partial derivative in c."""
        return WeightPoly({(a - 1, b): a * k for (a, b), k in self._coeffs.items() if a})

    # rendering

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"WeightPoly({render(self)!r})"

    def to_json(self) -> dict:
        return {"terms": [{"c": a, "y": b, "k": _json_number(k)} for (a, b), k in self.terms()]}

    @classmethod
    def from_json(cls, obj: Mapping) -> WeightPoly:
        return cls({(t["c"], t["y"]): Fraction(t["k"]) for t in obj["terms"]})


def _json_number(k: Number) -> int | str:
    return k if isinstance(k, int) else str(k)


def _coerce(x):
    if isinstance(x, WeightPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return WeightPoly.const(x)
    return NotImplemented


ZERO = WeightPoly()
ONE = WeightPoly.const(1)
C = WeightPoly.monomial(1, 0)
Y = WeightPoly.monomial(0, 1)


def _render_monomial(a: int, b: int) -> str:
    parts = []
    if a:
        parts.append("c" if a == 1 else f"c^{a}")
    if b:
        parts.append("y" if b == 1 else f"y^{b}")
    return "*".join(parts)


def render(p: WeightPoly) -> str:
    """Canonical text, e.g. ``c^5 - 4*c^3*y + 3*c*y^2``."""
    if p.is_zero():
        return "0"
    out = []
    for i, ((a, b), k) in enumerate(p.terms()):
        sign = "-" if k < 0 else "+"
        mag = -k if k < 0 else k
        mono = _render_monomial(a, b)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if i == 0:
            out.append(("-" if sign == "-" else "") + body)
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


_TERM = re.compile(r"\s*([+-]?)\s*([^+-]+)")
_FACTOR = re.compile(r"(\d+(?:/\d+)?)|([cy])(?:\s*\^\s*(\d+))?")


def parse(text: str) -> WeightPoly:
    """Parse polynomial text.

    Accepts the canonical form as well as juxtaposition for products
    (``c^4 - 3 c^2 y + y^2``).
    """
    src = text.strip()
    if not src:
        raise ValueError("empty polynomial")
    pos = 0
    acc: dict[Exponent, Number] = {}
    first = True
    while pos < len(src):
        m = _TERM.match(src, pos)
        if not m or (not first and not m.group(1)):
            raise ValueError(f"cannot parse polynomial {text!r}")
        first = False
        sign = -1 if m.group(1) == "-" else 1
        body = m.group(2).strip()
        k: Number = sign
        a = b = 0
        i = 0
        while i < len(body):
            if body[i] in " *":
                i += 1
                continue
            f = _FACTOR.match(body, i)
            if not f or f.end() == i:
                raise ValueError(f"cannot parse term {body!r} in {text!r}")
            if f.group(1):
                k *= Fraction(f.group(1))
            else:
                e = int(f.group(3)) if f.group(3) else 1
                if f.group(2) == "c":
                    a += e
                else:
                    b += e
            i = f.end()
        acc[(a, b)] = acc.get((a, b), 0) + k
        pos = m.end()
    return WeightPoly(acc)


# functional aliases

def poly_add(p: WeightPoly, q: WeightPoly) -> WeightPoly:
    return p + q


def poly_mul(p: WeightPoly, q: WeightPoly) -> WeightPoly:
    return p * q


def poly_eval(p: WeightPoly, c_val: Number, y_val: Number) -> Number:
    return p.eval(c_val, y_val)


def poly_ddc(p: WeightPoly) -> WeightPoly:
    return p.ddc()
