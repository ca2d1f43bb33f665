"""Brute-force evaluation of the weight system through the enveloping algebra.

A diagram of order n becomes a tensor in L^{⊗2n}: one copy of the dual
metric per chord, with its two legs moved (with Koszul signs) to the chord's
endpoint positions.  Multiplying out each word in U(L) and normal ordering
gives a central element, which is then written as a polynomial in the
Casimir c and in y (the image of the trivalent tensor F).
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from math import comb
from typing import Iterable, Mapping

from . import linalg
from .diagrams import ChordDiagram
from .poly import WeightPoly
from .superalg import (
    BOSONIC, DIM, G, GL11, H, QM, QP, AlgebraSpec, SuperTensor, adjoint_action, is_invariant,
    koszul_permute, tensor_B, tensor_C, tensor_F, tensor_K, tensor_M, tensor_N,
)

Mono = tuple[int, int, int, int]  # exponents of h, g, q+, q-
ONE_MONO: Mono = (0, 0, 0, 0)
GENERATOR_NAMES = ("h", "g", "qp", "qm")


class UEAElement:
    """Normal-ordered element of U(L) with generator order h < g < q+ < q-."""

    __slots__ = ("spec", "terms")

    def __init__(self, spec: AlgebraSpec, terms: Mapping[Mono, Fraction] | Iterable[tuple[Mono, Fraction]] = ()):
        self.spec = spec
        acc: dict[Mono, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for m, k in items:
            acc[m] = acc.get(m, 0) + Fraction(k)
        self.terms = {m: k for m, k in acc.items() if k}

    @classmethod
    def one(cls, spec: AlgebraSpec = GL11) -> UEAElement:
        return cls(spec, {ONE_MONO: 1})

    @classmethod
    def generator(cls, i: int, spec: AlgebraSpec = GL11) -> UEAElement:
        m = [0, 0, 0, 0]
        m[i] = 1
        return cls(spec, {tuple(m): 1})

    def __add__(self, other: UEAElement) -> UEAElement:
        return UEAElement(self.spec, itertools.chain(self.terms.items(), other.terms.items()))

    def __neg__(self) -> UEAElement:
        return self * -1

    def __sub__(self, other: UEAElement) -> UEAElement:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, UEAElement):
            return pbw_multiply(self, other)
        return UEAElement(self.spec, {m: k * other for m, k in self.terms.items()})

    def __rmul__(self, k):
        return self * k

    def __pow__(self, e: int) -> UEAElement:
        out = UEAElement.one(self.spec)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UEAElement):
            return NotImplemented
        return self.spec == other.spec and self.terms == other.terms

    def is_zero(self) -> bool:
        return not self.terms

    def parity_parts(self) -> dict[int, UEAElement]:
        parts: dict[int, dict[Mono, Fraction]] = {}
        for m, k in self.terms.items():
            p = sum(e * self.spec.parity[i] for i, e in enumerate(m)) & 1
            parts.setdefault(p, {})[m] = k
        return {p: UEAElement(self.spec, t) for p, t in parts.items()}

    def __repr__(self) -> str:
        return f"UEAElement({format_uea(self)})"


def format_uea(z: UEAElement) -> str:
    if z.is_zero():
        return "0"
    out = []
    for m, k in sorted(z.terms.items(), reverse=True):
        mono = "*".join(
            name if e == 1 else f"{name}^{e}" for name, e in zip(GENERATOR_NAMES, m) if e
        ) or "1"
        sign = "-" if k < 0 else "+"
        mag = abs(k)
        out.append(f"{sign} {mono}" if mag == 1 else f"{sign} {mag}*{mono}")
    text = " ".join(out)
    return text[2:] if text.startswith("+ ") else text


# normal ordering

_MUL_CACHE: dict[tuple[str, Mono, int], dict[Mono, Fraction]] = {}


def _add_into(acc: dict[Mono, Fraction], part: Mapping[Mono, Fraction], k: Fraction) -> None:
    for m, v in part.items():
        nv = acc.get(m, 0) + k * v
        if nv:
            acc[m] = nv
        else:
            acc.pop(m, None)


def mono_times_letter(spec: AlgebraSpec, mono: Mono, x: int) -> dict[Mono, Fraction]:
    """Normal-ordered ``mono * x``."""
    key = (spec.name, mono, x)
    hit = _MUL_CACHE.get(key)
    if hit is not None:
        return hit
    top = max((i for i in range(DIM) if mono[i]), default=-1)
    if top < x or (top == x and not spec.parity[x]):
        m = list(mono)
        m[x] += 1
        out = {tuple(m): Fraction(1)}
    else:
        prefix = list(mono)
        prefix[top] -= 1
        prefix = tuple(prefix)
        out: dict[Mono, Fraction] = {}
        if top == x:
            # odd x: x x = [x, x] / 2
            for r, f in spec.br(x, x).items():
                _add_into(out, mono_times_letter(spec, prefix, r), f / 2)
        else:
            # u x = (-1)^{|u||x|} x u + [u, x]
            for m, k in mono_times_letter(spec, prefix, x).items():
                _add_into(out, mono_times_letter(spec, m, top), k * spec.sign(top, x))
            for r, f in spec.br(top, x).items():
                _add_into(out, mono_times_letter(spec, prefix, r), f)
    _MUL_CACHE[key] = out
    return out


def times_letter(z: UEAElement, x: int) -> UEAElement:
    acc: dict[Mono, Fraction] = {}
    for m, k in z.terms.items():
        _add_into(acc, mono_times_letter(z.spec, m, x), k)
    return UEAElement(z.spec, acc)


def _letters(mono: Mono) -> list[int]:
    return [i for i in range(DIM) for _ in range(mono[i])]


def pbw_multiply(a: UEAElement, b: UEAElement) -> UEAElement:
    if a.spec != b.spec:
        raise ValueError("algebra mismatch")
    total: dict[Mono, Fraction] = {}
    for mb, kb in b.terms.items():
        z = a
        for x in _letters(mb):
            z = times_letter(z, x)
        _add_into(total, z.terms, kb)
    return UEAElement(a.spec, total)


def project_to_uea(t: SuperTensor) -> UEAElement:
    """Sum over words of the left-to-right product of their letters."""
    spec = t.spec
    # share work between words with a common prefix
    cache: dict[tuple[int, ...], dict[Mono, Fraction]] = {(): {ONE_MONO: Fraction(1)}}

    def prefix_value(w: tuple[int, ...]) -> dict[Mono, Fraction]:
        hit = cache.get(w)
        if hit is not None:
            return hit
        head = prefix_value(w[:-1])
        acc: dict[Mono, Fraction] = {}
        for m, k in head.items():
            _add_into(acc, mono_times_letter(spec, m, w[-1]), k)
        cache[w] = acc
        return acc

    total: dict[Mono, Fraction] = {}
    for w, k in sorted(t.terms.items()):
        _add_into(total, prefix_value(w), k)
    return UEAElement(spec, total)


# diagrams

def diagram_tensor(d: ChordDiagram, spec: AlgebraSpec = GL11) -> SuperTensor:
    chords = sorted(d.chords)
    t = SuperTensor(spec, 0, {(): Fraction(1)})
    c = tensor_C(spec)
    for _ in chords:
        t = t @ c
    sigma = [p for chord in chords for p in chord]
    return koszul_permute(t, sigma)


def casimir(spec: AlgebraSpec = GL11) -> UEAElement:
    return project_to_uea(tensor_C(spec))


def y_element(spec: AlgebraSpec = GL11) -> UEAElement:
    """Image of the trivalent tensor F; equals -h^2 for gl(1|1)."""
    return project_to_uea(tensor_F(spec))


class NotInImage(ArithmeticError):
    pass


def center_to_cy(z: UEAElement, n: int) -> WeightPoly:
    spec = z.spec
    c, y = casimir(spec), y_element(spec)
    basis = [(c ** (n - 2 * k)) * (y ** k) for k in range(n // 2 + 1)]
    try:
        coeffs = linalg.solve([b.terms for b in basis], z.terms)
    except linalg.InconsistentSystem as exc:
        raise NotInImage(f"{format_uea(z)} is not a combination of c^(n-2k) y^k for n={n}") from exc
    if any(a.denominator != 1 for a in coeffs):
        raise NotInImage(f"non-integral coefficients {coeffs}")
    return WeightPoly({(n - 2 * k, k): a for k, a in enumerate(coeffs)})


def oracle_weight(d: ChordDiagram, spec: AlgebraSpec = GL11) -> WeightPoly:
    return center_to_cy(project_to_uea(diagram_tensor(d, spec)), d.n)


def super_commutator(x: UEAElement, z: UEAElement) -> UEAElement:
    """``[x, z]`` for homogeneous x, applied to each parity part of z."""
    (px, xh), = x.parity_parts().items() if len(x.parity_parts()) == 1 else ((None, None),)
    if xh is None:
        raise ValueError("first argument must be homogeneous")
    out = UEAElement(z.spec)
    for pz, zh in z.parity_parts().items():
        s = -1 if px and pz else 1
        out = out + pbw_multiply(x, zh) - pbw_multiply(zh, x) * s
    return out


def centrality_check(z: UEAElement) -> bool:
    return all(
        super_commutator(UEAElement.generator(i, z.spec), z).is_zero() for i in (G, QP, QM)
    )


# tensor identities and invariant counts

def tensor_identity_suite(spec: AlgebraSpec = GL11) -> dict[str, bool]:
    """Name -> holds, for the fixed identities among the small invariant tensors.

    The ladder/bubble relation is ``K = M/2`` for gl(1|1) and ``K = -M/2``
    for the bosonic twin; both read ``K = -(beta/4) M`` with ``B = beta H H``.
    """
    c, f, b, k, m, n = (fn(spec) for fn in (tensor_C, tensor_F, tensor_B, tensor_K, tensor_M, tensor_N))
    hh = SuperTensor.word(spec, H, H)
    odd = bool(spec.parity[QP])
    beta = -2 if odd else 2
    h_sq = UEAElement(spec, {(2, 0, 0, 0): Fraction(-1 if odd else 1)})
    report = {
        f"B = {beta}*H*H": b == hh * beta,
        "K = M/2" if odd else "K = -M/2": k == m * Fraction(-beta, 4),
        "F image = -h^2" if odd else "F image = h^2": project_to_uea(f) == h_sq,
    }
    for name, t in (("C", c), ("F", f), ("B", b), ("K", k), ("M", m), ("N", n)):
        report[f"{name} invariant"] = is_invariant(t)
    return report


def invariant_dimension(m: int, spec: AlgebraSpec = GL11) -> int:
    """Dimension of the joint kernel of the adjoint action on L^{⊗m}."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    echelon = linalg.Echelon()
    words = list(itertools.product(range(DIM), repeat=m))
    # columns of the stacked operator, one per basis word
    for w in words:
        t = SuperTensor(spec, m, {w: Fraction(1)})
        col: dict = {}
        for x in range(DIM):
            for out, v in adjoint_action(x, t).terms.items():
                col[(x, out)] = v
        echelon.add(col)
    return len(words) - echelon.rank


def invariant_basis(m: int, spec: AlgebraSpec = GL11) -> list[SuperTensor]:
    """A basis of the invariant tensors in L^{⊗m}."""
    words = list(itertools.product(range(DIM), repeat=m))
    columns = []
    for w in words:
        t = SuperTensor(spec, m, {w: Fraction(1)})
        col: dict = {}
        for x in range(DIM):
            for out, v in adjoint_action(x, t).terms.items():
                col[(x, out)] = v
        columns.append(col)
    return [SuperTensor(spec, m, {words[j]: v for j, v in vec.items()}) for vec in linalg.nullspace(columns)]


def expected_invariant_dimension(m: int) -> int:
    return comb(2 * m - 2, m - 1)


def sample_diagrams(n: int, count: int, seed: int = 0) -> list[ChordDiagram]:
    """``count`` random perfect matchings of order ``n`` (uniform over matchings)."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        pts = list(range(2 * n))
        rng.shuffle(pts)
        out.append(ChordDiagram(zip(pts[::2], pts[1::2])))
    return out
