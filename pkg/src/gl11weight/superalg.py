"""The Lie superalgebra gl(1|1) and its bosonic twin, plus tensors over them.

Basis order is H, G, Q+, Q- (indices 0..3).  H is central, ``[G, Q±] = ±Q±``
and ``[Q+, Q-] = H``.  In gl(1|1) the Q's are odd, so the bracket is
super-skew and ``[Q-, Q+] = +H``; the bosonic twin makes everything even
and flips that sign.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

H, G, QP, QM = range(4)
LABELS = ("H", "G", "Qp", "Qm")
DIM = 4

Index = tuple[int, ...]


def _invert(m: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    n = len(m)
    a = [list(map(Fraction, row)) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


@dataclass(frozen=True)
class AlgebraSpec:
    name: str
    parity: tuple[int, ...]
    # bracket[(i, j)] = {k: f_ij^k}
    bracket: Mapping[tuple[int, int], Mapping[int, Fraction]]
    metric: tuple[tuple[Fraction, ...], ...]
    dual: tuple[tuple[Fraction, ...], ...] = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "dual", tuple(map(tuple, _invert(self.metric))))

    def __hash__(self) -> int:
        return hash(self.name)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, AlgebraSpec) and other.name == self.name

    def f(self, i: int, j: int, k: int) -> Fraction:
        return self.bracket.get((i, j), {}).get(k, Fraction(0))

    def br(self, i: int, j: int) -> Mapping[int, Fraction]:
        return self.bracket.get((i, j), {})

    def sign(self, i: int, j: int) -> int:
        return -1 if self.parity[i] and self.parity[j] else 1

    def word_parity(self, word: Iterable[int]) -> int:
        return sum(self.parity[i] for i in word) & 1


def _make(name: str, odd: bool) -> AlgebraSpec:
    one = Fraction(1)
    s = one if odd else -one  # [Qm, Qp] = s H
    bracket = {
        (G, QP): {QP: one},
        (QP, G): {QP: -one},
        (G, QM): {QM: -one},
        (QM, G): {QM: one},
        (QP, QM): {H: one},
        (QM, QP): {H: s},
    }
    metric = [[Fraction(0)] * 4 for _ in range(4)]
    metric[H][G] = metric[G][H] = one
    metric[QP][QM] = one
    metric[QM][QP] = -one if odd else one
    parity = (0, 0, 1, 1) if odd else (0, 0, 0, 0)
    return AlgebraSpec(name, parity, bracket, tuple(map(tuple, metric)))


GL11 = _make("gl11", odd=True)
BOSONIC = _make("bosonic", odd=False)
SPECS = {"gl11": GL11, "bosonic": BOSONIC}

# Supertrace form on gl(1|1) in this basis; documented for reference only.
SUPERTRACE_PRODUCTS = {(H, G): -1, (G, H): -1, (QP, QM): -1}


class SuperTensor:
    """Rational combination of basis words of fixed length."""

    __slots__ = ("spec", "arity", "terms")

    def __init__(self, spec: AlgebraSpec, arity: int, terms: Mapping[Index, Fraction] | Iterable[tuple[Index, Fraction]] = ()):
        self.spec = spec
        self.arity = arity
        acc: dict[Index, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for w, k in items:
            w = tuple(w)
            if len(w) != arity:
                raise ValueError(f"word {w} has length {len(w)}, expected {arity}")
            acc[w] = acc.get(w, 0) + Fraction(k)
        self.terms: dict[Index, Fraction] = {w: k for w, k in acc.items() if k}

    @classmethod
    def word(cls, spec: AlgebraSpec, *letters: int, coeff: Fraction | int = 1) -> SuperTensor:
        return cls(spec, len(letters), {tuple(letters): Fraction(coeff)})

    def _check(self, other: SuperTensor) -> None:
        if other.arity != self.arity or other.spec != self.spec:
            raise ValueError("arity or algebra mismatch")

    def __add__(self, other: SuperTensor) -> SuperTensor:
        self._check(other)
        return SuperTensor(self.spec, self.arity, itertools.chain(self.terms.items(), other.terms.items()))

    def __neg__(self) -> SuperTensor:
        return self * -1

    def __sub__(self, other: SuperTensor) -> SuperTensor:
        return self + (-other)

    def __mul__(self, k: Fraction | int) -> SuperTensor:
        return SuperTensor(self.spec, self.arity, {w: v * k for w, v in self.terms.items()})

    __rmul__ = __mul__

    def __matmul__(self, other: SuperTensor) -> SuperTensor:
        """Tensor product (concatenation of words)."""
        if other.spec != self.spec:
            raise ValueError("algebra mismatch")
        return SuperTensor(
            self.spec,
            self.arity + other.arity,
            ((u + v, a * b) for u, a in self.terms.items() for v, b in other.terms.items()),
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SuperTensor):
            return NotImplemented
        return self.spec == other.spec and self.arity == other.arity and self.terms == other.terms

    def is_zero(self) -> bool:
        return not self.terms

    def __iter__(self) -> Iterator[tuple[Index, Fraction]]:
        return iter(sorted(self.terms.items()))

    def __repr__(self) -> str:
        return f"SuperTensor({format_tensor(self)})"


def format_tensor(t: SuperTensor) -> str:
    if t.is_zero():
        return "0"
    parts = []
    for w, k in t:
        mono = "*".join(LABELS[i] for i in w) or "1"
        sign = "-" if k < 0 else "+"
        mag = abs(k)
        parts.append(f"{sign} {mono}" if mag == 1 else f"{sign} {mag} {mono}")
    return " ".join(parts)


def permutation_sign(spec: AlgebraSpec, word: Index, sigma: Sequence[int]) -> int:
    odd = [i for i, x in enumerate(word) if spec.parity[x]]
    inv = sum(1 for a, b in itertools.combinations(odd, 2) if sigma[a] > sigma[b])
    return -1 if inv & 1 else 1


def koszul_permute(t: SuperTensor, sigma: Sequence[int]) -> SuperTensor:
    """Move the factor in slot i to slot sigma[i], with the Koszul sign."""
    if sorted(sigma) != list(range(t.arity)):
        raise ValueError(f"not a permutation of {t.arity} slots: {sigma}")
    out = {}
    for w, k in t.terms.items():
        nw = [0] * t.arity
        for i, x in enumerate(w):
            nw[sigma[i]] = x
        out[tuple(nw)] = k * permutation_sign(t.spec, w, sigma)
    return SuperTensor(t.spec, t.arity, out)


def place(t: SuperTensor, slots: Sequence[int], arity: int | None = None) -> SuperTensor:
    """Koszul-move the factors of ``t`` so factor i lands in ``slots[i]``."""
    arity = t.arity if arity is None else arity
    if arity != t.arity:
        raise ValueError("placement must fill all slots")
    return koszul_permute(t, slots)


def adjoint_action(x: int, t: SuperTensor) -> SuperTensor:
    spec = t.spec
    out: dict[Index, Fraction] = {}
    px = spec.parity[x]
    for w, k in t.terms.items():
        before = 0
        for i, v in enumerate(w):
            sgn = -1 if (px and before) else 1
            for r, f in spec.br(x, v).items():
                nw = w[:i] + (r,) + w[i + 1:]
                out[nw] = out.get(nw, 0) + sgn * f * k
            before ^= spec.parity[v]
    return SuperTensor(spec, t.arity, out)


def is_invariant(t: SuperTensor) -> bool:
    return all(adjoint_action(x, t).is_zero() for x in range(DIM))


# the fixed tensors

def tensor_C(spec: AlgebraSpec = GL11) -> SuperTensor:
    return SuperTensor(spec, 2, {(i, j): spec.dual[i][j] for i in range(DIM) for j in range(DIM)})


def tensor_F(spec: AlgebraSpec = GL11) -> SuperTensor:
    """``f_{lm}^i C^{mj} C^{lk} e_i e_j e_k``: a trivalent vertex with two legs capped."""
    c = spec.dual
    out: dict[Index, Fraction] = {}
    for (l, m), res in spec.bracket.items():
        for i, f in res.items():
            for j in range(DIM):
                for k in range(DIM):
                    v = f * c[m][j] * c[l][k]
                    if v:
                        out[(i, j, k)] = out.get((i, j, k), 0) + v
    return SuperTensor(spec, 3, out)


def tensor_B(spec: AlgebraSpec = GL11) -> SuperTensor:
    """The bubble ``C^{kn} C^{lm} f_{kl}^i f_{mn}^j e_i e_j``."""
    c = spec.dual
    out: dict[Index, Fraction] = {}
    for (k, l), r1 in spec.bracket.items():
        for (m, n), r2 in spec.bracket.items():
            w = c[k][n] * c[l][m]
            if not w:
                continue
            for i, f1 in r1.items():
                for j, f2 in r2.items():
                    out[(i, j)] = out.get((i, j), 0) + w * f1 * f2
    return SuperTensor(spec, 2, out)


def tensor_K(spec: AlgebraSpec = GL11) -> SuperTensor:
    """``C^{im} C^{np} C^{ql} f_{mn}^j f_{pq}^k e_i e_j e_k e_l``: two vertices in a ladder."""
    c = spec.dual
    out: dict[Index, Fraction] = {}
    for (m, n), r1 in spec.bracket.items():
        for (p, q), r2 in spec.bracket.items():
            w = c[n][p]
            if not w:
                continue
            for i in range(DIM):
                for l in range(DIM):
                    v = w * c[i][m] * c[q][l]
                    if not v:
                        continue
                    for j, f1 in r1.items():
                        for k, f2 in r2.items():
                            key = (i, j, k, l)
                            out[key] = out.get(key, 0) + v * f1 * f2
    return SuperTensor(spec, 4, out)


def pair_product(a: SuperTensor, b: SuperTensor, slots_a: tuple[int, int], slots_b: tuple[int, int]) -> SuperTensor:
    """Two 2-tensors placed on four slots, e.g. ``B_13 C_24``."""
    return koszul_permute(a @ b, (*slots_a, *slots_b))


def tensor_M(spec: AlgebraSpec = GL11) -> SuperTensor:
    b, c = tensor_B(spec), tensor_C(spec)
    return (
        pair_product(b, c, (0, 2), (1, 3))
        + pair_product(c, b, (0, 2), (1, 3))
        - pair_product(c, b, (0, 3), (1, 2))
        - pair_product(b, c, (0, 3), (1, 2))
    )


def tensor_N(spec: AlgebraSpec = GL11) -> SuperTensor:
    c = tensor_C(spec)
    return pair_product(c, c, (0, 2), (1, 3)) - pair_product(c, c, (0, 3), (1, 2))


def h_power_tensor(spec: AlgebraSpec, m: int) -> SuperTensor:
    return SuperTensor.word(spec, *([H] * m))


def jacobi_violations(spec: AlgebraSpec) -> list[tuple[int, int, int]]:
    """Triples where the super Jacobi identity fails (expected: none).

    Checks ``[x,[y,z]] = [[x,y],z] + (-1)^{|x||y|} [y,[x,z]]``.
    """
    def br_vec(i: int, vec: Mapping[int, Fraction]) -> dict[int, Fraction]:
        out: dict[int, Fraction] = {}
        for j, a in vec.items():
            for k, f in spec.br(i, j).items():
                out[k] = out.get(k, 0) + a * f
        return out

    def vec_br(vec: Mapping[int, Fraction], j: int) -> dict[int, Fraction]:
        out: dict[int, Fraction] = {}
        for i, a in vec.items():
            for k, f in spec.br(i, j).items():
                out[k] = out.get(k, 0) + a * f
        return out

    bad = []
    for x, y, z in itertools.product(range(DIM), repeat=3):
        lhs = br_vec(x, spec.br(y, z))
        r1 = vec_br(spec.br(x, y), z)
        r2 = br_vec(y, spec.br(x, z))
        s = spec.sign(x, y)
        for k in range(DIM):
            if lhs.get(k, 0) != r1.get(k, 0) + s * r2.get(k, 0):
                bad.append((x, y, z))
                break
    return bad


def skew_violations(spec: AlgebraSpec) -> list[tuple[int, int]]:
    """Pairs with ``[x,y] != -(-1)^{|x||y|} [y,x]`` (expected: none)."""
    bad = []
    for x, y in itertools.product(range(DIM), repeat=2):
        a, b = spec.br(x, y), spec.br(y, x)
        s = spec.sign(x, y)
        if any(a.get(k, 0) != -s * b.get(k, 0) for k in range(DIM)):
            bad.append((x, y))
    return bad


def metric_invariance_violations(spec: AlgebraSpec) -> list[tuple[int, int, int]]:
    """Triples with ``<[x,y],z> != <x,[y,z]>`` (expected: none)."""
    m = spec.metric
    bad = []
    for x, y, z in itertools.product(range(DIM), repeat=3):
        lhs = sum((f * m[k][z] for k, f in spec.br(x, y).items()), Fraction(0))
        rhs = sum((f * m[x][k] for k, f in spec.br(y, z).items()), Fraction(0))
        if lhs != rhs:
            bad.append((x, y, z))
    return bad
