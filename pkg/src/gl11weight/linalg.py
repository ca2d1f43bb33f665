"""Exact sparse linear algebra over the rationals.

Vectors are dicts from hashable coordinates to ``Fraction``.  Only what the
oracle needs: rank, solving a small consistent system, and kernels.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Iterable, Mapping, Sequence

Vector = Mapping[Hashable, Fraction]


class Echelon:
    """Incrementally reduced set of vectors, each with a distinct pivot coordinate."""

    def __init__(self) -> None:
        self.rows: dict[Hashable, dict[Hashable, Fraction]] = {}

    def reduce(self, v: Vector) -> dict[Hashable, Fraction]:
        v = {k: Fraction(x) for k, x in v.items() if x}
        changed = True
        while changed:
            changed = False
            for k in list(v):
                row = self.rows.get(k)
                if row is None or k not in v:
                    continue
                f = v[k]
                for j, x in row.items():
                    nv = v.get(j, 0) - f * x
                    if nv:
                        v[j] = nv
                    else:
                        v.pop(j, None)
                changed = True
        return v

    def add(self, v: Vector) -> bool:
        """Insert ``v``; return False if it was already in the span."""
        r = self.reduce(v)
        if not r:
            return False
        pivot = min(r, key=repr)
        inv = 1 / r[pivot]
        self.rows[pivot] = {k: x * inv for k, x in r.items()}
        return True

    @property
    def rank(self) -> int:
        return len(self.rows)


def rank(vectors: Iterable[Vector]) -> int:
    e = Echelon()
    for v in vectors:
        e.add(v)
    return e.rank


class InconsistentSystem(ArithmeticError):
    pass


def solve(columns: Sequence[Vector], target: Vector) -> list[Fraction]:
    """Coefficients ``a`` with ``sum a_k columns[k] = target``.

    The columns must be linearly independent.  Raises ``InconsistentSystem``
    if the target is outside their span.
    """
    coords = sorted({k for col in columns for k in col} | set(target), key=repr)
    n = len(columns)
    rows = []
    for k in coords:
        row = [Fraction(col.get(k, 0)) for col in columns] + [Fraction(target.get(k, 0))]
        if any(row):
            rows.append(row)
    piv_cols = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            raise ValueError("columns are linearly dependent")
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        piv_cols.append(c)
        r += 1
    for i in range(r, len(rows)):
        if rows[i][n] != 0:
            raise InconsistentSystem("target is not in the span of the columns")
    return [rows[i][n] for i in range(n)]


def nullspace(columns: Sequence[Vector]) -> list[dict[int, Fraction]]:
    """Basis of ``{a : sum_j a_j columns[j] = 0}``, as sparse dicts over column indices."""
    rows: dict[Hashable, dict[int, Fraction]] = {}
    for j, col in enumerate(columns):
        for k, x in col.items():
            if x:
                rows.setdefault(k, {})[j] = Fraction(x)
    pivots: dict[int, dict[int, Fraction]] = {}
    for row in rows.values():
        for p in [v for v in row if v in pivots]:
            f = row.get(p)
            if not f:
                continue
            for v, x in pivots[p].items():
                nv = row.get(v, 0) - f * x
                if nv:
                    row[v] = nv
                else:
                    row.pop(v, None)
        if not row:
            continue
        p = min(row)
        inv = 1 / row[p]
        row = {v: x * inv for v, x in row.items()}
        for other in pivots.values():
            f = other.get(p)
            if f:
                for v, x in row.items():
                    nv = other.get(v, 0) - f * x
                    if nv:
                        other[v] = nv
                    else:
                        other.pop(v, None)
        pivots[p] = row
    basis = []
    for free in range(len(columns)):
        if free in pivots:
            continue
        vec = {free: Fraction(1)}
        for p, row in pivots.items():
            if row.get(free):
                vec[p] = -row[free]
        basis.append(vec)
    return basis
