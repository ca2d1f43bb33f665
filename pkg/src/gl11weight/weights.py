"""The universal gl(1|1) weight system, computed by a chord-deletion recursion.

For a chord ``a`` of ``D`` crossed by chords ``b_1 .. b_k``::

    W(D) = c W(D - a) - y sum_i W(D - a - b_i)
           + y sum_{i<j} [W(D+-) + W(D-+) - W(Dl) - W(Dr)]

where the last four diagrams reconnect the ends of ``b_i`` and ``b_j``
(see ``diagrams.surgery_quadruple``).  Values are memoized on canonical
forms in a process-wide dict.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .diagrams import Chord, ChordDiagram, DiagramSum, decompose, s_operator, surgery_quadruple
from .poly import C, ONE, Y, ZERO, WeightPoly

_CACHE: dict[tuple[Chord, ...], WeightPoly] = {}


def clear_cache() -> None:
    _CACHE.clear()


def cache_size() -> int:
    return len(_CACHE)


def pick_pivot(d: ChordDiagram) -> Chord:
    """Chord with the fewest crossings; ties go to the smallest endpoint."""
    return min(d.chords, key=lambda a: (len(d.crossing_with(a)), a))


def expand_at(d: ChordDiagram, a: Chord) -> list[tuple[ChordDiagram, WeightPoly]]:
    """One step of the recursion at pivot ``a`` as (subdiagram, multiplier) pairs."""
    a = tuple(sorted(a))
    crossing = d.crossing_with(a)
    rest = [c for c in d.chords if c != a]
    out = [(ChordDiagram(rest), C)]
    minus_y = -Y
    for b in crossing:
        out.append((ChordDiagram(c for c in rest if c != b), minus_y))
    for i in range(len(crossing)):
        for j in range(i + 1, len(crossing)):
            pm, mp, l, r = surgery_quadruple(d, a, crossing[i], crossing[j])
            out += [(pm, Y), (mp, Y), (l, minus_y), (r, minus_y)]
    return out


def eval_weight(d: ChordDiagram) -> WeightPoly:
    if not d.chords:
        return ONE
    key = d.canonical()
    hit = _CACHE.get(key.chords)
    if hit is not None:
        return hit
    value = ZERO
    for sub, mult in expand_at(key, pick_pivot(key)):
        value = value + mult * eval_weight(sub)
    return _CACHE.setdefault(key.chords, value)


def eval_weight_with_pivot(d: ChordDiagram, a: Chord) -> WeightPoly:
    """The recursion with a caller-chosen first pivot (subdiagrams use the default)."""
    if not d.chords:
        return ONE
    value = ZERO
    for sub, mult in expand_at(d, a):
        value = value + mult * eval_weight(sub)
    return value


def eval_sum(s: DiagramSum) -> WeightPoly:
    value = ZERO
    for d, k in s.terms.items():
        value = value + eval_weight(d) * k
    return value


def eval_weight_multiplicative(d: ChordDiagram) -> WeightPoly:
    value = ONE
    for part in decompose(d):
        value = value * eval_weight(part)
    return value


def deframe_by_substitution(d: ChordDiagram) -> WeightPoly:
    w = eval_weight(d)
    return WeightPoly({(0, b): k for (a, b), k in w.coeffs.items() if a == 0})


class DeframingError(ArithmeticError):
    pass


def psi_sum(d: ChordDiagram) -> WeightPoly:
    """The alternating sum over iterated chord deletions, with no checks.

    ``sum_k (-1)^k / k! * c^k * W(s^k D)``, accumulated over the rationals.
    """
    total = ZERO
    level = DiagramSum([(d, 1)])
    for k in range(d.n + 1):
        total = total + eval_sum(level) * (C ** k) * Fraction((-1) ** k, factorial(k))
        level = s_operator(level)
    return total


def deframe_by_psi(d: ChordDiagram) -> WeightPoly:
    """``psi_sum`` with its integrality and its agreement with ``c = 0`` asserted."""
    total = psi_sum(d)
    if not total.is_integral():
        raise DeframingError(f"non-integral deframing {total} for {d}")
    expected = deframe_by_substitution(d)
    if total != expected:
        raise DeframingError(f"deframing mismatch for {d}: {total} vs {expected}")
    return total


def coefficient_checks(d: ChordDiagram) -> tuple[int, int]:
    """Coefficients of ``c^n`` and ``c^(n-2) y`` in W(D)."""
    w = eval_weight(d)
    n = d.n
    sub = w.coeff(n - 2, 1) if n >= 2 else 0
    return w.coeff(n, 0), sub
