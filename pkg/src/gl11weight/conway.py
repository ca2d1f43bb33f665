"""The Alexander-Conway weight system via boundary components of ribbon surfaces.

Thicken the circle to a disk and each chord to an untwisted band.  Walking
the boundary, the arc that ends at endpoint ``e`` continues along the band
and resumes with the arc that starts at ``partner(e)``.  Arc ``i`` runs from
point ``i`` to point ``i+1``, so the successor map on arcs is
``i -> partner(i + 1)``.  The weight is 1 when the boundary is connected.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .diagrams import Chord, ChordDiagram, enumerate_diagrams, remove_chords
from .weights import eval_weight


@dataclass(frozen=True)
class SurfaceTrace:
    cycles: tuple[tuple[int, ...], ...]

    @property
    def count(self) -> int:
        return len(self.cycles)

    def cycle_of(self, arc: int) -> int:
        return next(i for i, cyc in enumerate(self.cycles) if arc in cyc)


def surface_trace(d: ChordDiagram) -> SurfaceTrace:
    m = d.size
    if m == 0:
        return SurfaceTrace(((),))
    partner = d.partner
    seen = [False] * m
    cycles = []
    for start in range(m):
        if seen[start]:
            continue
        cyc = []
        i = start
        while not seen[i]:
            seen[i] = True
            cyc.append(i)
            i = partner[(i + 1) % m]
        cycles.append(tuple(cyc))
    return SurfaceTrace(tuple(cycles))


def boundary_components(d: ChordDiagram) -> int:
    return surface_trace(d).count


def conway_weight(d: ChordDiagram) -> int:
    return int(boundary_components(d) == 1)


def lemma2_check(d: ChordDiagram, chord: Chord) -> bool:
    """Check: the boundary of D is connected iff removing ``chord`` leaves two
    boundary components with the chord's endpoints on different ones.
    """
    chord = tuple(sorted(chord))
    rest = remove_chords(d, [chord])
    trace = surface_trace(rest)
    if d.n == 1:
        split = False  # both endpoints sit on the single boundary circle
    else:
        # Position of each endpoint inside the smaller circle: the endpoint
        # sits on the arc of D - chord that contains it.
        p, q = chord
        others = sorted(x for c in d.chords if c != chord for x in c)

        def arc_of(pt: int) -> int:
            before = sum(1 for x in others if x < pt)
            return (before - 1) % len(others)

        split = trace.cycle_of(arc_of(p)) != trace.cycle_of(arc_of(q))
    expected = trace.count == 2 and split
    return (conway_weight(d) == 1) == expected


@dataclass
class Calibration:
    sigma: int | None
    max_order: int
    checked: int
    failures: dict[int, list[str]] = field(default_factory=dict)
    informative: dict[int, int] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "sigma": self.sigma,
            "max_order": self.max_order,
            "diagrams_checked": self.checked,
            "failures_by_candidate": {str(k): v[:5] for k, v in self.failures.items()},
            "informative_diagrams_by_candidate": {str(k): v for k, v in self.informative.items()},
        }


class CalibrationError(ArithmeticError):
    pass


def calibrate_specialization(max_order: int = 6) -> Calibration:
    """Find the sign s in {+1, -1} with conway_weight(D) = W(D) at c=0, y=s
    for every diagram of order <= max_order.
    """
    if max_order < 4:
        raise ValueError("max_order must be at least 4")
    failures: dict[int, list[str]] = {1: [], -1: []}
    informative = {1: 0, -1: 0}
    checked = 0
    for n in range(max_order + 1):
        for d in enumerate_diagrams(n):
            checked += 1
            w = eval_weight(d)
            nab = conway_weight(d)
            vals = {s: w.eval(0, s) for s in (1, -1)}
            for s, v in vals.items():
                if v != nab:
                    failures[s].append(str(d))
            if vals[1] != vals[-1]:
                for s, v in vals.items():
                    if v == nab:
                        informative[s] += 1
    good = [s for s in (1, -1) if not failures[s]]
    cal = Calibration(good[0] if len(good) == 1 else None, max_order, checked, failures, informative)
    if len(good) != 1:
        raise CalibrationError(f"no unique sign: {cal.to_json()}")
    return cal
