"""Chord diagrams on an oriented circle.

A diagram of order ``n`` is a perfect matching of ``2n`` points numbered
``0 .. 2n-1`` counterclockwise.  Diagrams are stored with dense positions;
constructors accept any distinct integer (or sortable) positions and compact
them while preserving cyclic order.  Two diagrams that differ by a rotation
are the same diagram; ``canonical()`` picks the lexicographically least
sorted pair list among the ``2n`` rotations.  Reflections are not quotiented.
"""

from __future__ import annotations

import itertools
import re
from functools import lru_cache
from typing import Hashable, Iterable, Iterator, Mapping, Sequence

Chord = tuple[int, int]


class DiagramError(ValueError):
    """Raised on malformed pairings and bad chord references."""


def _compact(pairs: Iterable[tuple[Hashable, Hashable]]) -> tuple[Chord, ...]:
    pairs = list(pairs)
    points = [p for pair in pairs for p in pair]
    for p, q in pairs:
        if p == q:
            raise DiagramError(f"fixed point at {p!r}")
    if len(set(points)) != len(points):
        seen = set()
        dup = next(p for p in points if p in seen or seen.add(p))
        raise DiagramError(f"position {dup!r} used by more than one chord")
    rank = {p: i for i, p in enumerate(sorted(points))}
    return tuple(sorted(tuple(sorted((rank[p], rank[q]))) for p, q in pairs))


class ChordDiagram:
    """Immutable chord diagram with dense positions."""

    __slots__ = ("chords", "_partner", "_hash")

    def __init__(self, pairs: Iterable[tuple[Hashable, Hashable]] = ()):
        self.chords: tuple[Chord, ...] = _compact(pairs)
        self._partner: tuple[int, ...] | None = None
        self._hash: int | None = None

    @classmethod
    def _dense(cls, chords: tuple[Chord, ...]) -> ChordDiagram:
        # trusted constructor for already compact, sorted chords
        d = cls.__new__(cls)
        d.chords = chords
        d._partner = None
        d._hash = None
        return d

    @classmethod
    def from_involution(cls, partner: Sequence[int]) -> ChordDiagram:
        m = len(partner)
        pairs = []
        for i, j in enumerate(partner):
            if not 0 <= j < m or partner[j] != i:
                raise DiagramError("pairing is not an involution")
            if i == j:
                raise DiagramError(f"fixed point at {i}")
            if i < j:
                pairs.append((i, j))
        return cls(pairs)

    @classmethod
    def from_word(cls, word: str) -> ChordDiagram:
        """Diagram from a double-occurrence word such as ``ABCABC``."""
        where: dict[str, list[int]] = {}
        for i, ch in enumerate(word):
            where.setdefault(ch, []).append(i)
        bad = [ch for ch, ps in where.items() if len(ps) != 2]
        if bad:
            raise DiagramError(f"letters not occurring exactly twice: {''.join(bad)}")
        return cls(tuple(ps) for ps in where.values())

    @property
    def n(self) -> int:
        return len(self.chords)

    @property
    def size(self) -> int:
        return 2 * len(self.chords)

    @property
    def partner(self) -> tuple[int, ...]:
        if self._partner is None:
            out = [0] * self.size
            for p, q in self.chords:
                out[p] = q
                out[q] = p
            self._partner = tuple(out)
        return self._partner

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ChordDiagram):
            return NotImplemented
        return self.chords == other.chords

    def __lt__(self, other: ChordDiagram) -> bool:
        return (self.n, self.chords) < (other.n, other.chords)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.chords)
        return self._hash

    def __repr__(self) -> str:
        return f"ChordDiagram({render(self)!r})"

    def __str__(self) -> str:
        return render(self)

    # symmetries

    def rotate(self, k: int) -> ChordDiagram:
        return ChordDiagram._dense(_rotated(self.chords, self.size, k))

    def mirror(self) -> ChordDiagram:
        m = self.size
        return ChordDiagram(((m - 1 - p, m - 1 - q) for p, q in self.chords))

    def canonical(self) -> ChordDiagram:
        return ChordDiagram._dense(_canonical_chords(self.chords))

    def is_canonical(self) -> bool:
        return _canonical_chords(self.chords) == self.chords

    # crossing structure

    def crossing_pairs(self) -> list[tuple[Chord, Chord]]:
        return [(a, b) for a, b in itertools.combinations(self.chords, 2) if chords_cross(a, b)]

    def crossing_count(self) -> int:
        return len(self.crossing_pairs())

    def crossing_with(self, a: Chord) -> list[Chord]:
        return [b for b in self.chords if b != a and chords_cross(a, b)]

    def is_indecomposable(self) -> bool:
        return len(decompose(self)) <= 1

    def has_isolated_chord(self) -> bool:
        return any(not self.crossing_with(a) for a in self.chords)


def chords_cross(a: Chord, b: Chord) -> bool:
    (p, q), (r, s) = a, b
    return (p < r < q) != (p < s < q)


def _rotated(chords: tuple[Chord, ...], m: int, k: int) -> tuple[Chord, ...]:
    out = []
    for p, q in chords:
        p, q = (p + k) % m, (q + k) % m
        out.append((p, q) if p < q else (q, p))
    out.sort()
    return tuple(out)


@lru_cache(maxsize=1 << 18)
def _canonical_chords(chords: tuple[Chord, ...]) -> tuple[Chord, ...]:
    m = 2 * len(chords)
    return min((_rotated(chords, m, k) for k in range(m)), default=chords)


def canonicalize(d: ChordDiagram) -> ChordDiagram:
    return d.canonical()


def crossings(d: ChordDiagram) -> set[frozenset[Chord]]:
    return {frozenset(pair) for pair in d.crossing_pairs()}


EMPTY = ChordDiagram()
THETA = ChordDiagram([(0, 1)])
CROSSING = ChordDiagram([(0, 2), (1, 3)])


# text format

_PAIR = re.compile(r"^\s*(\d+)\s*-\s*(\d+)\s*$")


def render(d: ChordDiagram) -> str:
    return ",".join(f"{p}-{q}" for p, q in d.chords)


def parse(text: str) -> ChordDiagram:
    """Parse ``0-6,2-8,4-10`` (sparse positions are compacted) or a word like ``ABCABC``.

    The empty string and ``-`` denote the empty diagram.
    """
    src = text.strip()
    if src in ("", "-"):
        return EMPTY
    if re.fullmatch(r"[A-Za-z]+", src):
        return ChordDiagram.from_word(src)
    pairs = []
    for piece in src.split(","):
        m = _PAIR.match(piece)
        if not m:
            raise DiagramError(f"bad chord {piece!r}")
        pairs.append((int(m.group(1)), int(m.group(2))))
    return ChordDiagram(pairs)


# sums of diagrams

class DiagramSum:
    """Integer combination of canonical diagrams."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[ChordDiagram, int] | Iterable[tuple[ChordDiagram, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[ChordDiagram, int] = {}
        for d, k in items:
            d = d.canonical()
            acc[d] = acc.get(d, 0) + k
        self.terms: dict[ChordDiagram, int] = {d: k for d, k in acc.items() if k}

    def __add__(self, other: DiagramSum) -> DiagramSum:
        return DiagramSum(itertools.chain(self.terms.items(), other.terms.items()))

    def __sub__(self, other: DiagramSum) -> DiagramSum:
        return self + other.scale(-1)

    def scale(self, k: int) -> DiagramSum:
        return DiagramSum((d, k * v) for d, v in self.terms.items())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DiagramSum):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __iter__(self) -> Iterator[tuple[ChordDiagram, int]]:
        return iter(sorted(self.terms.items(), key=lambda t: t[0]))

    def __repr__(self) -> str:
        body = " ".join(f"{k:+d}[{render(d)}]" for d, k in self)
        return f"DiagramSum({body or '0'})"


# surgery and deletions

def _check_chord(d: ChordDiagram, a: Chord) -> Chord:
    a = tuple(sorted(a))
    if a not in d.chords:
        raise DiagramError(f"chord {a} not in {render(d)}")
    return a


def remove_chords(d: ChordDiagram, chords: Iterable[Chord]) -> ChordDiagram:
    drop = {_check_chord(d, a) for a in chords}
    return ChordDiagram(c for c in d.chords if c not in drop)


def left_right_ends(a: Chord, b: Chord) -> tuple[int, int]:
    """Split ``b`` into its end inside the arc strictly between a's endpoints and the other end."""
    p, q = a
    r, s = b
    r_in, s_in = p < r < q, p < s < q
    if r_in == s_in:
        raise DiagramError(f"chord {b} does not cross {a}")
    return (r, s) if r_in else (s, r)


def surgery_quadruple(
    d: ChordDiagram, a: Chord, bi: Chord, bj: Chord
) -> tuple[ChordDiagram, ChordDiagram, ChordDiagram, ChordDiagram]:
    """The diagrams (D+-, D-+, Dl, Dr) obtained by reconnecting the ends of bi and bj.

    Output positions are compacted but not canonicalized.
    """
    a, bi, bj = (_check_chord(d, x) for x in (a, bi, bj))
    if bi == bj:
        raise DiagramError("bi and bj must differ")
    li, ri = left_right_ends(a, bi)
    lj, rj = left_right_ends(a, bj)
    rest = [c for c in d.chords if c not in (a, bi, bj)]
    return tuple(ChordDiagram(rest + [new]) for new in ((li, rj), (ri, lj), (li, lj), (ri, rj)))


def lambda_sum(d: ChordDiagram, a: Chord, bi: Chord, bj: Chord) -> DiagramSum:
    pm, mp, l, r = surgery_quadruple(d, a, bi, bj)
    return DiagramSum([(pm, 1), (mp, 1), (l, -1), (r, -1)])


def s_operator(d: ChordDiagram | DiagramSum) -> DiagramSum:
    """Sum of all single-chord deletions, extended linearly."""
    if isinstance(d, DiagramSum):
        out = DiagramSum()
        for e, k in d.terms.items():
            out = out + s_operator(e).scale(k)
        return out
    return DiagramSum((ChordDiagram._dense(_delete(d.chords, a)), 1) for a in d.chords)


def _delete(chords: tuple[Chord, ...], a: Chord) -> tuple[Chord, ...]:
    p, q = a
    shift = lambda x: x - (x > p) - (x > q)
    return tuple((shift(u), shift(v)) for u, v in chords if (u, v) != a)


# enumeration

def _matchings(points: list[int]) -> Iterator[list[Chord]]:
    if not points:
        yield []
        return
    first, rest = points[0], points[1:]
    for i, other in enumerate(rest):
        for tail in _matchings(rest[:i] + rest[i + 1:]):
            yield [(first, other)] + tail


def all_matchings(n: int) -> Iterator[ChordDiagram]:
    """Every perfect matching on ``2n`` labelled points, (2n-1)!! of them."""
    for m in _matchings(list(range(2 * n))):
        yield ChordDiagram._dense(tuple(sorted(m)))


def enumerate_diagrams(n: int, indecomposable: bool = False) -> list[ChordDiagram]:
    """Canonical representatives of all rotation classes of order ``n``."""
    out = list(_enumerate_all(n))
    if indecomposable:
        out = [d for d in out if d.is_indecomposable()]
    return out


@lru_cache(maxsize=None)
def _enumerate_all(n: int) -> tuple[ChordDiagram, ...]:
    if n == 0:
        return (EMPTY,)
    found = set()
    for base in _enumerate_all(n - 1):
        m = base.size
        # insert one chord with endpoints in gaps g1 <= g2 of every rotation of base
        for k in range(max(m, 1)):
            rot = base.rotate(k).chords
            for j in range(m + 1):
                # new chord from a point before 0 to a point after position j-1
                chords = [(p + 1 + (p >= j), q + 1 + (q >= j)) for p, q in rot]
                chords.append((0, j + 1))
                found.add(ChordDiagram._dense(tuple(sorted(chords))).canonical())
    return tuple(sorted(found, key=lambda d: d.chords))


def decompose(d: ChordDiagram) -> list[ChordDiagram]:
    """Connected components of the crossing graph, each as its own diagram."""
    chords = list(d.chords)
    if not chords:
        return []
    parent = list(range(len(chords)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, j in itertools.combinations(range(len(chords)), 2):
        if chords_cross(chords[i], chords[j]):
            parent[find(i)] = find(j)
    groups: dict[int, list[Chord]] = {}
    for i, c in enumerate(chords):
        groups.setdefault(find(i), []).append(c)
    return [ChordDiagram(g) for g in sorted(groups.values())]


# relation instances

def four_term_terms(
    host: ChordDiagram, gaps: tuple[int, int, int], ties: tuple[int, int, int]
) -> list[tuple[ChordDiagram, int]]:
    """The four signed diagrams of one 4T instance.

    Slots X, Y, Z sit in the given gaps of ``host`` (gap g lies just after
    host point g; the empty host has the single gap 0).  ``ties`` orders the
    slots when they share a gap.  A fixed chord runs from X to Z and a moving
    chord leaves Y; its other end and the fixed end trade places inside X or
    inside Z.
    """
    gx, gy, gz = gaps
    tx, ty, tz = ties

    def key(gap: int, tie: int, i: int) -> tuple[int, int, int, int]:
        return (gap, 1, tie, i)

    host_pts = [((p, 0, 0, 0), (q, 0, 0, 0)) for p, q in host.chords]
    x1, x2 = key(gx, tx, 0), key(gx, tx, 1)
    z1, z2 = key(gz, tz, 0), key(gz, tz, 1)
    y = key(gy, ty, 0)
    x, z = x1, z1
    configs = [
        ([(x, z1), (y, z2)], 1),
        ([(x, z2), (y, z1)], -1),
        ([(x1, z), (y, x2)], 1),
        ([(x2, z), (y, x1)], -1),
    ]
    return [(ChordDiagram(host_pts + pair), sign) for pair, sign in configs]


def four_term_instances(n: int) -> list[DiagramSum]:
    """All distinct non-trivial 4T combinations of order ``n``."""
    if n < 2:
        return []
    hosts = enumerate_diagrams(n - 2)
    seen: set[DiagramSum] = set()
    out: list[DiagramSum] = []
    for host in hosts:
        gaps = range(max(host.size, 1))
        for triple in itertools.product(gaps, repeat=3):
            for ties in itertools.permutations(range(3)):
                s = DiagramSum(four_term_terms(host, triple, ties))
                if s and s not in seen:
                    seen.add(s)
                    out.append(s)
    return out


# Eight-term templates on a 12-point circle.  Each entry lists the four
# signed chord sets of R and the four signed single chords of S.
_EIGHT_TERM = [
    (
        [([(1, 4), (5, 7), (8, 10)], 1), ([(1, 4), (5, 8), (7, 10)], -1),
         ([(1, 5), (4, 7), (8, 10)], -1), ([(1, 5), (4, 8), (7, 10)], 1)],
        [((1, 7), 1), ((4, 10), 1), ((4, 7), -1), ((1, 10), -1)],
    ),
    (
        [([(1, 8), (4, 11), (5, 7)], 1), ([(1, 7), (4, 11), (5, 8)], -1),
         ([(1, 8), (5, 11), (4, 7)], -1), ([(1, 7), (4, 8), (5, 11)], 1)],
        [((8, 11), 1), ((1, 4), 1), ((4, 7), -1), ((1, 11), -1)],
    ),
    (
        [([(1, 7), (2, 4), (8, 10)], 1), ([(1, 8), (2, 4), (7, 10)], -1),
         ([(1, 4), (2, 7), (8, 10)], -1), ([(1, 4), (2, 8), (7, 10)], 1)],
        [((1, 8), 1), ((4, 10), 1), ((4, 7), -1), ((1, 10), -1)],
    ),
    (
        [([(1, 4), (5, 11), (7, 10)], 1), ([(1, 4), (5, 10), (7, 11)], -1),
         ([(1, 5), (4, 11), (7, 10)], -1), ([(1, 5), (4, 10), (7, 11)], 1)],
        [((1, 7), 1), ((4, 10), 1), ((4, 7), -1), ((1, 10), -1)],
    ),
]

TEMPLATE_POINTS = 12


def template_positions(i: int) -> set[int]:
    rel, _ = _EIGHT_TERM[i]
    return {p for chords, _ in rel for c in chords for p in c}


def free_positions(i: int) -> list[int]:
    used = template_positions(i)
    return [p for p in range(TEMPLATE_POINTS) if p not in used]


def eight_term_templates(
    hidden: Sequence[Chord] = (), which: Iterable[int] = range(4)
) -> list[tuple[DiagramSum, DiagramSum]]:
    """Pairs (R_i, S_i) on the 12-point circle, each term augmented by ``hidden``.

    The relation to check is ``W(R_i) = y * W(S_i)``.
    """
    hidden = [tuple(sorted(h)) for h in hidden]
    hidden_pts = [p for h in hidden for p in h]
    if len(set(hidden_pts)) != len(hidden_pts):
        raise DiagramError("hidden chords overlap")
    out = []
    for i in which:
        bad = set(hidden_pts) & template_positions(i)
        if bad:
            raise DiagramError(f"hidden chord collides with template {i + 1} at {sorted(bad)}")
        if any(not 0 <= p < TEMPLATE_POINTS for p in hidden_pts):
            raise DiagramError("hidden chord outside the 12-point circle")
        rel, lin = _EIGHT_TERM[i]
        r = DiagramSum((ChordDiagram(chords + hidden), k) for chords, k in rel)
        s = DiagramSum((ChordDiagram([chord] + hidden), k) for chord, k in lin)
        out.append((r, s))
    return out
