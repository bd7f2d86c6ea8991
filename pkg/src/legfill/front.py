"""Legendrian front diagrams as left-to-right event words.

A front is a word of events, each at an integer level (active strands are
counted top-down starting at 1): ``LeftCusp(k)`` adds two strands at
positions k, k+1; ``RightCusp(k)`` removes the strands at k, k+1;
``Crossing(k)`` crosses them.  The sweep starts and ends with no strands,
so the word encodes a closed front; every event occupies its own column,
which encodes the genericity assumption that cusps and crossings have
distinct x-coordinates.

Conventions fixed here and relied on throughout:

* at a crossing the strand of lesser slope (the one descending left to
  right) passes in front, so over/under is determined by the picture;
* a crossing is positive exactly when its two strands have the same
  horizontal direction -- in particular a crossing with both strands
  oriented leftward is positive;
* the rotation number counts (down cusps - up cusps)/2.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional, Sequence

from .braid import BraidWord
from .homfly import Crossing as PDCrossing
from .homfly import PlanarDiagram

LEFT_CUSP = "L"
RIGHT_CUSP = "R"
CROSSING = "X"

Event = tuple[str, int]


class FrontFormatError(ValueError):
    """Malformed ``.front`` text."""


class SweepViolation(ValueError):
    """The event word fails the strand-count sweep.

    Carries the index of the offending event in ``event_index``.
    """

    def __init__(self, message: str, event_index: int):
        super().__init__(f"event {event_index}: {message}")
        self.event_index = event_index


@dataclass(frozen=True)
class StrandInfo:
    """One x-monotone strand, from its left cusp to its right cusp."""

    index: int
    birth_event: int
    death_event: int
    crossing_ordinals: tuple[int, ...]


@dataclass(frozen=True)
class CrossingInfo:
    """A crossing event: ``upper`` enters at ``level`` and descends over."""

    ordinal: int
    event_index: int
    level: int
    upper: int
    lower: int


@dataclass(frozen=True)
class CuspInfo:
    event_index: int
    level: int
    upper: int
    lower: int


@dataclass(frozen=True)
class ComponentInfo:
    index: int
    strands: tuple[int, ...]
    left_cusps: tuple[int, ...]     # event indices
    right_cusps: tuple[int, ...]    # event indices
    crossings: tuple[int, ...]      # crossing ordinals incident to the component


class Front:
    """A validated front event word.  Immutable."""

    __slots__ = ("events", "_structure")

    def __init__(self, events: Iterable[Event]):
        evs = []
        for kind, level in events:
            if kind not in (LEFT_CUSP, RIGHT_CUSP, CROSSING):
                raise FrontFormatError(f"unknown event kind {kind!r}")
            evs.append((kind, int(level)))
        object.__setattr__(self, "events", tuple(evs))
        object.__setattr__(self, "_structure", None)
        _sweep(self.events)  # raises SweepViolation on bad words

    def __setattr__(self, name, value):
        raise AttributeError("Front is immutable")

    def __eq__(self, other):
        return isinstance(other, Front) and self.events == other.events

    def __hash__(self):
        return hash(self.events)

    def __repr__(self):
        return f"Front({format_front(self, inline=True)!r})"

    @property
    def structure(self) -> "_Structure":
        cached = object.__getattribute__(self, "_structure")
        if cached is None:
            cached = _Structure(self.events)
            object.__setattr__(self, "_structure", cached)
        return cached

    # convenience accessors -------------------------------------------------

    @property
    def crossings(self) -> tuple[CrossingInfo, ...]:
        return self.structure.crossings

    @property
    def left_cusps(self) -> tuple[CuspInfo, ...]:
        return self.structure.left_cusps

    @property
    def right_cusps(self) -> tuple[CuspInfo, ...]:
        return self.structure.right_cusps

    def crossing_count(self) -> int:
        return len(self.structure.crossings)

    def component_count(self) -> int:
        return len(self.structure.components)


def _sweep(events: Sequence[Event]) -> list[int]:
    """Validate the sweep; return the active-strand count per column."""
    active = 0
    counts = [0]
    for idx, (kind, level) in enumerate(events):
        if kind == LEFT_CUSP:
            if not 1 <= level <= active + 1:
                raise SweepViolation(
                    f"left cusp at level {level} with {active} active strands", idx)
            active += 2
        elif kind == RIGHT_CUSP:
            if not 1 <= level <= active - 1:
                raise SweepViolation(
                    f"right cusp at level {level} with {active} active strands", idx)
            active -= 2
        else:
            if not 1 <= level <= active - 1:
                raise SweepViolation(
                    f"crossing at level {level} with {active} active strands", idx)
        counts.append(active)
    if active:
        raise SweepViolation(
            f"sweep ends with {active} strands still active", len(events) - 1)
    return counts


class _Structure:
    """Strands, cusps, crossings, components, and default directions."""

    def __init__(self, events: Sequence[Event]):
        self.events = tuple(events)
        strands_birth: list[int] = []
        strands_death: dict[int, int] = {}
        strand_crossings: dict[int, list[int]] = {}
        crossings: list[CrossingInfo] = []
        left_cusps: list[CuspInfo] = []
        right_cusps: list[CuspInfo] = []
        stacks: list[tuple[int, ...]] = [()]
        active: list[int] = []
        for idx, (kind, level) in enumerate(events):
            if kind == LEFT_CUSP:
                s1 = len(strands_birth)
                s2 = s1 + 1
                strands_birth.extend([idx, idx])
                strand_crossings[s1] = []
                strand_crossings[s2] = []
                active[level - 1:level - 1] = [s1, s2]
                left_cusps.append(CuspInfo(idx, level, s1, s2))
            elif kind == RIGHT_CUSP:
                u, l = active[level - 1], active[level]
                strands_death[u] = idx
                strands_death[l] = idx
                del active[level - 1:level + 1]
                right_cusps.append(CuspInfo(idx, level, u, l))
            else:
                u, l = active[level - 1], active[level]
                ordinal = len(crossings)
                crossings.append(CrossingInfo(ordinal, idx, level, u, l))
                strand_crossings[u].append(ordinal)
                strand_crossings[l].append(ordinal)
                active[level - 1], active[level] = l, u
            stacks.append(tuple(active))
        self.stacks = tuple(stacks)
        self.crossings = tuple(crossings)
        self.left_cusps = tuple(left_cusps)
        self.right_cusps = tuple(right_cusps)
        self.strands = tuple(
            StrandInfo(s, strands_birth[s], strands_death[s], tuple(strand_crossings[s]))
            for s in range(len(strands_birth))
        )
        self._build_components()
        self._build_directions()

    def _build_components(self):
        n = len(self.strands)
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(x, y):
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[max(rx, ry)] = min(rx, ry)

        for cusp in self.left_cusps:
            union(cusp.upper, cusp.lower)
        for cusp in self.right_cusps:
            union(cusp.upper, cusp.lower)
        roots: dict[int, int] = {}
        comp_of = [0] * n
        members: list[list[int]] = []
        for s in range(n):
            r = find(s)
            if r not in roots:
                roots[r] = len(members)
                members.append([])
            comp_of[s] = roots[r]
            members[roots[r]].append(s)
        self.component_of_strand = tuple(comp_of)
        comps = []
        for ci, strands in enumerate(members):
            sset = set(strands)
            lc = tuple(c.event_index for c in self.left_cusps if c.upper in sset)
            rc = tuple(c.event_index for c in self.right_cusps if c.upper in sset)
            xs = tuple(
                c.ordinal for c in self.crossings
                if c.upper in sset or c.lower in sset
            )
            comps.append(ComponentInfo(ci, tuple(strands), lc, rc, xs))
        self.components = tuple(comps)

    def _build_directions(self):
        """Base direction of each strand: +1 rightward, -1 leftward.

        Strands joined at a cusp run in opposite directions; the lowest-index
        strand of each component is set rightward."""
        n = len(self.strands)
        direction = [0] * n
        neighbors: dict[int, list[int]] = {s: [] for s in range(n)}
        for cusp in list(self.left_cusps) + list(self.right_cusps):
            neighbors[cusp.upper].append(cusp.lower)
            neighbors[cusp.lower].append(cusp.upper)
        for comp in self.components:
            seed = comp.strands[0]
            direction[seed] = 1
            queue = [seed]
            while queue:
                s = queue.pop()
                for t in neighbors[s]:
                    if direction[t] == 0:
                        direction[t] = -direction[s]
                        queue.append(t)
        self.base_direction = tuple(direction)


def parse_front(text: str) -> Front:
    """Parse the ``.front`` format: one event per line (``L <k>``, ``R <k>``,
    ``X <k>``); ``/`` is also accepted as an inline separator, and lines
    starting with ``#`` are ignored."""
    events: list[Event] = []
    for raw in text.replace("/", "\n").splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2 or parts[0] not in (LEFT_CUSP, RIGHT_CUSP, CROSSING):
            raise FrontFormatError(f"bad front event line {line!r}")
        try:
            level = int(parts[1])
        except ValueError:
            raise FrontFormatError(f"bad level in line {line!r}") from None
        events.append((parts[0], level))
    return Front(events)


def format_front(front: Front, inline: bool = False) -> str:
    parts = [f"{kind} {level}" for kind, level in front.events]
    if inline:
        return " / ".join(parts)
    return "\n".join(parts) + ("\n" if parts else "")


def validate(front: Front) -> bool:
    """Fronts are validated on construction; kept for explicit checking of
    raw event lists via ``Front(...)``."""
    _sweep(front.events)
    return True


class OrientedFront:
    """A front with a direction chosen for every component.

    ``flips[c]`` reverses component ``c`` relative to the base orientation
    (lowest-index strand rightward).  Crossing signs, tb and rot are derived
    from the chosen directions.
    """

    def __init__(self, front: Front, flips: Optional[Sequence[int]] = None):
        self.front = front
        ncomp = len(front.structure.components)
        if flips is None:
            flips = (1,) * ncomp
        flips = tuple(flips)
        if len(flips) != ncomp or any(f not in (1, -1) for f in flips):
            raise ValueError(f"need one +-1 flip per component ({ncomp} components)")
        self.flips = flips

    def __repr__(self):
        return f"OrientedFront({format_front(self.front, inline=True)!r}, flips={self.flips})"

    def direction(self, strand: int) -> int:
        st = self.front.structure
        return st.base_direction[strand] * self.flips[st.component_of_strand[strand]]

    def crossing_sign(self, ordinal: int) -> int:
        c = self.front.structure.crossings[ordinal]
        return 1 if self.direction(c.upper) == self.direction(c.lower) else -1

    def crossing_signs(self) -> tuple[int, ...]:
        return tuple(self.crossing_sign(c.ordinal) for c in self.front.structure.crossings)

    def writhe(self) -> int:
        return sum(self.crossing_signs())

    def tb(self) -> int:
        return self.writhe() - len(self.front.structure.right_cusps)

    def rot(self) -> int:
        """(down cusps - up cusps) / 2 under the chosen orientation."""
        down = up = 0
        for cusp in self.front.structure.left_cusps:
            if self.direction(cusp.upper) == -1:
                down += 1
            else:
                up += 1
        for cusp in self.front.structure.right_cusps:
            if self.direction(cusp.upper) == 1:
                down += 1
            else:
                up += 1
        assert (down - up) % 2 == 0
        return (down - up) // 2


def classical_invariants(oriented: OrientedFront) -> tuple[int, int]:
    """(tb, rot): writhe minus right cusps, and the signed cusp count halved.

    tb does not depend on the orientation choice for knots; rot is reported
    for the given orientation."""
    return oriented.tb(), oriented.rot()


def components(front: Front) -> tuple[ComponentInfo, ...]:
    return front.structure.components


def zero_resolution(front: Front, crossings: Iterable[int]) -> Front:
    """Delete the selected crossings (by ordinal); the horizontal smoothing
    of Figure-3 type.  Cusp events are untouched and the result is revalidated."""
    chosen = set(crossings)
    all_ordinals = {c.ordinal for c in front.structure.crossings}
    bad = chosen - all_ordinals
    if bad:
        raise IndexError(f"no such crossing ordinal(s): {sorted(bad)}")
    drop_events = {front.structure.crossings[o].event_index for o in chosen}
    return Front(ev for i, ev in enumerate(front.events) if i not in drop_events)


def oriented_zero_resolution(oriented: OrientedFront, crossings: Iterable[int]) -> OrientedFront:
    """Zero-resolve and carry the orientation through.

    Strand identities survive event deletion (births keep their order), and
    horizontal smoothing respects the flow exactly at co-directed crossings;
    resolving a crossing whose strands are anti-directed raises ValueError.
    """
    front = oriented.front
    old_dir = [oriented.direction(s.index) for s in front.structure.strands]
    resolved = zero_resolution(front, crossings)
    st = resolved.structure
    flips = []
    for comp in st.components:
        s0 = comp.strands[0]
        flip = old_dir[s0] * st.base_direction[s0]
        for t in comp.strands:
            if st.base_direction[t] * flip != old_dir[t]:
                raise ValueError(
                    "0-resolution at an anti-directed crossing does not respect "
                    "the orientation")
        flips.append(flip)
    return OrientedFront(resolved, tuple(flips))


def check_tanaka_form(oriented: OrientedFront) -> bool:
    """Both strands oriented leftward at every crossing, and the full
    0-resolution splits into closed curves with exactly one left and one
    right cusp each."""
    st = oriented.front.structure
    for c in st.crossings:
        if oriented.direction(c.upper) != -1 or oriented.direction(c.lower) != -1:
            return False
    resolved = zero_resolution(oriented.front, [c.ordinal for c in st.crossings])
    for comp in resolved.structure.components:
        if len(comp.left_cusps) != 1 or len(comp.right_cusps) != 1:
            return False
    return True


def tanaka_orientation(front: Front) -> Optional[OrientedFront]:
    """Component directions making every crossing's strands run leftward,
    if such a choice exists."""
    st = front.structure
    forced: dict[int, int] = {}
    for c in st.crossings:
        for strand in (c.upper, c.lower):
            comp = st.component_of_strand[strand]
            need = -1 * st.base_direction[strand]  # flip making the strand leftward
            if forced.setdefault(comp, need) != need:
                return None
    flips = tuple(forced.get(i, 1) for i in range(len(st.components)))
    oriented = OrientedFront(front, flips)
    return oriented


def front_to_pd(oriented: OrientedFront) -> PlanarDiagram:
    """Planar diagram of the underlying smooth link (cusps become smooth
    turnbacks).  At every front crossing the descending strand is the
    over-strand; signs follow the chosen orientation."""
    st = oriented.front.structure
    # Pieces of each strand between its crossings; merge across cusps.
    piece_id: dict[tuple[int, int], int] = {}
    counter = 0
    for s in st.strands:
        for k in range(len(s.crossing_ordinals) + 1):
            piece_id[(s.index, k)] = counter
            counter += 1
    parent = list(range(counter))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)

    for cusp in st.left_cusps:
        union(piece_id[(cusp.upper, 0)], piece_id[(cusp.lower, 0)])
    for cusp in st.right_cusps:
        u = st.strands[cusp.upper]
        l = st.strands[cusp.lower]
        union(piece_id[(cusp.upper, len(u.crossing_ordinals))],
              piece_id[(cusp.lower, len(l.crossing_ordinals))])

    def edge(strand: int, k: int) -> int:
        return find(piece_id[(strand, k)])

    crossings = []
    used_edges = set()
    for c in st.crossings:
        iu = st.strands[c.upper].crossing_ordinals.index(c.ordinal)
        il = st.strands[c.lower].crossing_ordinals.index(c.ordinal)
        if oriented.direction(c.upper) == 1:
            over_in, over_out = edge(c.upper, iu), edge(c.upper, iu + 1)
        else:
            over_in, over_out = edge(c.upper, iu + 1), edge(c.upper, iu)
        if oriented.direction(c.lower) == 1:
            under_in, under_out = edge(c.lower, il), edge(c.lower, il + 1)
        else:
            under_in, under_out = edge(c.lower, il + 1), edge(c.lower, il)
        sign = oriented.crossing_sign(c.ordinal)
        crossings.append(PDCrossing.from_strands(sign, over_in, over_out, under_in, under_out))
        used_edges.update((over_in, over_out, under_in, under_out))
    free = 0
    for comp in st.components:
        if not comp.crossings:
            free += 1
    return PlanarDiagram(tuple(crossings), free)


def front_homfly(oriented: OrientedFront, memo: dict | None = None):
    from .homfly import homfly

    return homfly(front_to_pd(oriented), memo)


def front_of_braid_closure(word: BraidWord) -> Front:
    """Front of the trace closure: return arcs nested above, braid strands at
    the lower levels.  Positive letters become plain crossings; each negative
    letter costs one stabilization gadget (a left/right cusp pair around the
    crossing), so the resulting front is a valid but generally non-maximal-tb
    representative."""
    n = word.strand_count
    events: list[Event] = [(LEFT_CUSP, j) for j in range(1, n + 1)]
    for letter in word.letters:
        j = abs(letter)
        if letter > 0:
            events.append((CROSSING, n + j))
        else:
            events.append((LEFT_CUSP, n + j))
            events.append((CROSSING, n + j + 1))
            events.append((RIGHT_CUSP, n + j + 2))
    events.extend((RIGHT_CUSP, j) for j in range(n, 0, -1))
    return Front(events)
