"""HOMFLY polynomial via skein recursion, plus the Thurston-Bennequin bound.

Skein convention, fixed once and for all:

    a * P(L+)  -  a^-1 * P(L-)  =  z * P(L0),        P(unknot) = 1,

so a crossing-free unlink with ``c`` components evaluates to
``((a - a^-1)/z)^(c-1)``.  Under this convention the closure of sigma_1^3
(the right-handed trefoil) has polynomial ``-a^-4 + a^-2 z^2 + 2 a^-2``,
whose maximal a-degree -2 serves as the calibration anchor: the bound
``tb <= -max_a_degree - 1`` then yields 1, the maximal Thurston-Bennequin
number of the trefoil.

The engine resolves one "bad" crossing at a time -- the first crossing,
along a fixed traversal of the diagram, whose first visit runs under --
switching it (toward a descending diagram) and smoothing it (one crossing
fewer).  Descending diagrams are unlinks.  Sub-diagrams are memoized under
a canonical relabeling of their edges, so the Stoimenow-scale examples
(around twenty crossings) finish at desk scale.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from typing import Mapping

from .braid import BraidWord


class DiagramError(ValueError):
    """The planar-diagram data is inconsistent."""


# ---------------------------------------------------------------------------
# Laurent polynomials in (a, z)


class HomflyPoly:
    """Sparse integer Laurent polynomial in the framing variable ``a`` and ``z``.

    Terms map ``(a_exponent, z_exponent)`` to a nonzero integer coefficient;
    the zero polynomial is the empty map.  All arithmetic is exact.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        clean = {}
        if terms:
            for key, coeff in terms.items():
                if coeff:
                    clean[(int(key[0]), int(key[1]))] = int(coeff)
        self._terms = clean

    @classmethod
    def zero(cls) -> "HomflyPoly":
        return cls()

    @classmethod
    def one(cls) -> "HomflyPoly":
        return cls({(0, 0): 1})

    @classmethod
    def term(cls, coeff: int, a_exp: int = 0, z_exp: int = 0) -> "HomflyPoly":
        return cls({(a_exp, z_exp): coeff})

    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, HomflyPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "HomflyPoly") -> "HomflyPoly":
        out = dict(self._terms)
        for key, coeff in other._terms.items():
            new = out.get(key, 0) + coeff
            if new:
                out[key] = new
            else:
                out.pop(key, None)
        result = HomflyPoly.__new__(HomflyPoly)
        result._terms = out
        return result

    def __neg__(self) -> "HomflyPoly":
        result = HomflyPoly.__new__(HomflyPoly)
        result._terms = {key: -coeff for key, coeff in self._terms.items()}
        return result

    def __sub__(self, other: "HomflyPoly") -> "HomflyPoly":
        return self + (-other)

    def __mul__(self, other: "HomflyPoly") -> "HomflyPoly":
        out: dict[tuple[int, int], int] = {}
        for (pa, pz), c in self._terms.items():
            for (qa, qz), d in other._terms.items():
                key = (pa + qa, pz + qz)
                new = out.get(key, 0) + c * d
                if new:
                    out[key] = new
                else:
                    out.pop(key, None)
        result = HomflyPoly.__new__(HomflyPoly)
        result._terms = out
        return result

    def shifted(self, a_exp: int, z_exp: int, coeff: int = 1) -> "HomflyPoly":
        """Multiply by the monomial ``coeff * a^a_exp * z^z_exp``."""
        result = HomflyPoly.__new__(HomflyPoly)
        result._terms = {
            (pa + a_exp, pz + z_exp): c * coeff for (pa, pz), c in self._terms.items()
        }
        return result

    def max_a_degree(self) -> int:
        if not self._terms:
            raise ValueError("the zero polynomial has no framing degree")
        return max(pa for pa, _ in self._terms)

    def __repr__(self):
        return f"HomflyPoly({self.format_text()!r})"

    def format_text(self) -> str:
        """Render terms ``c*a^p*z^q`` sorted by (p, q) descending."""
        if not self._terms:
            return "0"
        parts = []
        for (pa, pz) in sorted(self._terms, reverse=True):
            parts.append(f"{self._terms[(pa, pz)]}*a^{pa}*z^{pz}")
        return " + ".join(parts)


#: (a - a^-1)/z, the value of a 2-component crossing-free unlink.
UNLINK_FACTOR = HomflyPoly({(1, -1): 1, (-1, -1): -1})


def max_framing_degree(poly: HomflyPoly) -> int:
    """Maximum a-exponent over the stored terms.  Errors on zero."""
    return poly.max_a_degree()


def homfly_tb_bound(poly: HomflyPoly) -> int:
    """HOMFLY upper bound for the maximal Thurston-Bennequin number:
    ``-max_framing_degree - 1``."""
    return -poly.max_a_degree() - 1


# ---------------------------------------------------------------------------
# Planar diagrams


@dataclass(frozen=True)
class Crossing:
    """One crossing of an oriented diagram.

    ``edges`` lists the four incident edge identifiers in counterclockwise
    rotational order starting from the incoming under-strand (the classic
    X[a,b,c,d] convention): for a positive crossing the over-strand runs from
    slot 3 to slot 1, for a negative crossing from slot 1 to slot 3.
    """

    sign: int
    edges: tuple[int, int, int, int]

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise DiagramError(f"crossing sign must be +-1, got {self.sign}")
        object.__setattr__(self, "edges", tuple(self.edges))

    @property
    def under_in(self) -> int:
        return self.edges[0]

    @property
    def under_out(self) -> int:
        return self.edges[2]

    @property
    def over_in(self) -> int:
        return self.edges[3] if self.sign > 0 else self.edges[1]

    @property
    def over_out(self) -> int:
        return self.edges[1] if self.sign > 0 else self.edges[3]

    @classmethod
    def from_strands(
        cls, sign: int, over_in: int, over_out: int, under_in: int, under_out: int
    ) -> "Crossing":
        if sign > 0:
            return cls(sign, (under_in, over_out, under_out, over_in))
        return cls(sign, (under_in, over_in, under_out, over_out))


@dataclass(frozen=True)
class PlanarDiagram:
    """An oriented link diagram: crossings plus crossing-free loop components.

    Edge identifiers must form closed oriented loops: every identifier occurs
    exactly once as an incoming slot and once as an outgoing slot.
    """

    crossings: tuple[Crossing, ...]
    free_loops: int = 0

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(self.crossings))
        if self.free_loops < 0:
            raise DiagramError("free_loops must be nonnegative")
        incoming: set[int] = set()
        outgoing: set[int] = set()
        for c in self.crossings:
            for edge, bucket in ((c.under_in, incoming), (c.over_in, incoming),
                                 (c.under_out, outgoing), (c.over_out, outgoing)):
                if edge in bucket:
                    raise DiagramError(f"edge {edge} used twice in the same role")
                bucket.add(edge)
        if incoming != outgoing:
            stray = incoming.symmetric_difference(outgoing)
            raise DiagramError(f"edges do not close into loops: {sorted(stray)}")

    def component_count(self) -> int:
        return len(_state_components(_state_from_diagram(self))) + self.free_loops


def braid_closure_diagram(word: BraidWord) -> PlanarDiagram:
    """Planar diagram of the trace closure of a braid word.

    All braid strands are co-oriented, so the crossing signs equal the letter
    signs; strands never crossed contribute crossing-free loops.
    """
    n = word.strand_count
    next_edge = n
    current = list(range(n))  # edge currently running at each strand position
    first = list(range(n))
    crossings = []
    for letter in word.letters:
        i = abs(letter) - 1
        out_hi = next_edge
        out_lo = next_edge + 1
        next_edge += 2
        if letter > 0:
            # strand at position i descends over the strand at i+1
            crossings.append(Crossing.from_strands(
                1, over_in=current[i], over_out=out_lo,
                under_in=current[i + 1], under_out=out_hi))
        else:
            crossings.append(Crossing.from_strands(
                -1, over_in=current[i + 1], over_out=out_hi,
                under_in=current[i], under_out=out_lo))
        current[i], current[i + 1] = out_hi, out_lo
    # Close up: identify the exit edge at each position with the entry edge.
    relabel = {}
    loops = 0
    for pos in range(n):
        if current[pos] == first[pos]:
            loops += 1  # never crossed: a crossing-free loop
        else:
            relabel[current[pos]] = first[pos]
    def resolve(e: int) -> int:
        while e in relabel:
            e = relabel[e]
        return e
    fixed = [
        Crossing.from_strands(
            c.sign,
            resolve(c.over_in), resolve(c.over_out),
            resolve(c.under_in), resolve(c.under_out))
        for c in crossings
    ]
    return PlanarDiagram(tuple(fixed), loops)


def switch_crossing(diagram: PlanarDiagram, index: int) -> PlanarDiagram:
    """The same diagram with crossing ``index`` switched (over/under swapped)."""
    c = diagram.crossings[index]
    flipped = Crossing.from_strands(
        -c.sign, over_in=c.under_in, over_out=c.under_out,
        under_in=c.over_in, under_out=c.over_out)
    crossings = list(diagram.crossings)
    crossings[index] = flipped
    return PlanarDiagram(tuple(crossings), diagram.free_loops)


def smooth_crossing(diagram: PlanarDiagram, index: int) -> PlanarDiagram:
    """The oriented smoothing of crossing ``index``."""
    state = _state_from_diagram(diagram)
    crossings, loops = state
    smoothed = _smooth(crossings, loops, index)
    return _diagram_from_state(smoothed)


# ---------------------------------------------------------------------------
# Skein engine internals.
#
# Internal state: (crossings, loops) where crossings is a tuple of
# (sign, over_in, over_out, under_in, under_out) tuples and loops counts the
# crossing-free circles.

_SIGN, _OIN, _OOUT, _UIN, _UOUT = range(5)


def _state_from_diagram(diagram: PlanarDiagram):
    crossings = tuple(
        (c.sign, c.over_in, c.over_out, c.under_in, c.under_out)
        for c in diagram.crossings
    )
    return crossings, diagram.free_loops


def _diagram_from_state(state) -> PlanarDiagram:
    crossings, loops = state
    return PlanarDiagram(
        tuple(Crossing.from_strands(s, oi, oo, ui, uo) for s, oi, oo, ui, uo in crossings),
        loops,
    )


def _successor_map(crossings):
    """Map each edge to (crossing index, over?) at its head, and each
    (crossing, role) to the continuation edge."""
    head = {}
    for idx, c in enumerate(crossings):
        head[c[_OIN]] = (idx, True)
        head[c[_UIN]] = (idx, False)
    return head


def _next_edge(crossings, edge, head):
    idx, is_over = head[edge]
    c = crossings[idx]
    return c[_OOUT] if is_over else c[_UOUT], idx, is_over


def _state_components(state):
    """Edge cycles through the crossings (free loops not included)."""
    crossings, _ = state
    head = _successor_map(crossings)
    seen = set()
    comps = []
    for start in sorted(head):
        if start in seen:
            continue
        cycle = []
        e = start
        while e not in seen:
            seen.add(e)
            cycle.append(e)
            e, _, _ = _next_edge(crossings, e, head)
        comps.append(tuple(cycle))
    return comps


def _canonical_walk(state):
    """Canonical relabeling walk.

    Components are ordered by their smallest edge label and traversed from
    that edge; crossings are numbered by first visit.  Returns the hashable
    canonical key and the index of the first bad crossing (first visit on the
    under-strand), or None if the diagram is descending.
    """
    crossings, loops = state
    head = _successor_map(crossings)
    starts = {}
    for idx, c in enumerate(crossings):
        for e in (c[_OIN], c[_UIN]):
            starts[e] = idx
    visited_edges = set()
    crossing_number: dict[int, int] = {}
    code = [loops]
    first_bad = None
    for start in sorted(starts):
        if start in visited_edges:
            continue
        code.append(-1)  # component separator
        e = start
        while e not in visited_edges:
            visited_edges.add(e)
            nxt, idx, is_over = _next_edge(crossings, e, head)
            seen_before = idx in crossing_number
            if not seen_before:
                crossing_number[idx] = len(crossing_number)
                if not is_over and first_bad is None:
                    first_bad = idx
            sign = crossings[idx][_SIGN]
            code.append((crossing_number[idx], is_over, sign))
            e = nxt
    return tuple(code), first_bad


def _merge_edges(crossings, loops, keep, kill):
    """Join two open edge ends: relabel ``kill`` to ``keep``.

    When the two labels already coincide the strand closes into a
    crossing-free loop."""
    if keep == kill:
        return crossings, loops + 1
    out = []
    for c in crossings:
        out.append(tuple(keep if e == kill else e for e in c))
    return tuple(out), loops


def _smooth(crossings, loops, index):
    """Oriented smoothing: under_in joins over_out, over_in joins under_out.

    Joins are resolved through the accumulated relabeling so that crossings
    incident to themselves (loops at the crossing) merge correctly."""
    c = crossings[index]
    rest = crossings[:index] + crossings[index + 1:]
    relabel: dict[int, int] = {}

    def find(e):
        while e in relabel:
            e = relabel[e]
        return e

    for a, b in ((c[_UIN], c[_OOUT]), (c[_OIN], c[_UOUT])):
        ra, rb = find(a), find(b)
        if ra == rb:
            loops += 1
        else:
            relabel[max(ra, rb)] = min(ra, rb)
    if relabel:
        rest = tuple(
            (cr[0], find(cr[1]), find(cr[2]), find(cr[3]), find(cr[4])) for cr in rest
        )
    return rest, loops


def _switch(crossings, index):
    c = crossings[index]
    flipped = (-c[_SIGN], c[_UIN], c[_UOUT], c[_OIN], c[_OOUT])
    return crossings[:index] + (flipped,) + crossings[index + 1:]


def _remove_kinks(crossings, loops):
    """Delete R1 kinks (a crossing one of whose exits feeds its own entrance);
    the HOMFLY polynomial is unframed, so the value is unchanged."""
    changed = True
    while changed:
        changed = False
        for idx, c in enumerate(crossings):
            if c[_OOUT] == c[_UIN]:
                join = (c[_OIN], c[_UOUT])
            elif c[_UOUT] == c[_OIN]:
                join = (c[_UIN], c[_OOUT])
            else:
                continue
            rest = crossings[:idx] + crossings[idx + 1:]
            if join[0] == join[1]:
                crossings, loops = rest, loops + 1
            else:
                crossings, loops = _merge_edges(rest, loops, min(join), max(join))
            changed = True
            break
    return crossings, loops


_unlink_powers: list[HomflyPoly] = [HomflyPoly.one()]


def _unlink_value(components: int) -> HomflyPoly:
    if components < 1:
        raise DiagramError("the empty diagram has no HOMFLY normalization")
    while len(_unlink_powers) < components:
        _unlink_powers.append(_unlink_powers[-1] * UNLINK_FACTOR)
    return _unlink_powers[components - 1]


def _homfly_state(state, memo) -> HomflyPoly:
    crossings, loops = _remove_kinks(*state)
    if not crossings:
        return _unlink_value(loops)
    key, first_bad = _canonical_walk((crossings, loops))
    cached = memo.get(key)
    if cached is not None:
        return cached
    if first_bad is None:
        # Descending diagram: an unlink of its components.
        ncomp = len(_state_components((crossings, loops))) + loops
        value = _unlink_value(ncomp)
    else:
        sign = crossings[first_bad][_SIGN]
        switched = (_switch(crossings, first_bad), loops)
        smoothed = _smooth(crossings, loops, first_bad)
        p_switched = _homfly_state(switched, memo)
        p_smoothed = _homfly_state(smoothed, memo)
        if sign > 0:
            # P+ = a^-2 P- + a^-1 z P0
            value = p_switched.shifted(-2, 0) + p_smoothed.shifted(-1, 1)
        else:
            # P- = a^2 P+ - a z P0
            value = p_switched.shifted(2, 0) + p_smoothed.shifted(1, 1, -1)
    memo[key] = value
    return value


def homfly(diagram: PlanarDiagram, memo: dict | None = None) -> HomflyPoly:
    """HOMFLY polynomial of the oriented link presented by ``diagram``.

    A shared ``memo`` dict may be passed to amortize canonical sub-diagram
    values across several computations; concurrent reuse is safe because
    identical keys always map to identical values.
    """
    if memo is None:
        memo = {}
    state = _state_from_diagram(diagram)
    if not state[0] and not state[1]:
        raise DiagramError("the empty diagram has no HOMFLY normalization")
    old_limit = sys.getrecursionlimit()
    depth_needed = 4 * len(diagram.crossings) ** 2 + 1000
    if depth_needed > old_limit:
        sys.setrecursionlimit(depth_needed)
    try:
        return _homfly_state(state, memo)
    finally:
        if depth_needed > old_limit:
            sys.setrecursionlimit(old_limit)


def homfly_of_braid_closure(word: BraidWord, memo: dict | None = None) -> HomflyPoly:
    return homfly(braid_closure_diagram(word), memo)
