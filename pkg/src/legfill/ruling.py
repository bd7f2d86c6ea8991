"""Normal rulings of fronts: enumeration, the all-switched ruling, and the
unlinked-resolution test.

A ruling pairs left cusps with right cusps through companion paths covering
the front.  Sweeping left to right, the state is a perfect matching on the
active strand positions: a left cusp matches its two new strands to each
other, a right cusp may only kill a matched pair, a passed crossing carries
the matching through the strands, and a switched crossing preserves partners
by position.  A switch is legal only when the crossing strands are not
mutual partners and the two ruling disks near the crossing are nested or
disjoint; the interleaved configuration is excluded.  An oriented ruling
switches only at positive crossings.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Union

from .front import CROSSING, LEFT_CUSP, RIGHT_CUSP, Front, OrientedFront, zero_resolution


@dataclass(frozen=True)
class Ruling:
    """A normal ruling: its switch set, the cusp pairing it induces, and the
    per-column matching of active strand positions (0-based partners).

    ``oriented`` records whether all switches sit at positive crossings; it is
    None when the front came without an orientation."""

    switches: frozenset[int]                      # crossing ordinals
    cusp_pairing: tuple[tuple[int, int], ...]     # (left event, right event)
    column_matchings: tuple[tuple[int, ...], ...]
    oriented: Optional[bool]

    def sort_key(self):
        return tuple(sorted(self.switches))

    def switch_count(self) -> int:
        return len(self.switches)


def _normality_allows(match: tuple[int, ...], k: int) -> bool:
    """Can the sweep switch at a crossing of positions k, k+1 (0-based)?

    The two disks near the crossing span the open vertical intervals between
    each crossing strand and its partner; they must be nested or disjoint.
    """
    p = match[k]
    q = match[k + 1]
    if p == k + 1:
        return False  # mutual partners: the companion paths would meet here
    lo_a, hi_a = min(k, p), max(k, p)
    lo_b, hi_b = min(k + 1, q), max(k + 1, q)
    if lo_a >= lo_b and hi_a <= hi_b:
        return True   # disk A nested in disk B
    if lo_b >= lo_a and hi_b <= hi_a:
        return True   # disk B nested in disk A
    return max(lo_a, lo_b) >= min(hi_a, hi_b)  # disjoint interiors


def _pass_through(match: tuple[int, ...], k: int) -> tuple[int, ...]:
    """Matching after the crossing strands pass through each other."""
    m = list(match)
    p, q = m[k], m[k + 1]
    if p == k + 1:
        return match  # partners crossing: positions still matched to each other
    m[k], m[k + 1] = q, p
    m[p], m[q] = k + 1, k
    return tuple(m)


class _RulingSweep:
    """Shared machinery: advance (matching, disk labels) through one event."""

    def __init__(self, front: Front, signs: Optional[tuple[int, ...]]):
        self.front = front
        self.signs = signs
        self.crossing_ordinal_at = {
            c.event_index: c.ordinal for c in front.structure.crossings
        }

    def step(self, state, event_index):
        """Yield (state, switched_ordinal_or_None) successors; prune dead ends.

        state = (matching, disks, pairing) with disks mapping positions to the
        left-cusp event owning the path, and pairing the finished cusp pairs.
        """
        match, disks, pairing = state
        kind, level = self.front.events[event_index]
        k = level - 1
        if kind == LEFT_CUSP:
            m = [x + 2 if x >= k else x for x in match]
            m[k:k] = [k + 1, k]
            d = list(disks)
            d[k:k] = [event_index, event_index]
            yield (tuple(m), tuple(d), pairing), None
        elif kind == RIGHT_CUSP:
            if match[k] != k + 1:
                return  # dying strands not matched: no ruling this way
            m = [x - 2 if x >= k + 2 else x for i, x in enumerate(match) if i not in (k, k + 1)]
            d = tuple(x for i, x in enumerate(disks) if i not in (k, k + 1))
            yield (tuple(m), d, pairing + ((disks[k], event_index),)), None
        else:
            ordinal = self.crossing_ordinal_at[event_index]
            # pass: labels follow the strands through
            d = list(disks)
            d[k], d[k + 1] = d[k + 1], d[k]
            yield (_pass_through(match, k), tuple(d), pairing), None
            # switch: partners preserved by position
            if _normality_allows(match, k):
                if self.signs is None or self.signs[ordinal] == 1:
                    yield (match, disks, pairing), ordinal


def _initial_state():
    return ((), (), ())


def enumerate_rulings(
    front: Union[Front, OrientedFront], oriented_only: bool = False
) -> list[Ruling]:
    """All normal rulings of the front, sweeping left to right and branching
    at each crossing over pass/switch.  With ``oriented_only`` switches at
    negative crossings are pruned, which requires an oriented front.  The
    result is sorted by switch set, lexicographically."""
    if isinstance(front, OrientedFront):
        oriented = front
        front = oriented.front
        signs = oriented.crossing_signs()
    else:
        if oriented_only:
            raise ValueError("oriented_only requires an OrientedFront")
        oriented = None
        signs = None
    sweep = _RulingSweep(front, signs if oriented_only else None)
    all_signs = signs

    results: list[Ruling] = []
    columns0 = (_initial_state()[0],)

    def recurse(event_index, state, switches, matchings):
        if event_index == len(front.events):
            match, disks, pairing = state
            ruling_oriented = None
            if all_signs is not None:
                ruling_oriented = all(all_signs[s] == 1 for s in switches)
            results.append(Ruling(
                frozenset(switches),
                tuple(sorted(pairing)),
                tuple(matchings),
                ruling_oriented,
            ))
            return
        for nxt, switched in sweep.step(state, event_index):
            recurse(
                event_index + 1,
                nxt,
                switches + [switched] if switched is not None else switches,
                matchings + [nxt[0]],
            )

    recurse(0, _initial_state(), [], [()])
    results.sort(key=Ruling.sort_key)
    return results


def find_all_switched_oriented(oriented: OrientedFront) -> Optional[Ruling]:
    """The ruling switching at every crossing, when it is a valid oriented
    normal ruling; the switch set is forced so at most one candidate exists."""
    front = oriented.front
    signs = oriented.crossing_signs()
    sweep = _RulingSweep(front, signs)
    state = _initial_state()
    matchings = [()]
    switches = []
    for event_index, (kind, level) in enumerate(front.events):
        if kind == CROSSING:
            chosen = None
            for nxt, switched in sweep.step(state, event_index):
                if switched is not None:
                    chosen = (nxt, switched)
            if chosen is None:
                return None
            state, ordinal = chosen
            switches.append(ordinal)
        else:
            advanced = list(sweep.step(state, event_index))
            if not advanced:
                return None
            state = advanced[0][0]
        matchings.append(state[0])
    _, _, pairing = state
    return Ruling(frozenset(switches), tuple(sorted(pairing)), tuple(matchings), True)


def unlinked_resolution(front: Front, ruling: Ruling) -> bool:
    """True when 0-resolving the front at the ruling's switches leaves only
    components with exactly one left cusp, one right cusp, and no crossings:
    an unlink of maximal-tb unknots."""
    resolved = zero_resolution(front, ruling.switches)
    for comp in resolved.structure.components:
        if len(comp.left_cusps) != 1 or len(comp.right_cusps) != 1 or comp.crossings:
            return False
    return True


def replay_switch_set(front: Front, switches: Iterable[int]):
    """Deterministic sweep for a fixed switch set; the full state list, or
    None when the subset is not a normal ruling."""
    chosen_switches = set(switches)
    sweep = _RulingSweep(front, None)
    state = _initial_state()
    states = [state]
    for idx, (kind, _) in enumerate(front.events):
        want_switch = kind == CROSSING and sweep.crossing_ordinal_at[idx] in chosen_switches
        advanced = None
        for nxt, switched in sweep.step(state, idx):
            if (switched is not None) == want_switch:
                advanced = nxt
        if advanced is None:
            return None
        state = advanced
        states.append(state)
    return states


def ruling_disk_columns(front: Front, ruling: Ruling) -> dict[int, dict[int, tuple[int, int]]]:
    """For each disk (keyed by its left cusp event) the vertical position
    interval of its two paths, per column.  Used for nesting analysis."""
    states = replay_switch_set(front, ruling.switches)
    if states is None:
        raise ValueError("ruling is not a ruling of this front")
    spans: dict[int, dict[int, tuple[int, int]]] = {}
    for column, (_, disks, _) in enumerate(states):
        positions: dict[int, list[int]] = {}
        for pos, d in enumerate(disks):
            positions.setdefault(d, []).append(pos)
        for d, ps in positions.items():
            spans.setdefault(d, {})[column] = (min(ps), max(ps))
    return spans
