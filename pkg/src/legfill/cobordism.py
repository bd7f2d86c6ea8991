"""Elementary cobordism and isotopy moves on fronts, the inductive filling
constructor, move-script replay, and Euler-characteristic verification.

All moves are stated in the upward direction of a filling trace, from the
empty front toward the target front:

* ``Birth`` inserts a disjoint maximal-tb unknot (a 0-handle);
* ``Saddle`` resolves an adjacent right-cusp/left-cusp pair into two
  through-going strands (an oriented 1-handle); component count changes by
  one and chi drops by one;
* ``PinchCrossing`` inserts a positive crossing (the 1-handle-plus-isotopy
  composite used by the filling constructor; reading downward it deletes the
  crossing, i.e. takes its 0-resolution);
* ``R1``/``R2``/``R3``/``Exchange`` are Legendrian isotopies, each an exact
  local rewrite of the event word that preserves tb and rot of every
  component.

The constructor follows the induction behind the positive-knots result: a
front carrying an all-switched oriented normal ruling is pinched one switch
at a time along innermost ruling disks down to a disjoint union of
maximal-tb unknots, which is born by 0-handles; the recorded trace replays
upward and satisfies chi = cusp pairs - crossings and tb = -chi exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

from .front import (
    CROSSING,
    LEFT_CUSP,
    RIGHT_CUSP,
    Front,
    FrontFormatError,
    OrientedFront,
    SweepViolation,
    format_front,
    oriented_zero_resolution,
    parse_front,
)
from .ruling import Ruling, find_all_switched_oriented, ruling_disk_columns


class PatternMismatch(ValueError):
    """The move's local pattern is absent at the indicated position."""


class NotFillableByThisMethod(RuntimeError):
    """The front carries no all-switched oriented normal ruling."""


class InternalError(RuntimeError):
    """A structural guarantee of the construction failed; indicates either a
    bug or a transcription gap in the local pinch patterns."""


# ---------------------------------------------------------------------------
# Moves


@dataclass(frozen=True)
class Birth:
    """Insert a disjoint unknot ``L(level) R(level)`` at event position ``at``
    (end of the word when omitted)."""

    level: int
    at: Optional[int] = None


@dataclass(frozen=True)
class PinchCrossing:
    """Upward: insert a positive crossing at event position ``at``.  Downward
    (as used by the constructor) the same data deletes that crossing."""

    at: int
    level: int


@dataclass(frozen=True)
class Saddle:
    """Resolve the adjacent pair ``R(level) L(level)`` at event positions
    ``at``, ``at+1`` into parallel strands."""

    at: int
    level: int


@dataclass(frozen=True)
class R1:
    """Swallowtail at a cusp: variant ``lu``/``ll`` (left cusp, loop on the
    upper/lower branch) or ``ru``/``rl`` (right cusp).  ``insert=False``
    removes the swallowtail pattern instead."""

    at: int
    variant: str
    insert: bool = True


@dataclass(frozen=True)
class R2:
    """Slide a cusp through a transverse strand, creating or cancelling two
    crossings.  Variants: ``lu``/``ld`` push a left cusp up/down, ``ru``/``rd``
    a right cusp."""

    at: int
    variant: str
    insert: bool = True


@dataclass(frozen=True)
class R3:
    """Triangle move on three consecutive crossings at adjacent levels."""

    at: int


@dataclass(frozen=True)
class Exchange:
    """Commute the events at positions ``at``, ``at+1`` acting on disjoint
    level ranges, with the forced level adjustments."""

    at: int


@dataclass(frozen=True)
class Arrange:
    """Separation annotation for the 0-handle base case: rearrange a disjoint
    union of maximal-tb unknots into the recorded target word.  Definitionally
    a Legendrian isotopy (disjoint fronts at distinct levels); not
    pattern-checked beyond that."""

    target: tuple[tuple[str, int], ...]


Move = Union[Birth, PinchCrossing, Saddle, R1, R2, R3, Exchange, Arrange]

ISOTOPY_MOVES = (R1, R2, R3, Exchange, Arrange)


def _insert_events(front: Front, at: int, new_events) -> Front:
    events = list(front.events)
    if not 0 <= at <= len(events):
        raise PatternMismatch(f"event position {at} outside word of length {len(events)}")
    events[at:at] = list(new_events)
    try:
        return Front(events)
    except SweepViolation as err:
        raise PatternMismatch(f"insertion at {at} breaks the sweep: {err}") from None


def _delete_events(front: Front, at: int, count: int) -> Front:
    events = list(front.events)
    del events[at:at + count]
    try:
        return Front(events)
    except SweepViolation as err:
        raise PatternMismatch(f"deletion at {at} breaks the sweep: {err}") from None


def _expect(front: Front, at: int, kind: str, level: Optional[int] = None):
    if not 0 <= at < len(front.events):
        raise PatternMismatch(f"no event at position {at}")
    k, l = front.events[at]
    if k != kind or (level is not None and l != level):
        want = f"{kind} {level}" if level is not None else kind
        raise PatternMismatch(f"expected {want} at position {at}, found {k} {l}")
    return l


def _component_profile(front: Front):
    """Multiset of per-component (tb, |rot|), plus the component count."""
    oriented = OrientedFront(front)
    st = front.structure
    profile = []
    for comp in st.components:
        strands = set(comp.strands)
        writhe = 0
        for c in st.crossings:
            if c.upper in strands and c.lower in strands:
                writhe += oriented.crossing_sign(c.ordinal)
        down = up = 0
        for cusp in st.left_cusps:
            if cusp.upper in strands:
                if oriented.direction(cusp.upper) == -1:
                    down += 1
                else:
                    up += 1
        for cusp in st.right_cusps:
            if cusp.upper in strands:
                if oriented.direction(cusp.upper) == 1:
                    down += 1
                else:
                    up += 1
        tb = writhe - len(comp.right_cusps)
        profile.append((tb, abs(down - up) // 2))
    return sorted(profile)


_R1_PATTERNS = {
    # variant: (cusp kind, pattern builder, levels relative to cusp level m)
    "lu": (LEFT_CUSP, lambda m: [(LEFT_CUSP, m), (LEFT_CUSP, m), (CROSSING, m + 1), (RIGHT_CUSP, m)]),
    "ll": (LEFT_CUSP, lambda m: [(LEFT_CUSP, m), (LEFT_CUSP, m + 2), (CROSSING, m + 1), (RIGHT_CUSP, m + 2)]),
    "ru": (RIGHT_CUSP, lambda m: [(LEFT_CUSP, m), (CROSSING, m + 1), (RIGHT_CUSP, m), (RIGHT_CUSP, m)]),
    "rl": (RIGHT_CUSP, lambda m: [(LEFT_CUSP, m + 2), (CROSSING, m + 1), (RIGHT_CUSP, m + 2), (RIGHT_CUSP, m)]),
}

_R2_PATTERNS = {
    # variant: (cusp kind, plain level from pattern level, pattern builder)
    # lu: [L(m+1)] <-> [L(m), X(m+1), X(m)]   (strand just above the cusp)
    "lu": (LEFT_CUSP, lambda m: [(LEFT_CUSP, m - 1), (CROSSING, m), (CROSSING, m - 1)]),
    # ld: [L(m)] <-> [L(m+1), X(m), X(m+1)]   (strand just below the cusp)
    "ld": (LEFT_CUSP, lambda m: [(LEFT_CUSP, m + 1), (CROSSING, m), (CROSSING, m + 1)]),
    # ru: [R(m+1)] <-> [X(m), X(m+1), R(m)]
    "ru": (RIGHT_CUSP, lambda m: [(CROSSING, m - 1), (CROSSING, m), (RIGHT_CUSP, m - 1)]),
    # rd: [R(m)] <-> [X(m+1), X(m), R(m+1)]
    "rd": (RIGHT_CUSP, lambda m: [(CROSSING, m + 1), (CROSSING, m), (RIGHT_CUSP, m + 1)]),
}


def _apply_r1(front: Front, move: R1) -> Front:
    if move.variant not in _R1_PATTERNS:
        raise PatternMismatch(f"unknown r1 variant {move.variant!r}")
    cusp_kind, builder = _R1_PATTERNS[move.variant]
    if move.insert:
        m = _expect(front, move.at, cusp_kind)
        pattern = builder(m)
        return _insert_events(_delete_events_unchecked(front, move.at), move.at, pattern)
    # removal: the 4-event pattern collapses back to the lone cusp
    for m_try in _candidate_levels(front, move.at):
        pattern = builder(m_try)
        if _matches(front, move.at, pattern):
            return _insert_events(
                _delete_events_unchecked(front, move.at, 4), move.at, [(cusp_kind, m_try)]
            )
    raise PatternMismatch(f"no r1 {move.variant} pattern at position {move.at}")


def _apply_r2(front: Front, move: R2) -> Front:
    if move.variant not in _R2_PATTERNS:
        raise PatternMismatch(f"unknown r2 variant {move.variant!r}")
    cusp_kind, builder = _R2_PATTERNS[move.variant]
    if move.insert:
        m = _expect(front, move.at, cusp_kind)
        pattern = builder(m)
        return _insert_events(_delete_events_unchecked(front, move.at), move.at, pattern)
    for m_try in _candidate_levels(front, move.at):
        pattern = builder(m_try)
        if _matches(front, move.at, pattern):
            return _insert_events(
                _delete_events_unchecked(front, move.at, len(pattern)),
                move.at, [(cusp_kind, m_try)],
            )
    raise PatternMismatch(f"no r2 {move.variant} pattern at position {move.at}")


def _delete_events_unchecked(front: Front, at: int, count: int = 1):
    events = list(front.events)
    if not 0 <= at < len(events):
        raise PatternMismatch(f"no event at position {at}")
    del events[at:at + count]
    return _RawWord(events)


class _RawWord:
    """Unvalidated event list used mid-rewrite; only _insert_events consumes it."""

    def __init__(self, events):
        self.events = tuple(events)


def _matches(front: Front, at: int, pattern) -> bool:
    if at + len(pattern) > len(front.events):
        return False
    return list(front.events[at:at + len(pattern)]) == list(pattern)


def _candidate_levels(front: Front, at: int):
    if 0 <= at < len(front.events):
        base = front.events[at][1]
        return sorted({m for m in (base - 2, base - 1, base, base + 1, base + 2) if m >= 1})
    return []


def _apply_r3(front: Front, move: R3) -> Front:
    i = move.at
    if i + 3 > len(front.events):
        raise PatternMismatch(f"no three events at position {i}")
    window = front.events[i:i + 3]
    if any(kind != CROSSING for kind, _ in window):
        raise PatternMismatch(f"r3 needs three crossings at position {i}")
    a, b, c = (level for _, level in window)
    if a == c and abs(a - b) == 1:
        replacement = [(CROSSING, b), (CROSSING, a), (CROSSING, b)]
    else:
        raise PatternMismatch(
            f"r3 needs levels (k, k+-1, k) at position {i}, found ({a}, {b}, {c})")
    return _insert_events(_delete_events_unchecked(front, i, 3), i, replacement)


def _apply_exchange(front: Front, move: Exchange) -> Front:
    i = move.at
    if i + 2 > len(front.events):
        raise PatternMismatch(f"no two events at position {i}")
    (ka, a), (kb, b) = front.events[i:i + 2]

    def reject():
        raise PatternMismatch(
            f"events {ka} {a} and {kb} {b} at position {i} do not commute")

    if ka == LEFT_CUSP:
        if kb == LEFT_CUSP:
            if b == a + 1:
                reject()
            first, second = ((kb, b), (ka, a + 2)) if b <= a else ((kb, b - 2), (ka, a))
        elif b + 1 < a:
            first, second = (kb, b), (ka, a - 2 if kb == RIGHT_CUSP else a)
        elif b > a + 1:
            first, second = (kb, b - 2), (ka, a)
        else:
            reject()
    elif ka == CROSSING:
        if kb == LEFT_CUSP:
            if b == a + 1:
                reject()
            first, second = ((kb, b), (ka, a + 2)) if b <= a else ((kb, b - 2), (ka, a))
        elif b + 1 < a:
            first, second = (kb, b), (ka, a - 2 if kb == RIGHT_CUSP else a)
        elif b > a + 1:
            first, second = (kb, b), (ka, a)
        else:
            reject()
    else:  # ka == RIGHT_CUSP
        if kb == LEFT_CUSP:
            first, second = ((kb, b), (ka, a + 2)) if b <= a - 1 else ((kb, b + 2), (ka, a))
        elif b + 1 < a:
            first, second = (kb, b), (ka, a - 2 if kb == RIGHT_CUSP else a)
        elif b >= a:
            first, second = (kb, b + 2), (ka, a)
        else:
            reject()
    return _insert_events(_delete_events_unchecked(front, i, 2), i, [first, second])


def _apply_arrange(front: Front, move: Arrange) -> Front:
    target = Front(move.target)
    for name, f in (("current", front), ("target", target)):
        for comp in f.structure.components:
            if len(comp.left_cusps) != 1 or len(comp.right_cusps) != 1 or comp.crossings:
                raise PatternMismatch(
                    f"arrange requires a disjoint union of maximal-tb unknots; "
                    f"{name} front is not one")
    if front.component_count() != target.component_count():
        raise PatternMismatch("arrange must preserve the number of unknots")
    return target


def apply_move(front: Front, move: Move) -> Front:
    """Apply one upward move; raises PatternMismatch with position diagnostics
    when the local pattern is absent.  Isotopy moves assert preservation of
    every component's tb and |rot|."""
    before_profile = _component_profile(front) if isinstance(move, ISOTOPY_MOVES) else None
    if isinstance(move, Birth):
        at = len(front.events) if move.at is None else move.at
        result = _insert_events(front, at, [(LEFT_CUSP, move.level), (RIGHT_CUSP, move.level)])
    elif isinstance(move, PinchCrossing):
        result = _insert_events(front, move.at, [(CROSSING, move.level)])
        ordinal = next(
            c.ordinal for c in result.structure.crossings if c.event_index == move.at)
        info = result.structure.crossings[ordinal]
        st = result.structure
        if st.component_of_strand[info.upper] == st.component_of_strand[info.lower]:
            if OrientedFront(result).crossing_sign(ordinal) != 1:
                raise PatternMismatch(
                    f"pinch at position {move.at} would insert a negative crossing")
    elif isinstance(move, Saddle):
        _expect(front, move.at, RIGHT_CUSP, move.level)
        _expect(front, move.at + 1, LEFT_CUSP, move.level)
        st = front.structure
        right = next(c for c in st.right_cusps if c.event_index == move.at)
        left = next(c for c in st.left_cusps if c.event_index == move.at + 1)
        same_component = (
            st.component_of_strand[right.upper] == st.component_of_strand[left.upper])
        if same_component:
            oriented = OrientedFront(front)
            if oriented.direction(right.upper) != oriented.direction(left.upper):
                raise PatternMismatch(
                    f"saddle at position {move.at} is not orientable")
        result = _delete_events(front, move.at, 2)
    elif isinstance(move, R1):
        result = _apply_r1(front, move)
    elif isinstance(move, R2):
        result = _apply_r2(front, move)
    elif isinstance(move, R3):
        result = _apply_r3(front, move)
    elif isinstance(move, Exchange):
        result = _apply_exchange(front, move)
    elif isinstance(move, Arrange):
        result = _apply_arrange(front, move)
    else:
        raise TypeError(f"not a move: {move!r}")
    if before_profile is not None:
        after_profile = _component_profile(result)
        if before_profile != after_profile:
            raise InternalError(
                f"isotopy move {move} changed component invariants "
                f"{before_profile} -> {after_profile}")
    return result


# ---------------------------------------------------------------------------
# Traces


@dataclass(frozen=True)
class FillingTrace:
    """An ordered move list from the empty front, with the front after each
    step.  chi counts births minus handles; isotopy steps contribute zero."""

    steps: tuple[tuple[Move, Front], ...]

    @property
    def end(self) -> Front:
        return self.steps[-1][1] if self.steps else Front(())

    @property
    def moves(self) -> tuple[Move, ...]:
        return tuple(m for m, _ in self.steps)

    def counts(self) -> tuple[int, int, int]:
        births = sum(isinstance(m, Birth) for m in self.moves)
        pinches = sum(isinstance(m, PinchCrossing) for m in self.moves)
        saddles = sum(isinstance(m, Saddle) for m in self.moves)
        return births, pinches, saddles

    @property
    def chi(self) -> int:
        births, pinches, saddles = self.counts()
        return births - (pinches + saddles)

    @property
    def genus(self) -> Optional[int]:
        """Genus of the filling surface when the end front is a knot."""
        if self.end.component_count() != 1:
            return None
        return (1 - self.chi) // 2


def replay_script(moves: Sequence[Move]) -> FillingTrace:
    """Apply moves in order from the empty front; PatternMismatch failures
    are re-raised with the failing step index."""
    front = Front(())
    steps = []
    for index, move in enumerate(moves):
        try:
            front = apply_move(front, move)
        except PatternMismatch as err:
            raise PatternMismatch(f"step {index}: {err}") from None
        steps.append((move, front))
    return FillingTrace(tuple(steps))


# ---------------------------------------------------------------------------
# The Theorem-3.1 constructor


def _eligible_pinch(oriented: OrientedFront, ruling: Ruling):
    """Smallest-event-index switch on the boundary of an innermost ruling
    disk, with the local Figure-5 pattern re-checked."""
    front = oriented.front
    spans = ruling_disk_columns(front, ruling)
    disks = sorted(spans)

    def inside(d, e):
        de, ee = spans[d], spans[e]
        for column, (lo, hi) in de.items():
            if column in ee:
                elo, ehi = ee[column]
                if elo < lo and hi < ehi:
                    return True
        return False

    innermost = {d for d in disks if not any(inside(e, d) for e in disks if e != d)}
    candidates = []
    for c in front.structure.crossings:
        column = c.event_index
        match = ruling.column_matchings[column]
        k = c.level - 1
        upper_disk = _disk_at(spans, column, k)
        lower_disk = _disk_at(spans, column, k + 1)
        if upper_disk not in innermost and lower_disk not in innermost:
            continue
        p, q = match[k], match[k + 1]
        disjoint = p < k and q > k + 1
        nested_above = q < p < k
        nested_below = k + 1 < q < p
        if not (disjoint or nested_above or nested_below):
            raise InternalError(
                f"switch at crossing {c.ordinal} matches no transcribed local "
                f"pinch pattern (partners {p}, {q} at positions {k}, {k + 1})")
        candidates.append(c)
    if not candidates:
        raise InternalError("no switch on an innermost ruling disk")
    return min(candidates, key=lambda c: c.event_index)


def _disk_at(spans, column, position):
    for d, cols in spans.items():
        if column in cols and position in cols[column]:
            return d
    raise InternalError(f"no ruling disk at column {column} position {position}")


def _birth_plan(base: Front) -> list[Move]:
    """Births reconstructing a crossing-free base front, one per component;
    falls back to side-by-side births plus one Arrange step when component
    spans interleave."""
    comps = sorted(base.structure.components, key=lambda c: c.left_cusps[0])
    for comp in comps:
        if len(comp.left_cusps) != 1 or len(comp.right_cusps) != 1 or comp.crossings:
            raise InternalError(
                "base of the induction is not a union of maximal-tb unknots")
    spans = [(c.left_cusps[0], c.right_cusps[0]) for c in comps]
    interleaved = any(
        li < lj < ri < rj
        for (li, ri) in spans for (lj, rj) in spans
        if (li, ri) != (lj, rj)
    )
    if interleaved:
        moves: list[Move] = [Birth(1) for _ in comps]
        moves.append(Arrange(base.events))
        return moves
    moves = []
    inserted: list[int] = []  # final event indices already present
    for comp, (li, ri) in zip(comps, spans):
        level = base.events[li][1]
        at = sum(1 for e in inserted if e < li)
        moves.append(Birth(level, at))
        inserted.extend((li, ri))
    return moves


def construct_filling(oriented: OrientedFront) -> FillingTrace:
    """Decomposable filling trace for a front with an all-switched oriented
    normal ruling, per the induction on crossings: pinch a switch on an
    innermost ruling disk, recurse, then birth the base unknots."""
    if find_all_switched_oriented(oriented) is None:
        raise NotFillableByThisMethod(
            "front carries no oriented normal ruling with all crossings switched")
    pinches_down: list[PinchCrossing] = []
    work = oriented
    while work.front.crossing_count() > 0:
        ruling = find_all_switched_oriented(work)
        if ruling is None:
            raise InternalError("all-switched oriented ruling lost after a pinch")
        target = _eligible_pinch(work, ruling)
        pinches_down.append(PinchCrossing(target.event_index, target.level))
        work = oriented_zero_resolution(work, [target.ordinal])
    moves = _birth_plan(work.front)
    moves.extend(reversed(pinches_down))
    trace = replay_script(moves)
    if trace.end != oriented.front:
        raise InternalError("reconstructed trace does not end at the input front")
    return trace


# ---------------------------------------------------------------------------
# Verification


@dataclass(frozen=True)
class TraceCheck:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class TraceReport:
    checks: tuple[TraceCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def verify_trace(trace: FillingTrace, bands=None) -> TraceReport:
    """Replay the moves, check the chi bookkeeping, the end front, and
    tb = -chi for knot endpoints; with a band presentation of the same knot
    also check chi against Rudolph's n - k."""
    checks = []
    front = Front(())
    replay_ok = True
    detail = ""
    for index, (move, recorded) in enumerate(trace.steps):
        try:
            front = apply_move(front, move)
        except PatternMismatch as err:
            replay_ok, detail = False, f"step {index}: {err}"
            break
        if front != recorded:
            replay_ok, detail = False, f"step {index}: recorded front differs"
            break
    checks.append(TraceCheck("replay", replay_ok, detail or "all steps replay"))

    births, pinches, saddles = trace.counts()
    chi = births - (pinches + saddles)
    checks.append(TraceCheck(
        "chi_bookkeeping", chi == trace.chi,
        f"births={births} pinches={pinches} saddles={saddles} chi={chi}"))

    end = trace.end
    try:
        Front(end.events)
        checks.append(TraceCheck("end_valid", True, "end front passes the sweep"))
    except SweepViolation as err:
        checks.append(TraceCheck("end_valid", False, str(err)))

    if end.component_count() == 1 and len(end.events) > 0:
        tb = OrientedFront(end).tb()
        checks.append(TraceCheck(
            "tb_matches_chi", tb == -trace.chi, f"tb={tb} chi={trace.chi}"))

    if bands is not None:
        from .braid import chi4_quasipositive, closure_components, expand_bands

        chi4 = chi4_quasipositive(bands)
        _, ncomp = closure_components(expand_bands(bands))
        ok = ncomp == 1 and chi4 == trace.chi
        checks.append(TraceCheck(
            "chi_matches_chi4", ok,
            f"chi={trace.chi} chi4={chi4} closure_components={ncomp}"))
    return TraceReport(tuple(checks))


# ---------------------------------------------------------------------------
# Script serialization


def parse_moves(text: str) -> list[Move]:
    """Parse the ``.moves`` format, one move per line."""
    moves: list[Move] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        kind = parts[0]
        try:
            if kind == "birth":
                level = int(parts[1])
                at = int(parts[2]) if len(parts) > 2 else None
                moves.append(Birth(level, at))
            elif kind == "pinch":
                moves.append(PinchCrossing(int(parts[1]), int(parts[2])))
            elif kind == "saddle":
                moves.append(Saddle(int(parts[1]), int(parts[2])))
            elif kind == "xchg":
                moves.append(Exchange(int(parts[1])))
            elif kind == "r3":
                moves.append(R3(int(parts[1])))
            elif kind == "r1":
                moves.append(R1(int(parts[1]), parts[2], parts[3] != "out"))
            elif kind == "r2":
                moves.append(R2(int(parts[1]), parts[2], parts[3] != "out"))
            elif kind == "arrange":
                target = parse_front(" ".join(parts[1:]))
                moves.append(Arrange(target.events))
            else:
                raise FrontFormatError(f"unknown move {kind!r}")
        except (IndexError, ValueError) as err:
            raise FrontFormatError(f"bad move line {line!r}: {err}") from None
    return moves


def format_move(move: Move) -> str:
    if isinstance(move, Birth):
        return f"birth {move.level}" + (f" {move.at}" if move.at is not None else "")
    if isinstance(move, PinchCrossing):
        return f"pinch {move.at} {move.level}"
    if isinstance(move, Saddle):
        return f"saddle {move.at} {move.level}"
    if isinstance(move, Exchange):
        return f"xchg {move.at}"
    if isinstance(move, R3):
        return f"r3 {move.at}"
    if isinstance(move, R1):
        return f"r1 {move.at} {move.variant} {'in' if move.insert else 'out'}"
    if isinstance(move, R2):
        return f"r2 {move.at} {move.variant} {'in' if move.insert else 'out'}"
    if isinstance(move, Arrange):
        return "arrange " + " / ".join(f"{k} {l}" for k, l in move.target)
    raise TypeError(f"not a move: {move!r}")


def format_trace(trace: FillingTrace) -> str:
    """Per-step lines ``step=<n> move=<...> chi=<running chi>`` followed by the
    end front in .front format."""
    lines = []
    chi = 0
    for index, (move, _) in enumerate(trace.steps):
        if isinstance(move, Birth):
            chi += 1
        elif isinstance(move, (PinchCrossing, Saddle)):
            chi -= 1
        lines.append(f"step={index} move={format_move(move)} chi={chi}")
    lines.append(format_front(trace.end).rstrip("\n"))
    return "\n".join(lines) + "\n"
