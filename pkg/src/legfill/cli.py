"""Command-line surface and the fillability audit.

The audit combines every component: the positivity certificate and Rudolph's
chi_4 from the band presentation, the HOMFLY polynomial and its tb bound from
the front's planar diagram, the front's classical invariants, and an attempt
to build a decomposable filling.  When no filling is found it checks the
contradiction schema behind the non-fillability argument: a filling would
force tb = -chi_4 and a sharp HOMFLY bound, so -chi_4 != bound rules one out.

Exit codes: 0 success, 1 computation error, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from typing import Optional

from .braid import (
    BandPresentation,
    BraidFormatError,
    BraidWord,
    GeneratorOutOfRange,
    HierarchyLevel,
    chi4_quasipositive,
    classify_certificate,
    closure_components,
    expand_bands,
    parse_bands,
    parse_braid,
)
from .cobordism import (
    FillingTrace,
    NotFillableByThisMethod,
    PatternMismatch,
    construct_filling,
    format_trace,
    parse_moves,
    replay_script,
    verify_trace,
)
from .corpus import UnknownLabel, corpus_get, corpus_list
from .front import (
    Front,
    FrontFormatError,
    OrientedFront,
    SweepViolation,
    classical_invariants,
    format_front,
    front_to_pd,
    parse_front,
)
from .homfly import (
    DiagramError,
    HomflyPoly,
    braid_closure_diagram,
    homfly,
    homfly_tb_bound,
    max_framing_degree,
)
from .ruling import enumerate_rulings


@dataclass(frozen=True)
class FillingStatus:
    kind: str  # Constructed | ScriptVerified | MethodFailed | RuledOut
    detail: str = ""


@dataclass(frozen=True)
class ConjectureReport:
    """Per-knot audit record for the fillability conjecture."""

    label: str
    certificate: HierarchyLevel
    chi4: Optional[int]
    homfly_bound: int
    front_tb: int
    bound_sharp: bool
    filling: FillingStatus
    homfly_match: bool
    polynomial: HomflyPoly

    def lines(self) -> list[str]:
        out = [
            f"label={self.label}",
            f"certificate={self.certificate.label}",
            f"chi4={self.chi4 if self.chi4 is not None else 'n/a'}",
            f"homfly_bound={self.homfly_bound}",
            f"front_tb={self.front_tb}",
            f"bound_sharp={'true' if self.bound_sharp else 'false'}",
            f"homfly_match={'true' if self.homfly_match else 'false'}",
            f"filling={self.filling.kind}",
        ]
        if self.filling.detail:
            out.append(f"filling_detail={self.filling.detail}")
        out.append(f"polynomial={self.polynomial.format_text()}")
        return out

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "certificate": self.certificate.label,
            "chi4": self.chi4,
            "homfly_bound": self.homfly_bound,
            "front_tb": self.front_tb,
            "bound_sharp": self.bound_sharp,
            "homfly_match": self.homfly_match,
            "filling": {"status": self.filling.kind, "detail": self.filling.detail},
            "polynomial": self.polynomial.format_text(),
        }


def audit(
    bands: BandPresentation,
    front: OrientedFront,
    label: str = "",
    moves=None,
) -> ConjectureReport:
    """Audit one knot given a quasipositive band presentation and a front
    claimed to present the same knot.  The claim itself is not verified;
    HOMFLY agreement between the braid closure and the front is reported as
    ``homfly_match`` and flags mismatches cheaply."""
    word = expand_bands(bands)
    _, ncomp = closure_components(word)
    if ncomp != 1:
        raise ValueError(
            f"closure of the band presentation is a {ncomp}-component link, not a knot")
    # strongest certificate visible: the expanded word may be braid positive
    certificate = classify_certificate(bands)
    word_level = classify_certificate(word)
    if word_level.value > certificate.value:
        certificate = word_level
    chi4 = chi4_quasipositive(bands)

    poly_front = homfly(front_to_pd(front))
    poly_braid = homfly(braid_closure_diagram(word))
    bound = homfly_tb_bound(poly_front)
    tb = front.tb()
    bound_sharp = tb == bound

    filling: FillingStatus
    trace: Optional[FillingTrace] = None
    try:
        trace = construct_filling(front)
        births, pinches, saddles = trace.counts()
        filling = FillingStatus(
            "Constructed",
            f"births={births} pinches={pinches} saddles={saddles} chi={trace.chi}")
    except NotFillableByThisMethod:
        script_trace = None
        if moves is not None:
            candidate = replay_script(list(moves))
            if candidate.end == front.front and verify_trace(candidate, bands=bands).passed:
                script_trace = candidate
        if script_trace is not None:
            filling = FillingStatus(
                "ScriptVerified",
                f"chi={script_trace.chi} genus={script_trace.genus}")
            trace = script_trace
        elif -chi4 != bound:
            filling = FillingStatus(
                "RuledOut",
                f"a filling would force tb = -chi4 = {-chi4} and make the HOMFLY "
                f"bound sharp, but the bound is {bound}")
        else:
            filling = FillingStatus(
                "MethodFailed",
                "no all-switched oriented ruling, no verified script, no obstruction")
    return ConjectureReport(
        label=label,
        certificate=certificate,
        chi4=chi4,
        homfly_bound=bound,
        front_tb=tb,
        bound_sharp=bound_sharp,
        filling=filling,
        homfly_match=poly_front == poly_braid,
        polynomial=poly_front,
    )


# ---------------------------------------------------------------------------
# command handlers


class _InputError(Exception):
    pass


def _read_file(path: str) -> str:
    try:
        with open(path) as handle:
            return handle.read()
    except OSError as err:
        raise _InputError(f"cannot read {path}: {err}") from None


def _front_from_path(path: str) -> Front:
    return parse_front(_read_file(path))


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _cmd_homfly(args) -> int:
    if args.path.endswith(".braid"):
        word = parse_braid(_read_file(args.path))
        poly = homfly(braid_closure_diagram(word))
    elif args.path.endswith(".front"):
        front = _front_from_path(args.path)
        poly = homfly(front_to_pd(OrientedFront(front)))
    else:
        raise _InputError("homfly expects a .braid or .front file")
    deg = max_framing_degree(poly)
    bound = homfly_tb_bound(poly)
    _emit(args, {
        "polynomial": poly.format_text(),
        "max_framing_degree": deg,
        "tb_bound": bound,
    }, [poly.format_text(), f"max_framing_degree={deg}", f"tb_bound={bound}"])
    return 0


def _cmd_tb(args) -> int:
    front = _front_from_path(args.path)
    tb, rot = classical_invariants(OrientedFront(front))
    _emit(args, {"tb": tb, "rot": rot}, [f"tb={tb}", f"rot={rot}"])
    return 0


def _cmd_rulings(args) -> int:
    front = _front_from_path(args.path)
    rulings = enumerate_rulings(OrientedFront(front), oriented_only=args.oriented)
    lines = [f"count={len(rulings)}"]
    payload = {"count": len(rulings), "rulings": []}
    for r in rulings:
        switches = ",".join(str(s) for s in sorted(r.switches))
        lines.append(f"switches={switches}")
        payload["rulings"].append({
            "switches": sorted(r.switches),
            "oriented": r.oriented,
        })
    _emit(args, payload, lines)
    return 0


def _cmd_fill(args) -> int:
    front = _front_from_path(args.path)
    try:
        trace = construct_filling(OrientedFront(front))
    except NotFillableByThisMethod as err:
        print(f"NotFillableByThisMethod: {err}", file=sys.stderr)
        return 1
    _print_trace(args, trace)
    return 0


def _cmd_replay(args) -> int:
    moves = parse_moves(_read_file(args.path))
    try:
        trace = replay_script(moves)
    except PatternMismatch as err:
        print(f"PatternMismatch: {err}", file=sys.stderr)
        return 1
    _print_trace(args, trace)
    report = verify_trace(trace)
    if not args.json:
        for check in report.checks:
            print(f"check {check.name}: {'pass' if check.passed else 'FAIL'} ({check.detail})")
    return 0 if report.passed else 1


def _print_trace(args, trace: FillingTrace) -> None:
    if args.json:
        from .cobordism import format_move

        print(json.dumps({
            "steps": [
                {"move": format_move(m), "front": format_front(f, inline=True)}
                for m, f in trace.steps
            ],
            "chi": trace.chi,
            "genus": trace.genus,
            "end": format_front(trace.end, inline=True),
        }, indent=2))
    else:
        print(format_trace(trace), end="")
    if getattr(args, "out_dir", None):
        from .viz import save_trace_figure

        os.makedirs(args.out_dir, exist_ok=True)
        base = os.path.join(args.out_dir, args.figure_basename or "trace")
        save_trace_figure(trace, base + ".trace.png")
        with open(base + ".trace.txt", "w") as handle:
            handle.write(format_trace(trace))


def _cmd_chi4(args) -> int:
    bands = parse_bands(_read_file(args.path))
    _emit(args, {"chi4": chi4_quasipositive(bands)},
          [f"chi4={chi4_quasipositive(bands)}"])
    return 0


def _cmd_classify(args) -> int:
    if args.path.endswith(".bands"):
        level = classify_certificate(parse_bands(_read_file(args.path)))
    elif args.path.endswith(".braid"):
        level = classify_certificate(parse_braid(_read_file(args.path)))
    else:
        raise _InputError("classify expects a .bands or .braid file")
    _emit(args, {"certificate": level.label}, [f"certificate={level.label}"])
    return 0


def _cmd_audit(args) -> int:
    moves = None
    if args.label and not (args.bands or args.front):
        entry = corpus_get(args.label)
        bands, front, moves = entry.bands, entry.front, entry.moves
        label = args.label
    else:
        if not args.bands or not args.front:
            raise _InputError("audit needs --bands and --front (or --label)")
        bands = parse_bands(_read_file(args.bands))
        front = parse_front(_read_file(args.front))
        label = args.label or os.path.splitext(os.path.basename(args.front))[0]
        if args.moves:
            moves = parse_moves(_read_file(args.moves))
    report = audit(bands, OrientedFront(front), label=label, moves=moves)
    _emit(args, report.to_json(), report.lines())
    if args.out_dir:
        os.makedirs(args.out_dir, exist_ok=True)
        base = os.path.join(args.out_dir, label or "audit")
        with open(base + ".report.txt", "w") as handle:
            handle.write("\n".join(report.lines()) + "\n")
        with open(base + ".report.json", "w") as handle:
            json.dump(report.to_json(), handle, indent=2, sort_keys=True)
        from .viz import save_front_figure

        save_front_figure(
            front, base + ".front.png",
            title=f"{label}: tb={report.front_tb}, HOMFLY bound={report.homfly_bound}")
    return 0


def _cmd_corpus(args) -> int:
    if args.action == "list":
        labels = corpus_list()
        _emit(args, {"labels": list(labels)}, list(labels))
        return 0
    if not args.label:
        raise _InputError("corpus get needs a label")
    entry = corpus_get(args.label)
    texts = entry.texts()
    if args.json:
        print(json.dumps(texts, indent=2, sort_keys=True))
    else:
        for ext in ("braid", "bands", "front", "moves"):
            if ext in texts:
                print(f"[{ext}]")
                print(texts[ext].rstrip("\n"))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="legfill",
        description="Positivity certificates, rulings, HOMFLY tb bounds, and "
                    "decomposable Lagrangian fillings for Legendrian fronts.")
    parser.add_argument("--json", action="store_true", help="structured output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("homfly", help="HOMFLY polynomial of a .braid closure or .front")
    p.add_argument("path")
    p.set_defaults(func=_cmd_homfly)

    p = sub.add_parser("tb", help="classical invariants of a .front")
    p.add_argument("path")
    p.set_defaults(func=_cmd_tb)

    p = sub.add_parser("rulings", help="enumerate normal rulings of a .front")
    p.add_argument("path")
    p.add_argument("--oriented", action="store_true", help="oriented rulings only")
    p.set_defaults(func=_cmd_rulings)

    p = sub.add_parser("fill", help="decomposable filling of a .front")
    p.add_argument("path")
    p.add_argument("--out-dir", help="write trace figure and text here")
    p.add_argument("--figure-basename", default=None)
    p.set_defaults(func=_cmd_fill)

    p = sub.add_parser("replay", help="replay a .moves script from the empty front")
    p.add_argument("path")
    p.add_argument("--out-dir", help="write trace figure and text here")
    p.add_argument("--figure-basename", default=None)
    p.set_defaults(func=_cmd_replay)

    p = sub.add_parser("chi4", help="Rudolph slice Euler characteristic of a .bands file")
    p.add_argument("path")
    p.set_defaults(func=_cmd_chi4)

    p = sub.add_parser("classify", help="positivity certificate of a .bands or .braid file")
    p.add_argument("path")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("audit", help="fillability audit of one knot")
    p.add_argument("--bands")
    p.add_argument("--front")
    p.add_argument("--moves")
    p.add_argument("--label")
    p.add_argument("--out-dir", help="write report text, JSON, and front figure here")
    p.set_defaults(func=_cmd_audit)

    p = sub.add_parser("corpus", help="bundled fixtures")
    p.add_argument("action", choices=["list", "get"])
    p.add_argument("label", nargs="?")
    p.set_defaults(func=_cmd_corpus)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (_InputError, BraidFormatError, FrontFormatError, SweepViolation,
            GeneratorOutOfRange, UnknownLabel) as err:
        print(f"input error: {err}", file=sys.stderr)
        return 2
    except (DiagramError, PatternMismatch, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
