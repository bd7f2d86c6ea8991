"""Bundled fixtures: a braid word, a band presentation, a front, and for some
labels a filling move script, for each knot the audit exercises."""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from typing import Optional

from .braid import BandPresentation, BraidWord, parse_bands, parse_braid
from .cobordism import Move, parse_moves
from .front import Front, parse_front


class UnknownLabel(KeyError):
    """No corpus entry under that label."""


LABELS = (
    "unknot",
    "trefoil",
    "fish",
    "stab-unknot",
    "m946",
    "stoimenow",
    "torus-2-5",
    "torus-2-7",
)


@dataclass(frozen=True)
class CorpusEntry:
    label: str
    braid: BraidWord
    bands: BandPresentation
    front: Front
    moves: Optional[tuple[Move, ...]]

    def texts(self) -> dict[str, str]:
        out = {}
        for ext in ("braid", "bands", "front", "moves"):
            text = _read(self.label, ext)
            if text is not None:
                out[ext] = text
        return out


def _read(label: str, ext: str) -> Optional[str]:
    ref = resources.files("legfill").joinpath("corpus", f"{label}.{ext}")
    if not ref.is_file():
        return None
    return ref.read_text()


def corpus_list() -> tuple[str, ...]:
    return LABELS


def corpus_get(label: str) -> CorpusEntry:
    if label not in LABELS:
        raise UnknownLabel(label)
    braid = parse_braid(_read(label, "braid"))
    bands = parse_bands(_read(label, "bands"))
    front = parse_front(_read(label, "front"))
    moves_text = _read(label, "moves")
    moves = tuple(parse_moves(moves_text)) if moves_text is not None else None
    return CorpusEntry(label, braid, bands, front, moves)
