"""Braid words, positive band presentations, and positivity certificates.

A braid word on ``n`` strands is a sequence of nonzero integers, where the
letter ``+i`` stands for the Artin generator ``sigma_i`` and ``-i`` for its
inverse.  A positive band is any conjugate ``w sigma_i w^-1``; the embedded
bands are the special conjugates

    sigma_{i,j} = (sigma_i ... sigma_{j-2}) sigma_{j-1} (sigma_i ... sigma_{j-2})^-1

with ``1 <= i < j <= n``.  Products of positive bands certify quasipositive
closures; products of embedded bands certify strongly quasipositive ones.
Certificates are verified structurally, by construction: no braid-group word
problem is solved here.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Union


class GeneratorOutOfRange(ValueError):
    """A letter references a generator outside ``[1, n-1]``."""


class BraidFormatError(ValueError):
    """Malformed ``.braid`` or ``.bands`` text."""


@dataclass(frozen=True)
class BraidWord:
    """A word in the braid group B_n, stored letter by letter."""

    strand_count: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strand_count < 1:
            raise ValueError(f"strand_count must be >= 1, got {self.strand_count}")
        object.__setattr__(self, "letters", tuple(self.letters))
        for pos, letter in enumerate(self.letters):
            if letter == 0:
                raise GeneratorOutOfRange(f"letter {pos}: zero is not a generator")
            if abs(letter) > self.strand_count - 1:
                raise GeneratorOutOfRange(
                    f"letter {pos}: generator {abs(letter)} needs at least "
                    f"{abs(letter) + 1} strands, word has {self.strand_count}"
                )

    def __len__(self):
        return len(self.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strand_count, tuple(-x for x in reversed(self.letters)))

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if self.strand_count != other.strand_count:
            raise ValueError("cannot concatenate words on different strand counts")
        return BraidWord(self.strand_count, self.letters + other.letters)


@dataclass(frozen=True)
class EmbeddedBand:
    """The embedded positive band ``sigma_{i,j}``, ``1 <= i < j <= n``."""

    i: int
    j: int

    def __post_init__(self):
        if not 1 <= self.i < self.j:
            raise ValueError(f"embedded band needs 1 <= i < j, got ({self.i}, {self.j})")

    def expansion_letters(self) -> tuple[int, ...]:
        prefix = tuple(range(self.i, self.j - 1))
        return prefix + (self.j - 1,) + tuple(-x for x in reversed(prefix))


@dataclass(frozen=True)
class ConjugatedBand:
    """A positive band ``w sigma_g w^-1`` with an explicit conjugator ``w``."""

    conjugator: tuple[int, ...]
    generator: int

    def __post_init__(self):
        object.__setattr__(self, "conjugator", tuple(self.conjugator))
        if self.generator < 1:
            raise ValueError(f"band generator must be positive, got {self.generator}")
        if any(x == 0 for x in self.conjugator):
            raise GeneratorOutOfRange("conjugator contains the zero letter")

    def expansion_letters(self) -> tuple[int, ...]:
        w = self.conjugator
        return w + (self.generator,) + tuple(-x for x in reversed(w))


Band = Union[EmbeddedBand, ConjugatedBand]


@dataclass(frozen=True)
class BandPresentation:
    """An ordered product of positive bands in B_n."""

    strand_count: int
    bands: tuple[Band, ...] = ()

    def __post_init__(self):
        if self.strand_count < 1:
            raise ValueError(f"strand_count must be >= 1, got {self.strand_count}")
        object.__setattr__(self, "bands", tuple(self.bands))
        for pos, band in enumerate(self.bands):
            if isinstance(band, EmbeddedBand):
                if band.j > self.strand_count:
                    raise GeneratorOutOfRange(
                        f"band {pos}: sigma_{{{band.i},{band.j}}} needs {band.j} strands"
                    )
            else:
                top = max((abs(x) for x in band.conjugator), default=0)
                top = max(top, band.generator)
                if top > self.strand_count - 1:
                    raise GeneratorOutOfRange(
                        f"band {pos}: generator {top} needs at least {top + 1} strands"
                    )

    def band_count(self) -> int:
        return len(self.bands)


class HierarchyLevel(Enum):
    """Positivity certificate levels, ordered per BP < P < SQP < QP.

    ``POSITIVE`` exists for completeness of the hierarchy; it is a diagram
    property and is never produced by :func:`classify_certificate`.
    """

    BRAID_POSITIVE = 4
    POSITIVE = 3
    STRONGLY_QUASIPOSITIVE = 2
    QUASIPOSITIVE = 1
    NO_CERTIFICATE = 0

    def implies(self, weaker: "HierarchyLevel") -> bool:
        """A certificate at one level implies membership at all weaker levels."""
        if self is HierarchyLevel.NO_CERTIFICATE:
            return weaker is HierarchyLevel.NO_CERTIFICATE
        return self.value >= weaker.value

    @property
    def label(self) -> str:
        return _LEVEL_LABELS[self]


_LEVEL_LABELS = {
    HierarchyLevel.BRAID_POSITIVE: "BraidPositive",
    HierarchyLevel.POSITIVE: "Positive",
    HierarchyLevel.STRONGLY_QUASIPOSITIVE: "StronglyQuasiPositive",
    HierarchyLevel.QUASIPOSITIVE: "QuasiPositive",
    HierarchyLevel.NO_CERTIFICATE: "NoCertificate",
}


def parse_braid(text: str) -> BraidWord:
    """Parse the ``.braid`` format: ``n=<int>`` then space-separated letters.

    Lines starting with ``#`` are ignored.  The word is returned verbatim,
    with no simplification.
    """
    lines = _content_lines(text)
    if not lines or not lines[0].startswith("n="):
        raise BraidFormatError("first line of a .braid file must be n=<int>")
    n = _parse_strand_count(lines[0])
    letters: list[int] = []
    for line in lines[1:]:
        for tok in line.split():
            try:
                letters.append(int(tok))
            except ValueError:
                raise BraidFormatError(f"bad braid letter {tok!r}") from None
    return BraidWord(n, tuple(letters))


def format_braid(word: BraidWord) -> str:
    body = " ".join(str(x) for x in word.letters)
    return f"n={word.strand_count}\n{body}\n"


def parse_bands(text: str) -> BandPresentation:
    """Parse the ``.bands`` format.

    Line 1 is ``n=<int>``; each further line is ``emb <i> <j>`` or
    ``band g=<i> w=<space-separated ints>`` (``w=`` may be empty).
    """
    lines = _content_lines(text)
    if not lines or not lines[0].startswith("n="):
        raise BraidFormatError("first line of a .bands file must be n=<int>")
    n = _parse_strand_count(lines[0])
    bands: list[Band] = []
    for line in lines[1:]:
        parts = line.split()
        if parts[0] == "emb":
            if len(parts) != 3:
                raise BraidFormatError(f"bad embedded band line {line!r}")
            try:
                bands.append(EmbeddedBand(int(parts[1]), int(parts[2])))
            except ValueError as err:
                raise BraidFormatError(str(err)) from None
        elif parts[0] == "band":
            gen = None
            conj: tuple[int, ...] = ()
            for field in parts[1:]:
                if field.startswith("g="):
                    gen = int(field[2:])
                elif field.startswith("w="):
                    rest = field[2:]
                    toks = ([rest] if rest else []) + parts[parts.index(field) + 1:]
                    conj = tuple(int(t) for t in toks)
                    break
                else:
                    raise BraidFormatError(f"bad band field {field!r} in {line!r}")
            if gen is None:
                raise BraidFormatError(f"band line missing g=: {line!r}")
            try:
                bands.append(ConjugatedBand(conj, gen))
            except ValueError as err:
                raise BraidFormatError(str(err)) from None
        else:
            raise BraidFormatError(f"unknown band line {line!r}")
    return BandPresentation(n, tuple(bands))


def format_bands(pres: BandPresentation) -> str:
    lines = [f"n={pres.strand_count}"]
    for band in pres.bands:
        if isinstance(band, EmbeddedBand):
            lines.append(f"emb {band.i} {band.j}")
        else:
            lines.append(f"band g={band.generator} w=" + " ".join(str(x) for x in band.conjugator))
    return "\n".join(lines) + "\n"


def expand_bands(pres: BandPresentation) -> BraidWord:
    """Concatenate the band expansions in order; no cancellation is performed."""
    letters: list[int] = []
    for band in pres.bands:
        letters.extend(band.expansion_letters())
    return BraidWord(pres.strand_count, tuple(letters))


def closure_permutation(word: BraidWord) -> tuple[int, ...]:
    """Permutation of the strand endpoints, as the product of the letters'
    transpositions read left to right.  Entry ``p[k]`` is where the strand
    entering at position ``k`` (0-based) exits."""
    at_position = list(range(word.strand_count))  # entry label of the strand at each position
    for letter in word.letters:
        i = abs(letter) - 1
        at_position[i], at_position[i + 1] = at_position[i + 1], at_position[i]
    exit_of = [0] * word.strand_count
    for position, strand in enumerate(at_position):
        exit_of[strand] = position
    return tuple(exit_of)


def closure_components(word: BraidWord) -> tuple[tuple[int, ...], int]:
    """The closure permutation together with its cycle count, i.e. the number
    of link components of the trace closure."""
    perm = closure_permutation(word)
    seen = [False] * len(perm)
    cycles = 0
    for start in range(len(perm)):
        if seen[start]:
            continue
        cycles += 1
        k = start
        while not seen[k]:
            seen[k] = True
            k = perm[k]
    return perm, cycles


def exponent_sum(word: BraidWord) -> int:
    """Sum of letter signs; the writhe of the closure diagram."""
    return sum(1 if x > 0 else -1 for x in word.letters)


def chi4_quasipositive(pres: BandPresentation) -> int:
    """Rudolph's formula for the slice Euler characteristic of the closure of
    a quasipositive braid: strand count minus band count."""
    return pres.strand_count - pres.band_count()


def _is_embedded_expansion(band: ConjugatedBand, n: int) -> bool:
    """Letter-exact comparison against every sigma_{i,j} expansion on n strands."""
    letters = band.expansion_letters()
    for i in range(1, n):
        for j in range(i + 1, n + 1):
            if EmbeddedBand(i, j).expansion_letters() == letters:
                return True
    return False


def classify_certificate(obj: Union[BraidWord, BandPresentation]) -> HierarchyLevel:
    """Classify the certificate itself, not the underlying knot type.

    A word with all letters positive certifies braid positivity.  A band
    presentation certifies strong quasipositivity when every band is embedded
    (or letter-for-letter equal to an embedded band's expansion), and plain
    quasipositivity otherwise.  Anything else carries no certificate.
    """
    if isinstance(obj, BraidWord):
        if all(x > 0 for x in obj.letters):
            return HierarchyLevel.BRAID_POSITIVE
        return HierarchyLevel.NO_CERTIFICATE
    all_embedded = True
    for band in obj.bands:
        if isinstance(band, EmbeddedBand):
            continue
        if not _is_embedded_expansion(band, obj.strand_count):
            all_embedded = False
            break
    if all_embedded:
        return HierarchyLevel.STRONGLY_QUASIPOSITIVE
    return HierarchyLevel.QUASIPOSITIVE


def _content_lines(text: str) -> list[str]:
    out = []
    for raw in text.splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            out.append(line)
    return out


def _parse_strand_count(line: str) -> int:
    try:
        n = int(line[2:])
    except ValueError:
        raise BraidFormatError(f"bad strand count line {line!r}") from None
    if n < 1:
        raise BraidFormatError(f"strand count must be >= 1, got {n}")
    return n
