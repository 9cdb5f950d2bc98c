"""Domain types for software entity recognition corpora.

The label space is fixed: the ``O`` tag plus ``B-``/``I-`` tags for each of
the 12 software entity types, 25 labels in total.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional


class EntityType(enum.Enum):
    """The 12 software entity types.

    The enum value is the canonical uppercase string used in IOB labels,
    e.g. ``B-OPERATING_SYSTEM``.
    """

    ALGORITHM = "ALGORITHM"
    APPLICATION = "APPLICATION"
    ARCHITECTURE = "ARCHITECTURE"
    DATA_STRUCTURE = "DATA_STRUCTURE"
    DEVICE = "DEVICE"
    ERROR_NAME = "ERROR_NAME"
    GENERAL_CONCEPT = "GENERAL_CONCEPT"
    LANGUAGE = "LANGUAGE"
    LIBRARY = "LIBRARY"
    LICENSE = "LICENSE"
    OPERATING_SYSTEM = "OPERATING_SYSTEM"
    PROTOCOL = "PROTOCOL"

    def __str__(self) -> str:
        return self.value


ENTITY_TYPES: tuple[EntityType, ...] = tuple(EntityType)


@dataclass(frozen=True)
class TagLabel:
    """A single IOB tag: ``O``, ``B-<TYPE>`` or ``I-<TYPE>``.

    ``type`` is None exactly when ``kind`` is ``"O"``.
    """

    kind: str  # one of "O", "B", "I"
    type: Optional[EntityType] = None

    def __post_init__(self) -> None:
        if self.kind not in ("O", "B", "I"):
            raise ValueError(f"invalid tag kind: {self.kind!r}")
        if (self.kind == "O") != (self.type is None):
            raise ValueError(f"tag kind {self.kind} inconsistent with type {self.type}")

    def __str__(self) -> str:
        if self.kind == "O":
            return "O"
        return f"{self.kind}-{self.type.value}"

    @classmethod
    def parse(cls, text: str) -> "TagLabel":
        """Parse a label string; raises ValueError naming unknown labels."""
        if text == "O":
            return O_LABEL
        if len(text) > 2 and text[1] == "-" and text[0] in ("B", "I"):
            try:
                etype = EntityType(text[2:])
            except ValueError:
                raise ValueError(f"unknown label string: {text!r}") from None
            return cls(text[0], etype)
        raise ValueError(f"unknown label string: {text!r}")


O_LABEL = TagLabel("O")

#: Fixed label space: O first, then B-X/I-X per entity type in enum order.
LABEL_SPACE: tuple[TagLabel, ...] = (O_LABEL,) + tuple(
    TagLabel(kind, etype) for etype in ENTITY_TYPES for kind in ("B", "I")
)
LABEL_STRINGS: tuple[str, ...] = tuple(str(label) for label in LABEL_SPACE)
LABEL_INDEX: dict[str, int] = {s: i for i, s in enumerate(LABEL_STRINGS)}
N_LABELS = len(LABEL_SPACE)
assert N_LABELS == 25


@dataclass(frozen=True)
class Token:
    """A surface token with character offsets into its source sentence."""

    surface: str
    char_start: int
    char_end: int

    def __post_init__(self) -> None:
        if not (0 <= self.char_start < self.char_end):
            raise ValueError(
                f"bad token offsets [{self.char_start},{self.char_end}) for {self.surface!r}"
            )


@dataclass(frozen=True, order=True)
class Span:
    """A typed entity span over token indices, end exclusive."""

    start: int
    end: int
    type: EntityType = field(compare=False)

    def __post_init__(self) -> None:
        if not (0 <= self.start < self.end):
            raise ValueError(f"bad span [{self.start},{self.end})")

    def as_triple(self) -> tuple[int, int, str]:
        return (self.start, self.end, self.type.value)


@dataclass(frozen=True)
class LabeledSentence:
    """Tokens plus one IOB label per token."""

    tokens: tuple[Token, ...]
    labels: tuple[TagLabel, ...]
    source_id: str = ""

    def __post_init__(self) -> None:
        if len(self.tokens) != len(self.labels):
            raise ValueError(
                f"{len(self.tokens)} tokens but {len(self.labels)} labels"
            )

    def __len__(self) -> int:
        return len(self.tokens)

    @property
    def surfaces(self) -> tuple[str, ...]:
        return tuple(t.surface for t in self.tokens)

    @property
    def label_strings(self) -> tuple[str, ...]:
        return tuple(str(lb) for lb in self.labels)

    def surface_key(self) -> str:
        """Dedup key: surfaces joined by single spaces, case-sensitive."""
        return " ".join(self.surfaces)

    def content(self) -> tuple[tuple[str, ...], tuple[str, ...], str]:
        """Comparable content (surfaces, labels, source), offsets excluded."""
        return (self.surfaces, self.label_strings, self.source_id)


@dataclass(frozen=True)
class CorpusMeta:
    name: str = ""
    params: tuple[tuple[str, str], ...] = ()
    snapshot_id: str = ""


@dataclass(frozen=True)
class Corpus:
    """An ordered collection of labeled sentences."""

    sentences: tuple[LabeledSentence, ...]
    meta: CorpusMeta = CorpusMeta()

    def __len__(self) -> int:
        return len(self.sentences)

    def __iter__(self) -> Iterator[LabeledSentence]:
        return iter(self.sentences)

    def content(self) -> list[tuple[tuple[str, ...], tuple[str, ...], str]]:
        return [s.content() for s in self.sentences]

    @classmethod
    def of(cls, sentences: Iterable[LabeledSentence], meta: CorpusMeta = CorpusMeta()) -> "Corpus":
        return cls(tuple(sentences), meta)
