"""Controlled span-level label-noise injection with a replayable change log.

Noise is applied at span level, never token level, so corrupted corpora
always stay IOB-valid. Per-sentence randomness is derived from
``(seed, sentence_index)``, so results do not depend on iteration order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

import numpy as np

from ..core import (
    ENTITY_TYPES,
    Corpus,
    EntityType,
    LabeledSentence,
    Span,
    decode_spans,
    encode_iob,
)

KIND_TYPE_FLIP = "type_flip"
KIND_DROP = "drop"
KIND_SPURIOUS = "spurious"


@dataclass(frozen=True)
class NoiseSpec:
    """Span corruption probabilities.

    p_type_flip and p_drop are per gold span and mutually exclusive per
    draw (their sum must be <= 1); p_spurious is per sentence and promotes
    one random O-run of length 1-3 to a random type.
    """

    p_type_flip: float = 0.10
    p_drop: float = 0.08
    p_spurious: float = 0.02
    seed: int = 0

    def __post_init__(self) -> None:
        for name in ("p_type_flip", "p_drop", "p_spurious"):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise ValueError(f"{name} must be in [0,1], got {value}")
        if self.p_type_flip + self.p_drop > 1.0:
            raise ValueError("p_type_flip + p_drop must not exceed 1")


@dataclass(frozen=True)
class Change:
    sentence_index: int
    kind: str  # type_flip | drop | spurious
    before: Optional[Span]
    after: Optional[Span]


@dataclass(frozen=True)
class ChangeLog:
    changes: tuple[Change, ...] = ()

    def __len__(self) -> int:
        return len(self.changes)

    def for_sentence(self, index: int) -> list[Change]:
        return [c for c in self.changes if c.sentence_index == index]

    def to_lines(self) -> list[str]:
        """Serialize as structured text, one change per line."""

        def fmt(span: Optional[Span]) -> str:
            if span is None:
                return "-"
            return f"{span.start}:{span.end}:{span.type.value}"

        return [
            f"sentence={c.sentence_index}\tkind={c.kind}\tbefore={fmt(c.before)}\tafter={fmt(c.after)}"
            for c in self.changes
        ]

    @classmethod
    def from_lines(cls, lines: Iterable[str]) -> "ChangeLog":
        def parse_span(text: str) -> Optional[Span]:
            if text == "-":
                return None
            start, end, type_name = text.split(":")
            return Span(int(start), int(end), EntityType(type_name))

        changes = []
        for line in lines:
            line = line.strip()
            if not line:
                continue
            fields = dict(part.split("=", 1) for part in line.split("\t"))
            changes.append(
                Change(
                    int(fields["sentence"]),
                    fields["kind"],
                    parse_span(fields["before"]),
                    parse_span(fields["after"]),
                )
            )
        return cls(tuple(changes))


def _sentence_rng(seed: int, index: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence((seed, index)))


def _other_type(rng: np.random.Generator, current: EntityType) -> EntityType:
    others = [t for t in ENTITY_TYPES if t is not current]
    return others[int(rng.integers(len(others)))]


def _o_runs(labels_taken: list[bool], n: int) -> list[tuple[int, int]]:
    """All (start, length) windows of length 1-3 over unoccupied positions."""
    windows = []
    for length in (1, 2, 3):
        for start in range(0, n - length + 1):
            if not any(labels_taken[start : start + length]):
                windows.append((start, length))
    return windows


def inject_noise(corpus: Corpus, spec: NoiseSpec) -> tuple[Corpus, ChangeLog]:
    """Corrupt span labels per ``spec``; returns the noisy corpus and a log
    whose replay transforms clean into noisy exactly."""
    noisy_sentences: list[LabeledSentence] = []
    changes: list[Change] = []

    for index, sentence in enumerate(corpus):
        rng = _sentence_rng(spec.seed, index)
        spans = decode_spans(sentence.labels)
        kept: list[Span] = []
        for span in spans:
            u = rng.random()
            if u < spec.p_type_flip:
                new_span = Span(span.start, span.end, _other_type(rng, span.type))
                kept.append(new_span)
                changes.append(Change(index, KIND_TYPE_FLIP, span, new_span))
            elif u < spec.p_type_flip + spec.p_drop:
                changes.append(Change(index, KIND_DROP, span, None))
            else:
                kept.append(span)

        if rng.random() < spec.p_spurious:
            taken = [False] * len(sentence)
            for span in kept:
                for i in range(span.start, span.end):
                    taken[i] = True
            windows = _o_runs(taken, len(sentence))
            if windows:
                start, length = windows[int(rng.integers(len(windows)))]
                etype = ENTITY_TYPES[int(rng.integers(len(ENTITY_TYPES)))]
                new_span = Span(start, start + length, etype)
                kept.append(new_span)
                changes.append(Change(index, KIND_SPURIOUS, None, new_span))

        labels = encode_iob(len(sentence), kept)
        noisy_sentences.append(
            LabeledSentence(sentence.tokens, labels, sentence.source_id)
        )

    return Corpus(tuple(noisy_sentences), corpus.meta), ChangeLog(tuple(changes))


def replay_changelog(clean: Corpus, log: ChangeLog) -> Corpus:
    """Independent reconstruction of the noisy corpus from clean + log."""
    by_sentence: dict[int, list[Change]] = {}
    for change in log.changes:
        by_sentence.setdefault(change.sentence_index, []).append(change)

    sentences = []
    for index, sentence in enumerate(clean):
        spans = decode_spans(sentence.labels)
        for change in by_sentence.get(index, ()):
            if change.kind == KIND_SPURIOUS:
                spans.append(change.after)
            elif change.kind == KIND_DROP:
                spans.remove(change.before)
            else:
                spans[spans.index(change.before)] = change.after
        labels = encode_iob(len(sentence), spans)
        sentences.append(LabeledSentence(sentence.tokens, labels, sentence.source_id))
    return Corpus(tuple(sentences), clean.meta)


def label_disagreement(a: Corpus, b: Corpus) -> float:
    """Fraction of token labels that differ between two same-shape corpora."""
    if len(a) != len(b):
        raise ValueError(f"corpora differ in sentence count: {len(a)} vs {len(b)}")
    total = 0
    differing = 0
    for i, (sa, sb) in enumerate(zip(a, b)):
        if len(sa) != len(sb):
            raise ValueError(f"sentence {i} differs in length: {len(sa)} vs {len(sb)}")
        total += len(sa)
        differing += sum(
            1 for la, lb in zip(sa.labels, sb.labels) if la != lb
        )
    if total == 0:
        return 0.0
    return differing / total
