"""IOB label encoding, decoding and validation.

Well-formedness: every ``I-X`` must be immediately preceded by ``B-X`` or
``I-X`` of the same type. ``decode_spans`` and ``encode_iob`` are exact
inverses for non-overlapping span sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .types import O_LABEL, Span, TagLabel


class OverlappingSpansError(ValueError):
    """Raised by encode_iob when two spans overlap."""

    def __init__(self, first: Span, second: Span):
        super().__init__(f"overlapping spans {first.as_triple()} and {second.as_triple()}")
        self.first = first
        self.second = second


class MalformedIOBError(ValueError):
    """Raised by decode_spans on ill-formed label sequences."""

    def __init__(self, index: int, reason: str):
        super().__init__(f"malformed IOB at index {index}: {reason}")
        self.index = index
        self.reason = reason


@dataclass(frozen=True)
class IOBViolation:
    index: int
    reason: str  # "I-without-B" or "I-type-mismatch"


def encode_iob(n_tokens: int, spans: Sequence[Span]) -> tuple[TagLabel, ...]:
    """Encode non-overlapping spans over ``n_tokens`` tokens as IOB labels.

    Spans need not be pre-sorted; they are sorted by start here. The first
    overlapping pair found is rejected with OverlappingSpansError.
    """
    ordered = sorted(spans, key=lambda s: (s.start, s.end))
    labels: list[TagLabel] = [O_LABEL] * n_tokens
    prev: Span | None = None
    for span in ordered:
        if span.end > n_tokens:
            raise ValueError(f"span {span.as_triple()} exceeds sentence length {n_tokens}")
        if prev is not None and span.start < prev.end:
            raise OverlappingSpansError(prev, span)
        labels[span.start] = TagLabel("B", span.type)
        for i in range(span.start + 1, span.end):
            labels[i] = TagLabel("I", span.type)
        prev = span
    return tuple(labels)


def validate_iob(labels: Sequence[TagLabel]) -> list[IOBViolation]:
    """Return all well-formedness violations, empty iff well-formed."""
    violations: list[IOBViolation] = []
    for i, label in enumerate(labels):
        if label.kind != "I":
            continue
        prev = labels[i - 1] if i > 0 else None
        if prev is None or prev.kind == "O":
            violations.append(IOBViolation(i, "I-without-B"))
        elif prev.type != label.type:
            violations.append(IOBViolation(i, "I-type-mismatch"))
    return violations


def decode_spans(labels: Sequence[TagLabel]) -> list[Span]:
    """Decode well-formed IOB labels into sorted, non-overlapping spans.

    Malformed input raises MalformedIOBError at the first violation.
    """
    violations = validate_iob(labels)
    if violations:
        first = violations[0]
        raise MalformedIOBError(first.index, first.reason)

    spans: list[Span] = []
    start = -1
    for i, label in enumerate(labels):
        if label.kind == "B":
            if start >= 0:
                spans.append(Span(start, i, labels[start].type))
            start = i
        elif label.kind == "O":
            if start >= 0:
                spans.append(Span(start, i, labels[start].type))
            start = -1
    if start >= 0:
        spans.append(Span(start, len(labels), labels[start].type))
    return spans


def repair_iob(labels: Sequence[TagLabel]) -> tuple[TagLabel, ...]:
    """Rewrite orphan ``I-X`` labels to ``B-X`` so the sequence is well-formed.

    Used on model predictions before span extraction; gold data is never
    repaired.
    """
    repaired: list[TagLabel] = []
    for i, label in enumerate(labels):
        if label.kind == "I":
            prev = repaired[i - 1] if i > 0 else None
            if prev is None or prev.kind == "O" or prev.type != label.type:
                repaired.append(TagLabel("B", label.type))
                continue
        repaired.append(label)
    return tuple(repaired)
