"""Sentence splitting over plain page text.

A boundary sits after ``.``, ``!`` or ``?`` when followed by whitespace
and then an uppercase letter, unless the word ending at the period is a
known abbreviation. Segments tile the input exactly: each segment keeps
the whitespace that follows it, so concatenating segments reproduces the
text byte for byte.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

_ABBREVIATIONS = frozenset(
    {
        "e.g.", "i.e.", "etc.", "vs.", "cf.", "al.", "ca.", "resp.",
        "mr.", "mrs.", "ms.", "dr.", "prof.", "st.", "no.", "fig.", "vol.",
    }
)

_SENTENCE_END = re.compile(r"[.!?]")


@dataclass(frozen=True)
class SentenceSegment:
    text: str
    start: int  # char offsets into the source body
    end: int


def split_sentences(body: str) -> list[SentenceSegment]:
    if not body.strip():
        return []
    n = len(body)
    starts = [0]
    for match in _SENTENCE_END.finditer(body):
        after = match.end()
        cursor = after
        while cursor < n and body[cursor].isspace():
            cursor += 1
        if cursor == after or cursor >= n:
            continue  # needs whitespace then more text
        if not body[cursor].isupper():
            continue
        word_start = match.end() - 1
        while word_start > 0 and not body[word_start - 1].isspace():
            word_start -= 1
        if body[word_start : match.end()].lower() in _ABBREVIATIONS:
            continue
        starts.append(cursor)
    bounds = starts + [n]
    return [
        SentenceSegment(body[a:b], a, b) for a, b in zip(bounds, bounds[1:])
    ]
