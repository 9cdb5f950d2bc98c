"""Deterministic rule-based sentence tokenizer.

Rules (version 1, frozen; tests pin the behavior):

1. Split on whitespace.
2. From each chunk, detach leading punctuation characters one at a time,
   each becoming its own token. Exception: a single leading ``.``
   immediately followed by a letter stays attached (".NET"-style names).
3. Detach trailing punctuation one at a time. Exception: a trailing run of
   ``+`` or ``#`` immediately preceded by a letter stays attached ("C++",
   "C#"). A trailing ``.`` always detaches, so sentence-final periods
   become their own tokens ("runs." -> "runs", ".").
4. ``_`` counts as a word character and is never detached.

Tokens carry character offsets into the input sentence, so joining
surfaces with the original whitespace reconstructs the text exactly.
"""

from __future__ import annotations

import re

from .types import Token

TOKENIZER_VERSION = 1

_TRAILING_SYMBOL_RUN = re.compile(r"[+#]+$")


def _is_word_char(ch: str) -> bool:
    return ch.isalnum() or ch == "_"


def _split_chunk(chunk: str, offset: int) -> list[Token]:
    """Split one whitespace-free chunk into tokens with absolute offsets."""
    start, end = 0, len(chunk)

    leading: list[tuple[int, int]] = []
    while start < end and not _is_word_char(chunk[start]):
        if (
            chunk[start] == "."
            and start + 1 < end
            and chunk[start + 1].isalpha()
            and (start == 0 or chunk[start - 1] != ".")
        ):
            break  # keep single leading dot of ".NET"-like names
        leading.append((start, start + 1))
        start += 1

    trailing: list[tuple[int, int]] = []
    while start < end and not _is_word_char(chunk[end - 1]):
        run = _TRAILING_SYMBOL_RUN.search(chunk[start:end])
        if run is not None and run.start() > 0 and chunk[start + run.start() - 1].isalpha():
            break  # keep C++ / C# style suffixes
        trailing.append((end - 1, end))
        end -= 1

    pieces = leading
    if start < end:
        pieces = leading + [(start, end)] + list(reversed(trailing))
    else:
        pieces = leading + list(reversed(trailing))
    return [Token(chunk[a:b], offset + a, offset + b) for a, b in pieces]


def tokenize(text: str) -> tuple[Token, ...]:
    """Tokenize a single sentence into offset-carrying tokens.

    Empty or whitespace-only input yields an empty tuple.
    """
    tokens: list[Token] = []
    for match in re.finditer(r"\S+", text):
        tokens.extend(_split_chunk(match.group(), match.start()))
    return tuple(tokens)


def surfaces(text: str) -> tuple[str, ...]:
    """Convenience: token surfaces only."""
    return tuple(t.surface for t in tokenize(text))
