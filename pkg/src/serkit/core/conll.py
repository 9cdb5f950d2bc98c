"""CoNLL-style corpus file I/O.

File format (UTF-8):

* one token per line: ``<surface>\\t<label>``
* sentences separated by exactly one blank line
* comment lines start with ``# ``; the writer emits
  ``# meta: <key> = <value>`` header lines for corpus metadata and one
  ``# source: <id>`` line before a sentence that has a source id
* no trailing blank line is required

Reading then writing preserves corpus content exactly (surfaces, labels,
source ids, metadata). Token character offsets are not stored; the reader
synthesizes offsets as if surfaces were joined by single spaces.
"""

from __future__ import annotations

import os
from typing import Iterable

from .types import Corpus, CorpusMeta, LabeledSentence, TagLabel, Token


class ConllFormatError(ValueError):
    def __init__(self, path: str | os.PathLike, line_no: int, message: str):
        super().__init__(f"{path}:{line_no}: {message}")
        self.path = str(path)
        self.line_no = line_no


def _synth_tokens(surfaces: Iterable[str]) -> tuple[Token, ...]:
    tokens = []
    pos = 0
    for surface in surfaces:
        tokens.append(Token(surface, pos, pos + len(surface)))
        pos += len(surface) + 1
    return tuple(tokens)


def read_conll(path: str | os.PathLike) -> Corpus:
    """Read a corpus file; malformed lines and unknown labels raise
    ConllFormatError with the offending line number."""
    sentences: list[LabeledSentence] = []
    meta_name = ""
    meta_snapshot = ""
    meta_params: list[tuple[str, str]] = []
    surfaces: list[str] = []
    labels: list[TagLabel] = []
    source_id = ""

    def flush() -> None:
        nonlocal surfaces, labels, source_id
        if surfaces:
            sentences.append(
                LabeledSentence(_synth_tokens(surfaces), tuple(labels), source_id)
            )
        surfaces, labels, source_id = [], [], ""

    with open(path, encoding="utf-8") as handle:
        for line_no, raw in enumerate(handle, 1):
            line = raw.rstrip("\n")
            if not line.strip():
                flush()
                continue
            if line.startswith("# "):
                comment = line[2:]
                if comment.startswith("source: "):
                    source_id = comment[len("source: "):]
                elif comment.startswith("meta: "):
                    body = comment[len("meta: "):]
                    key, _, value = body.partition(" = ")
                    if key == "name":
                        meta_name = value
                    elif key == "snapshot":
                        meta_snapshot = value
                    else:
                        meta_params.append((key, value))
                continue
            parts = line.split("\t")
            if len(parts) != 2 or not parts[0]:
                raise ConllFormatError(
                    path, line_no, f"expected <surface>\\t<label>, got {line!r}"
                )
            surface, label_text = parts
            try:
                label = TagLabel.parse(label_text)
            except ValueError as exc:
                raise ConllFormatError(path, line_no, str(exc)) from None
            surfaces.append(surface)
            labels.append(label)
    flush()
    meta = CorpusMeta(meta_name, tuple(meta_params), meta_snapshot)
    return Corpus(tuple(sentences), meta)


def write_conll(corpus: Corpus, path: str | os.PathLike) -> None:
    """Write a corpus; byte output is a deterministic function of content."""
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        if corpus.meta.name:
            handle.write(f"# meta: name = {corpus.meta.name}\n")
        if corpus.meta.snapshot_id:
            handle.write(f"# meta: snapshot = {corpus.meta.snapshot_id}\n")
        for key, value in corpus.meta.params:
            handle.write(f"# meta: {key} = {value}\n")
        for i, sentence in enumerate(corpus.sentences):
            if i > 0:
                handle.write("\n")
            if sentence.source_id:
                handle.write(f"# source: {sentence.source_id}\n")
            for token, label in zip(sentence.tokens, sentence.labels):
                handle.write(f"{token.surface}\t{label}\n")
