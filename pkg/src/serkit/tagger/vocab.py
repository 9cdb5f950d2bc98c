"""Token vocabulary with reserved padding/unknown ids."""

from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass

from ..core import Corpus

PAD = "<pad>"
UNK = "<unk>"
PAD_ID = 0
UNK_ID = 1


@dataclass(frozen=True)
class Vocab:
    """Surface -> dense id map; unseen surfaces map to the unknown id."""

    id_of: dict[str, int]
    surface_of: tuple[str, ...]

    def __len__(self) -> int:
        return len(self.surface_of)

    def encode(self, surface: str) -> int:
        return self.id_of.get(surface, UNK_ID)

    def encode_sentence(self, surfaces) -> list[int]:
        return [self.encode(s) for s in surfaces]


def build_vocab(corpus: Corpus, min_freq: int = 1) -> Vocab:
    """Ids are assigned by descending frequency, ties broken lexicographically."""
    if len(corpus) == 0:
        raise ValueError("cannot build a vocabulary from an empty corpus")
    counts: Counter = Counter()
    for sentence in corpus:
        counts.update(sentence.surfaces)
    ranked = sorted(
        (s for s, n in counts.items() if n >= min_freq),
        key=lambda s: (-counts[s], s),
    )
    surfaces = (PAD, UNK) + tuple(ranked)
    return Vocab({s: i for i, s in enumerate(surfaces)}, surfaces)


def write_vocab(vocab: Vocab, path: str | os.PathLike) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        for i, surface in enumerate(vocab.surface_of):
            handle.write(f"{surface}\t{i}\n")


def read_vocab(path: str | os.PathLike) -> Vocab:
    surfaces: list[str] = []
    with open(path, encoding="utf-8") as handle:
        for line_no, line in enumerate(handle, 1):
            line = line.rstrip("\n")
            if not line:
                continue
            surface, _, id_text = line.partition("\t")
            if int(id_text) != len(surfaces):
                raise ValueError(f"{path}:{line_no}: non-dense vocab id {id_text}")
            surfaces.append(surface)
    return Vocab({s: i for i, s in enumerate(surfaces)}, tuple(surfaces))
