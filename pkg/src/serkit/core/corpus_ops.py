"""Corpus-level operations: dedup/filter, stratified splits, statistics."""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass

from .iob import decode_spans
from .types import Corpus, CorpusMeta, EntityType, LabeledSentence


def dedup_and_filter(corpus: Corpus) -> Corpus:
    """Drop sentences without entity spans and exact duplicates.

    A duplicate is an exact match on token surfaces joined by single
    spaces, case-sensitive; the first occurrence is kept.
    """
    seen: set[str] = set()
    kept: list[LabeledSentence] = []
    for sentence in corpus:
        if not any(label.kind == "B" for label in sentence.labels):
            continue
        key = sentence.surface_key()
        if key in seen:
            continue
        seen.add(key)
        kept.append(sentence)
    return Corpus(tuple(kept), corpus.meta)


def _span_type_counts(sentence: LabeledSentence) -> Counter:
    return Counter(span.type for span in decode_spans(sentence.labels))


def stratified_split(
    corpus: Corpus, sizes: tuple[int, int, int], seed: int
) -> tuple[Corpus, Corpus, Corpus]:
    """Split into (train, val, test) of exactly the requested sizes.

    Greedy balancing: sentences are visited in seeded random order and each
    is assigned to the split (with remaining capacity) whose per-type span
    deficit, summed over the sentence's types, is largest. When sizes sum
    to less than the corpus, only the first ``sum(sizes)`` sentences in the
    seeded order are used.
    """
    total = sum(sizes)
    if total > len(corpus):
        raise ValueError(f"requested {total} sentences from a corpus of {len(corpus)}")
    if any(size < 0 for size in sizes):
        raise ValueError(f"negative split size in {sizes}")

    order = list(range(len(corpus)))
    random.Random(seed).shuffle(order)
    selected = order[:total]

    global_counts: Counter = Counter()
    per_sentence = []
    for idx in selected:
        counts = _span_type_counts(corpus.sentences[idx])
        per_sentence.append(counts)
        global_counts.update(counts)

    shares = [size / total if total else 0.0 for size in sizes]
    targets = [
        {etype: global_counts[etype] * share for etype in global_counts}
        for share in shares
    ]
    have: list[Counter] = [Counter(), Counter(), Counter()]
    capacity = list(sizes)
    assigned: list[list[int]] = [[], [], []]

    for idx, counts in zip(selected, per_sentence):
        best_split = -1
        best_score = None
        for s in range(3):
            if capacity[s] == 0:
                continue
            score = sum(
                n * (targets[s].get(etype, 0.0) - have[s][etype])
                for etype, n in counts.items()
            )
            if not counts:  # span-free sentence: prefer the emptiest split
                score = capacity[s]
            if best_score is None or score > best_score:
                best_score = score
                best_split = s
        assigned[best_split].append(idx)
        have[best_split].update(counts)
        capacity[best_split] -= 1

    def build(indices: list[int], name: str) -> Corpus:
        ordered = sorted(indices)
        meta = CorpusMeta(
            name=f"{corpus.meta.name}/{name}" if corpus.meta.name else name,
            params=corpus.meta.params + (("split_seed", str(seed)),),
            snapshot_id=corpus.meta.snapshot_id,
        )
        return Corpus(tuple(corpus.sentences[i] for i in ordered), meta)

    return build(assigned[0], "train"), build(assigned[1], "val"), build(assigned[2], "test")


@dataclass(frozen=True)
class CorpusStats:
    sentence_count: int
    per_type: dict[EntityType, int]
    spans_per_sentence: dict[int, int]  # histogram: span count -> #sentences

    @property
    def total_spans(self) -> int:
        return sum(self.per_type.values())


def corpus_stats(corpus: Corpus) -> CorpusStats:
    """Per-type span counts and spans-per-sentence histogram."""
    per_type: Counter = Counter()
    histogram: Counter = Counter()
    for sentence in corpus:
        counts = _span_type_counts(sentence)
        per_type.update(counts)
        histogram[sum(counts.values())] += 1
    return CorpusStats(
        sentence_count=len(corpus),
        per_type=dict(per_type),
        spans_per_sentence=dict(histogram),
    )
