"""Synthetic clean-corpus generator for desk-scale training experiments.

Sentences come from a template set whose entity slots are filled from a
generated 12-type lexicon and whose filler slots draw from verb, noun and
adverb pools. Every entity owns a generated head word, optionally
preceded by modifiers from a pool shared across all types (the
shared-word ambiguity), and a small slice of entities reuses another
type's head word outright. Entity usage within a type is mildly
Zipf-distributed, leaving a tail of rarely-seen entities, and the pooled
filler words make each entity occurrence's local context close to unique,
so a model with enough capacity can memorize individual (possibly
mislabeled) instances instead of only word-level statistics.

Types are dealt from a reshuffled balanced deck, keeping per-type span
counts close to uniform.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..core import (
    ENTITY_TYPES,
    Corpus,
    CorpusMeta,
    EntityType,
    LabeledSentence,
    Span,
    Token,
    encode_iob,
)

_MODIFIERS = (
    "Fast", "Quantum", "Neural", "Open", "Micro", "Hyper", "Delta", "Prime",
    "Core", "Vector", "Cloud", "Turbo", "Zero", "Meta", "Flux", "Solid",
    "Apex", "Nano", "Ultra", "Deep", "Omni", "Pico", "Giga", "Aero",
)

_CONSONANTS = "bcdfglmnprstvz"
_VOWELS = "aeiou"

# slot markers: {} entity, <V> verb pool, <N> noun pool, <ADV> adverb pool
_TEMPLATES: tuple[tuple[str, ...], ...] = (
    ("{}", "is", "<V>", "with", "{}", "on", "{}", "."),
    ("<N>", "<V>", "{}", "on", "{}", "."),
    ("The", "<N>", "<V>", "{}", "to", "{}", "."),
    ("{}", "<V>", "{}", "<ADV>", "."),
    ("Many", "<N>", "<V>", "{}", "over", "{}", "."),
    ("{}", "<V>", "{}", "and", "{}", "."),
    ("You", "can", "<V>", "{}", "with", "{}", "."),
    ("{}", "<V>", "{}", "by", "default", "."),
    ("{}", "<V>", "{}", "last", "year", "."),
    ("<N>", "<V>", "{}", "using", "{}", "."),
    ("{}", "<V>", "{}", "in", "<N>", "."),
    ("{}", "<V>", "{}", "at", "<N>", "."),
    ("{}", "<V>", "with", "{}", "and", "{}", "."),
    ("<N>", "<V>", "{}", "ahead", "of", "{}", "."),
    ("<V>", "{}", "with", "{}", "needs", "{}", "."),
    ("{}", "<V>", "{}", "through", "{}", "."),
)

_POOL_SIZES = {"<V>": 90, "<N>": 60, "<ADV>": 40}


@dataclass(frozen=True)
class SynthEntity:
    name: tuple[str, ...]
    type: EntityType


def _make_word(rng: np.random.Generator, taken: set[str]) -> str:
    """A fresh pronounceable capitalized word, 2-3 syllables."""
    while True:
        n_syllables = 2 + int(rng.integers(2))
        word = "".join(
            _CONSONANTS[int(rng.integers(len(_CONSONANTS)))]
            + _VOWELS[int(rng.integers(len(_VOWELS)))]
            for _ in range(n_syllables)
        ).capitalize()
        if word not in taken:
            taken.add(word)
            return word


def _build_lexicon(
    rng: np.random.Generator, lexicon_size: int
) -> dict[EntityType, list[SynthEntity]]:
    per_type = max(1, lexicon_size // len(ENTITY_TYPES))
    words_taken: set[str] = set(_MODIFIERS)
    heads: dict[EntityType, list[str]] = {
        etype: [_make_word(rng, words_taken) for _ in range(per_type)]
        for etype in ENTITY_TYPES
    }
    names_taken: set[tuple[str, ...]] = set()
    lexicon: dict[EntityType, list[SynthEntity]] = {}
    for t_index, etype in enumerate(ENTITY_TYPES):
        entities = []
        for e_index in range(per_type):
            if rng.random() < 0.08:
                # shared-word ambiguity: borrow a head from another type
                other = ENTITY_TYPES[(t_index + 1 + int(rng.integers(11))) % 12]
                head = heads[other][int(rng.integers(per_type))]
            else:
                head = heads[etype][e_index]
            while True:
                u = rng.random()
                n_mods = 0 if u < 0.30 else (1 if u < 0.85 else 2)
                mods = [
                    _MODIFIERS[int(rng.integers(len(_MODIFIERS)))]
                    for _ in range(n_mods)
                ]
                name = tuple(mods + [head])
                if name not in names_taken:
                    names_taken.add(name)
                    break
            entities.append(SynthEntity(name, etype))
        lexicon[etype] = entities
    return lexicon


def _zipf_weights(n: int, alpha: float = 0.6) -> np.ndarray:
    weights = 1.0 / np.arange(1, n + 1, dtype=np.float64) ** alpha
    return weights / weights.sum()


class _TypeDeck:
    """Deals entity types from a reshuffled balanced deck."""

    def __init__(self, rng: np.random.Generator):
        self._rng = rng
        self._deck: list[EntityType] = []

    def deal(self) -> EntityType:
        if not self._deck:
            self._deck = list(ENTITY_TYPES) * 4
            self._rng.shuffle(self._deck)
        return self._deck.pop()


def gen_synthetic_corpus(n_sentences: int, lexicon_size: int = 600, seed: int = 0) -> Corpus:
    """Generate a clean, deduplicated, IOB-valid corpus of template sentences.

    Deterministic per seed; every sentence carries at least one entity span.
    The filler-word slots make entity contexts vary sentence to sentence,
    so instance memorization is possible (and label noise can hurt).
    """
    if n_sentences < 1:
        raise ValueError("n_sentences must be >= 1")
    rng = np.random.default_rng(seed)
    lexicon = _build_lexicon(rng, lexicon_size)
    filler_taken: set[str] = set()
    pools = {
        marker: [_make_word(rng, filler_taken).lower() for _ in range(size)]
        for marker, size in _POOL_SIZES.items()
    }
    weights = {etype: _zipf_weights(len(ents)) for etype, ents in lexicon.items()}
    deck = _TypeDeck(rng)

    sentences: list[LabeledSentence] = []
    seen: set[tuple[str, ...]] = set()
    attempts_left = 200 * n_sentences
    while len(sentences) < n_sentences:
        if attempts_left <= 0:
            raise RuntimeError(
                "cannot generate enough unique sentences; increase lexicon_size"
            )
        attempts_left -= 1
        template = _TEMPLATES[int(rng.integers(len(_TEMPLATES)))]
        surfaces: list[str] = []
        spans: list[Span] = []
        for word in template:
            if word in pools:
                pool = pools[word]
                surfaces.append(pool[int(rng.integers(len(pool)))])
                continue
            if word != "{}":
                surfaces.append(word)
                continue
            etype = deck.deal()
            ents = lexicon[etype]
            entity = ents[int(rng.choice(len(ents), p=weights[etype]))]
            spans.append(Span(len(surfaces), len(surfaces) + len(entity.name), etype))
            surfaces.extend(entity.name)
        key = tuple(surfaces)
        if key in seen:
            continue
        seen.add(key)
        tokens = []
        pos = 0
        for surface in surfaces:
            tokens.append(Token(surface, pos, pos + len(surface)))
            pos += len(surface) + 1
        labels = encode_iob(len(tokens), spans)
        sentences.append(
            LabeledSentence(tuple(tokens), labels, f"synth#{len(sentences)}")
        )

    meta = CorpusMeta(
        name="synthetic",
        params=(
            ("n_sentences", str(n_sentences)),
            ("lexicon_size", str(lexicon_size)),
            ("seed", str(seed)),
        ),
    )
    return Corpus(tuple(sentences), meta)
