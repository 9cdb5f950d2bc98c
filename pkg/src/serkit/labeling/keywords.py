"""Keyword propagation: gazetteer matching of lexicon aliases.

Wiki authors typically hyperlink only an entity's first mention, so later
mentions are recovered by matching alias token sequences. Aliases up to 4
characters long match on exact surfaces (case-sensitive, avoiding "IT"/
"Go"-style false hits); longer aliases match on lemma sequences. The
longest match at each position wins, scanning left to right; matches
never overlap one another or the hyperlink mentions. Two aliases of
different entities that collapse to the same match key are ambiguous
gazetteer entries: both are dropped and logged.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..core import tokenize
from ..wiki import EntityLexicon
from .lemma import Lemmatizer, RuleLemmatizer

CASE_SENSITIVE_MAX_CHARS = 4


@dataclass(frozen=True)
class KeywordMention:
    start: int  # token indices
    end: int
    target: str  # canonical title


@dataclass(frozen=True)
class KeywordIndex:
    exact: dict[tuple[str, ...], str]  # surface keys (short aliases)
    lemmas: dict[tuple[str, ...], str]  # lemma keys (longer aliases)
    max_key_len: int
    dropped: tuple[tuple[str, str], ...]  # (alias, reason)


def build_keyword_index(
    lexicon: EntityLexicon, lemmatizer: Lemmatizer | None = None
) -> KeywordIndex:
    lemmatizer = lemmatizer or RuleLemmatizer()
    exact: dict[tuple[str, ...], str] = {}
    lemmas: dict[tuple[str, ...], str] = {}
    ambiguous: dict[tuple[str, ...], set[str]] = {}
    alias_of_key: dict[tuple[str, ...], list[str]] = {}

    for canonical in sorted(lexicon.entries):
        for alias in sorted(lexicon.entries[canonical].aliases):
            surfaces = tuple(t.surface for t in tokenize(alias))
            if not surfaces:
                continue
            if len(alias) <= CASE_SENSITIVE_MAX_CHARS:
                key, table = surfaces, exact
            else:
                key, table = tuple(lemmatizer.lemma(s) for s in surfaces), lemmas
            owner = table.get(key)
            if owner is not None and owner != canonical:
                ambiguous.setdefault(key, {owner}).add(canonical)
            table.setdefault(key, canonical)
            alias_of_key.setdefault(key, []).append(alias)

    dropped: list[tuple[str, str]] = []
    for key, owners in ambiguous.items():
        table = exact if key in exact else lemmas
        table.pop(key, None)
        exact.pop(key, None)
        lemmas.pop(key, None)
        for alias in alias_of_key[key]:
            dropped.append((alias, f"ambiguous between {sorted(owners)}"))

    max_key_len = max(
        (len(k) for k in list(exact) + list(lemmas)), default=0
    )
    return KeywordIndex(exact, lemmas, max_key_len, tuple(sorted(set(dropped))))


def propagate_keyword_mentions(
    surfaces: tuple[str, ...],
    occupied: list[tuple[int, int]],
    index: KeywordIndex,
    lemmatizer: Lemmatizer | None = None,
) -> list[KeywordMention]:
    """Additional mentions in one tokenized sentence.

    ``occupied`` holds token ranges already taken by hyperlink mentions.
    """
    lemmatizer = lemmatizer or RuleLemmatizer()
    n = len(surfaces)
    lemma_seq = tuple(lemmatizer.lemma(s) for s in surfaces)
    taken = [False] * n
    for start, end in occupied:
        for i in range(start, end):
            taken[i] = True

    found: list[KeywordMention] = []
    i = 0
    while i < n:
        if taken[i]:
            i += 1
            continue
        matched = False
        for length in range(min(index.max_key_len, n - i), 0, -1):
            if any(taken[i : i + length]):
                continue
            target = index.exact.get(surfaces[i : i + length])
            if target is None:
                target = index.lemmas.get(lemma_seq[i : i + length])
            if target is not None:
                found.append(KeywordMention(i, i + length, target))
                for j in range(i, i + length):
                    taken[j] = True
                i += length
                matched = True
                break
        if not matched:
            i += 1
    return found
