"""Pluggable lemmatization for keyword matching.

The default is rule-based and dependency-free: lowercase, then strip a
plural "s"/"es" from tokens of length >= 4, with a short exception list
for common words whose final s is not a plural. Deterministic and
idempotent; a stronger lemmatizer can be substituted through the
Lemmatizer protocol.
"""

from __future__ import annotations

from typing import Protocol

_EXCEPTIONS = frozenset(
    {"its", "this", "thus", "was", "has", "does", "series", "news", "analysis", "os", "dos"}
)

_SIBILANT_ENDINGS = ("s", "x", "z", "ch", "sh")


class Lemmatizer(Protocol):
    def lemma(self, surface: str) -> str: ...


class RuleLemmatizer:
    def lemma(self, surface: str) -> str:
        word = surface.lower()
        if word in _EXCEPTIONS or len(word) < 4:
            return word
        if word.endswith("es") and word[:-2].endswith(_SIBILANT_ENDINGS):
            return word[:-2]
        if word.endswith("s") and not word.endswith("ss"):
            return word[:-1]
        return word
