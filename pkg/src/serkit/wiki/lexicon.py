"""Entity lexicon: canonical titles plus redirect-derived aliases.

Every selected article becomes one entry whose alias set starts with its
own title. Each redirect page whose chain-resolved target (followed up to
5 hops) is a selected title contributes its own title as an alias of that
target. Page titles are unique, so alias strings never collide across
entries here; ambiguity between *lemmatized* alias forms is handled where
it arises, in the keyword-match index.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from ..core import EntityType
from .snapshot import WikiSnapshot

MAX_REDIRECT_HOPS = 5


@dataclass(frozen=True)
class LexiconEntry:
    canonical: str
    aliases: frozenset[str]
    type: Optional[EntityType]
    source: str


@dataclass(frozen=True)
class EntityLexicon:
    entries: dict[str, LexiconEntry]
    alias_to_canonical: dict[str, str]
    unresolved_redirects: tuple[str, ...] = ()

    def __len__(self) -> int:
        return len(self.entries)

    def resolve_target(self, title: str) -> Optional[str]:
        """Canonical title a link target refers to, or None if unknown."""
        return self.alias_to_canonical.get(title)

    def with_types(self, types: dict[str, EntityType]) -> "EntityLexicon":
        entries = {
            canonical: LexiconEntry(
                entry.canonical, entry.aliases, types.get(canonical, entry.type), entry.source
            )
            for canonical, entry in self.entries.items()
        }
        return EntityLexicon(entries, self.alias_to_canonical, self.unresolved_redirects)


def _resolve_chain(start: str, redirect_of: dict[str, str]) -> Optional[str]:
    """Follow redirects up to MAX_REDIRECT_HOPS; None when unresolved."""
    current = start
    for _ in range(MAX_REDIRECT_HOPS):
        target = redirect_of.get(current)
        if target is None:
            return current
        current = target
    return None if current in redirect_of else current


def build_lexicon(snapshot: WikiSnapshot, selected_titles: Iterable[str]) -> EntityLexicon:
    selected = set(selected_titles)
    unknown = selected - set(snapshot.by_title)
    if unknown:
        raise ValueError(f"selected titles missing from snapshot: {sorted(unknown)[:3]}")

    redirect_of = {p.title: p.redirect_target for p in snapshot.redirects()}

    aliases: dict[str, set[str]] = {title: {title} for title in sorted(selected)}
    unresolved: list[str] = []
    for redirect_title in sorted(redirect_of):
        final = _resolve_chain(redirect_title, redirect_of)
        if final is None:
            unresolved.append(redirect_title)
            continue
        if final in selected:
            aliases[final].add(redirect_title)

    entries: dict[str, LexiconEntry] = {}
    alias_to_canonical: dict[str, str] = {}
    for canonical in sorted(selected):
        entries[canonical] = LexiconEntry(
            canonical, frozenset(aliases[canonical]), None, canonical
        )
        for alias in aliases[canonical]:
            alias_to_canonical[alias] = canonical

    return EntityLexicon(entries, alias_to_canonical, tuple(sorted(unresolved)))
