"""Article filtering heuristics over alive software-entity categories.

Mirrors the two filter families evaluated on the full-scale taxonomy:
keep a page when it carries at least k alive SE categories (min_count), or
when at least a fraction f of all its listed categories are alive SE ones
(min_fraction). At full scale, min_count(2) was the most precise choice
(92.8% on a 385-article audit); these fixtures only exercise the rules.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import CategoryGraph
from .snapshot import WikiSnapshot


@dataclass(frozen=True)
class MinCount:
    k: int

    def keeps(self, alive: int, total: int) -> bool:
        return alive >= self.k


@dataclass(frozen=True)
class MinFraction:
    f: float

    def keeps(self, alive: int, total: int) -> bool:
        return total > 0 and alive / total >= self.f


Heuristic = MinCount | MinFraction


def parse_heuristic(text: str) -> Heuristic:
    """Parse 'min_count:2' or 'min_fraction:0.5'."""
    name, _, arg = text.partition(":")
    if name == "min_count" and arg:
        return MinCount(int(arg))
    if name == "min_fraction" and arg:
        return MinFraction(float(arg))
    raise ValueError(f"unknown heuristic {text!r}; expected min_count:<k> or min_fraction:<f>")


def filter_articles(
    snapshot: WikiSnapshot, graph: CategoryGraph, heuristic: Heuristic
) -> set[str]:
    """Titles of articles the heuristic keeps, judged on alive categories."""
    kept: set[str] = set()
    for page in snapshot.articles():
        alive = sum(1 for c in page.categories if graph.is_alive(c))
        if heuristic.keeps(alive, len(page.categories)):
            kept.add(page.title)
    return kept
