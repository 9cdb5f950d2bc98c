"""Entity-type assignment for categories: manual map for shallow levels,
breadth-first inheritance below.

The manual map must cover every alive category up to the configured depth.
Deeper alive categories inherit from their already-typed alive parents:
majority type wins; a tied majority falls to the type of the shallowest
parent; a remaining tie picks the lexicographically smallest canonical
type string. Alive categories with no typed ancestor are reported, not
fatal.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from ..core import EntityType
from .graph import CategoryGraph


class ManualMapGapError(ValueError):
    def __init__(self, missing: list[str], depth: int):
        super().__init__(
            f"manual map must cover all alive categories at depth <= {depth}; "
            f"missing: {missing[:5]}"
        )
        self.missing = missing


@dataclass(frozen=True)
class TypeMapResult:
    types: dict[str, EntityType]  # total over alive categories with a typed ancestor
    untyped: tuple[str, ...]
    manual_depth: int


def propagate_type_map(
    graph: CategoryGraph,
    manual_map: dict[str, EntityType],
    manual_depth: int = 2,
) -> TypeMapResult:
    alive = [c for c in graph.depth if graph.is_alive(c)]
    missing = sorted(
        c for c in alive if graph.depth[c] <= manual_depth and c not in manual_map
    )
    if missing:
        raise ManualMapGapError(missing, manual_depth)

    types: dict[str, EntityType] = {
        c: manual_map[c] for c in alive if c in manual_map
    }
    untyped: list[str] = []

    pending = sorted(
        (c for c in alive if c not in types),
        key=lambda c: (graph.depth[c], c),
    )
    for category in pending:
        typed_parents = [
            p for p in graph.parents.get(category, ()) if p in types
        ]
        if not typed_parents:
            untyped.append(category)
            continue
        counts = Counter(types[p] for p in typed_parents)
        top = max(counts.values())
        tied = [t for t, n in counts.items() if n == top]
        if len(tied) == 1:
            types[category] = tied[0]
            continue
        # tie-break: type of the shallowest parent, then smallest type string
        best_depth = {
            t: min(graph.depth[p] for p in typed_parents if types[p] is t)
            for t in tied
        }
        shallowest = min(best_depth.values())
        candidates = sorted(
            t.value for t, d in best_depth.items() if d == shallowest
        )
        types[category] = EntityType(candidates[0])

    return TypeMapResult(types, tuple(untyped), manual_depth)


def read_manual_map(path) -> dict[str, EntityType]:
    """Manual map file: `<category>\\t<TYPE>` lines, `#` comments allowed."""
    mapping: dict[str, EntityType] = {}
    with open(path, encoding="utf-8") as handle:
        for line_no, line in enumerate(handle, 1):
            line = line.rstrip("\n")
            if not line.strip() or line.startswith("#"):
                continue
            category, _, type_name = line.partition("\t")
            if not type_name:
                raise ValueError(f"{path}:{line_no}: expected <category>\\t<TYPE>")
            try:
                mapping[category] = EntityType(type_name)
            except ValueError:
                raise ValueError(f"{path}:{line_no}: unknown entity type {type_name!r}") from None
    return mapping


def read_category_list(path) -> frozenset[str]:
    """Category list file: one name per line, `#` comments allowed."""
    names = set()
    with open(path, encoding="utf-8") as handle:
        for line in handle:
            line = line.rstrip("\n")
            if line.strip() and not line.startswith("#"):
                names.add(line)
    return frozenset(names)
