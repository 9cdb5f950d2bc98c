"""Category hierarchy: breadth-first construction and blocklist pruning.

Edges come from category pages: a page ``Category:X`` listing parent ``P``
contributes the edge P -> X. The graph holds only categories reachable
from the root; depth is the BFS distance of first visit, which breaks
cycles. Articles may reference categories outside the graph (real wikis
do); such references simply never count as software-entity categories.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, replace

from .snapshot import WikiSnapshot


class MissingRootError(ValueError):
    pass


@dataclass(frozen=True)
class PruneSpec:
    """blocklist entries remove whole subtrees (reachability through them);
    droplist entries remove single categories without their subtree."""

    blocklist: frozenset[str] = frozenset()
    droplist: frozenset[str] = frozenset()

    @classmethod
    def of(cls, blocklist=(), droplist=()) -> "PruneSpec":
        return cls(frozenset(blocklist), frozenset(droplist))


@dataclass(frozen=True)
class CategoryGraph:
    root: str
    children: dict[str, tuple[str, ...]]
    parents: dict[str, tuple[str, ...]]
    depth: dict[str, int]
    alive: dict[str, bool]
    prune_warnings: tuple[str, ...] = ()

    def nodes(self) -> list[str]:
        return list(self.depth)

    def is_alive(self, category: str) -> bool:
        return self.alive.get(category, False)

    def alive_nodes(self) -> list[str]:
        return [c for c, flag in self.alive.items() if flag]

    @property
    def max_depth(self) -> int:
        return max(self.depth.values(), default=0)


def _edge_map(snapshot: WikiSnapshot) -> dict[str, list[str]]:
    edges: dict[str, list[str]] = {}
    for page in snapshot.category_pages():
        child = page.category_name
        for parent in page.categories:
            edges.setdefault(parent, []).append(child)
    # deterministic child order regardless of snapshot page order
    return {parent: sorted(set(kids)) for parent, kids in edges.items()}


def build_category_graph(snapshot: WikiSnapshot, root: str) -> CategoryGraph:
    defined = {p.category_name for p in snapshot.category_pages()}
    if root not in defined:
        raise MissingRootError(f"root category {root!r} has no Category: page")

    edges = _edge_map(snapshot)
    depth: dict[str, int] = {root: 0}
    queue: deque[str] = deque([root])
    while queue:
        node = queue.popleft()
        for child in edges.get(node, ()):
            if child not in depth:
                depth[child] = depth[node] + 1
                queue.append(child)

    reached = set(depth)
    children = {
        node: tuple(c for c in edges.get(node, ()) if c in reached) for node in reached
    }
    parents: dict[str, list[str]] = {node: [] for node in reached}
    for parent, kids in children.items():
        for child in kids:
            parents[child].append(parent)
    return CategoryGraph(
        root=root,
        children=children,
        parents={node: tuple(sorted(ps)) for node, ps in parents.items()},
        depth=depth,
        alive={node: True for node in reached},
    )


def prune_blocklist(graph: CategoryGraph, spec: PruneSpec) -> CategoryGraph:
    """Kill blocklisted subtrees and droplisted singles.

    A category stays alive iff it is reachable from the root without
    passing through a blocklisted category and is not itself droplisted.
    Unknown spec entries are reported as warnings, not errors; pruning an
    already-pruned graph only ever removes more.
    """
    warnings = [
        f"unknown blocklist category: {name}"
        for name in sorted(spec.blocklist)
        if name not in graph.depth
    ] + [
        f"unknown droplist category: {name}"
        for name in sorted(spec.droplist)
        if name not in graph.depth
    ]

    reachable: set[str] = set()
    if graph.root not in spec.blocklist and graph.alive.get(graph.root, False):
        queue: deque[str] = deque([graph.root])
        reachable.add(graph.root)
        while queue:
            node = queue.popleft()
            for child in graph.children.get(node, ()):
                if child in spec.blocklist or child in reachable:
                    continue
                if not graph.alive.get(child, False):
                    continue  # respect earlier pruning
                reachable.add(child)
                queue.append(child)

    alive = {
        node: (node in reachable and node not in spec.droplist)
        for node in graph.depth
    }
    return replace(
        graph,
        alive=alive,
        prune_warnings=graph.prune_warnings + tuple(warnings),
    )
