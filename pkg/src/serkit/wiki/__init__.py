"""Wiki snapshot ingestion: category graph, pruning, article filtering,
entity lexicon with redirect aliases, and category-type propagation."""

from .articles import Heuristic, MinCount, MinFraction, filter_articles, parse_heuristic
from .graph import CategoryGraph, MissingRootError, PruneSpec, build_category_graph, prune_blocklist
from .lexicon import EntityLexicon, LexiconEntry, build_lexicon
from .snapshot import (
    CATEGORY_PREFIX,
    Page,
    SnapshotFormatError,
    WikiSnapshot,
    check_link_markup,
    dump_snapshot,
    load_snapshot,
)
from .typemap import (
    ManualMapGapError,
    TypeMapResult,
    propagate_type_map,
    read_category_list,
    read_manual_map,
)

__all__ = [
    "CATEGORY_PREFIX",
    "CategoryGraph",
    "EntityLexicon",
    "Heuristic",
    "LexiconEntry",
    "ManualMapGapError",
    "MinCount",
    "MinFraction",
    "MissingRootError",
    "Page",
    "PruneSpec",
    "SnapshotFormatError",
    "TypeMapResult",
    "WikiSnapshot",
    "build_category_graph",
    "build_lexicon",
    "check_link_markup",
    "dump_snapshot",
    "filter_articles",
    "load_snapshot",
    "parse_heuristic",
    "propagate_type_map",
    "prune_blocklist",
    "read_category_list",
    "read_manual_map",
]
