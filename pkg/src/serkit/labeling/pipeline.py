"""End-to-end corpus construction from an offline snapshot.

Stages: category graph from the root, blocklist pruning, article
filtering, lexicon with redirect aliases, per-page type inference, then
sentence labeling (hyperlink mentions plus keyword propagation) and
dedup/filter. Pages are processed in title order and every random-free
stage is deterministic, so identical snapshot and config produce a
byte-identical corpus file.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from ..core import (
    Corpus,
    CorpusMeta,
    LabeledSentence,
    Span,
    dedup_and_filter,
    encode_iob,
    tokenize,
)
from ..wiki import (
    CategoryGraph,
    EntityLexicon,
    Heuristic,
    PruneSpec,
    WikiSnapshot,
    build_category_graph,
    build_lexicon,
    filter_articles,
    propagate_type_map,
    prune_blocklist,
)
from ..core.types import EntityType
from .infer import StubScorer, TypeScorer, UntypedPageError, infer_entity_type
from .keywords import KeywordIndex, build_keyword_index, propagate_keyword_mentions
from .lemma import Lemmatizer, RuleLemmatizer
from .links import extract_link_mentions
from .sentences import split_sentences


@dataclass(frozen=True)
class PipelineConfig:
    root: str
    heuristic: Heuristic
    manual_map: dict[str, EntityType]
    manual_depth: int = 2
    prune: PruneSpec = PruneSpec()
    corpus_name: str = "wiki-corpus"


@dataclass
class PipelineReport:
    n_articles: int = 0
    n_selected: int = 0
    n_categories_alive: int = 0
    stage_counts: dict[int, int] = field(default_factory=dict)
    raw_sentences: int = 0
    kept_sentences: int = 0
    untyped_pages: list[str] = field(default_factory=list)
    dropped_mentions: list[str] = field(default_factory=list)
    prune_warnings: tuple[str, ...] = ()
    keyword_dropped: tuple[tuple[str, str], ...] = ()

    def to_lines(self) -> list[str]:
        lines = [
            f"articles {self.n_articles}",
            f"selected {self.n_selected}",
            f"alive_categories {self.n_categories_alive}",
            f"raw_sentences {self.raw_sentences}",
            f"kept_sentences {self.kept_sentences}",
        ]
        for stage in sorted(self.stage_counts):
            lines.append(f"type_inference_stage_{stage} {self.stage_counts[stage]}")
        for title in self.untyped_pages:
            lines.append(f"untyped_page {title}")
        for note in self.dropped_mentions:
            lines.append(f"dropped_mention {note}")
        for warning in self.prune_warnings:
            lines.append(f"prune_warning {warning}")
        return lines


@dataclass
class PipelineResult:
    corpus: Corpus
    report: PipelineReport
    graph: CategoryGraph
    lexicon: EntityLexicon


def _first_sentence(plain: str) -> str:
    segments = split_sentences(plain)
    return segments[0].text if segments else plain


def _mention_token_span(
    tokens, local_start: int, local_end: int
) -> Optional[tuple[int, int]]:
    """Token range exactly covering [local_start, local_end), or None."""
    start_idx = end_idx = None
    for i, token in enumerate(tokens):
        if token.char_start == local_start:
            start_idx = i
        if token.char_end == local_end:
            end_idx = i + 1
    if start_idx is None or end_idx is None or start_idx >= end_idx:
        return None
    return start_idx, end_idx


def label_page(
    page_title: str,
    body: str,
    lexicon: EntityLexicon,
    index: KeywordIndex,
    lemmatizer: Lemmatizer,
    report: PipelineReport,
) -> list[LabeledSentence]:
    plain, link_mentions = extract_link_mentions(body, lexicon)
    segments = split_sentences(plain)
    sentences: list[LabeledSentence] = []

    for seg_index, segment in enumerate(segments):
        tokens = tokenize(segment.text)
        spans: list[Span] = []
        occupied: list[tuple[int, int]] = []
        for mention in link_mentions:
            if mention.end <= segment.start or mention.start >= segment.end:
                continue
            if mention.start < segment.start or mention.end > segment.end:
                report.dropped_mentions.append(
                    f"{page_title}: {mention.surface!r} crosses a sentence boundary"
                )
                continue
            token_span = _mention_token_span(
                tokens, mention.start - segment.start, mention.end - segment.start
            )
            if token_span is None:
                report.dropped_mentions.append(
                    f"{page_title}: {mention.surface!r} not aligned to token boundaries"
                )
                continue
            entry = lexicon.entries[mention.target]
            if entry.type is None:
                report.dropped_mentions.append(
                    f"{page_title}: {mention.surface!r} targets untyped {mention.target!r}"
                )
                continue
            spans.append(Span(token_span[0], token_span[1], entry.type))
            occupied.append(token_span)

        surfaces = tuple(t.surface for t in tokens)
        for keyword in propagate_keyword_mentions(surfaces, occupied, index, lemmatizer):
            entry = lexicon.entries[keyword.target]
            if entry.type is None:
                continue
            spans.append(Span(keyword.start, keyword.end, entry.type))

        labels = encode_iob(len(tokens), spans)
        sentences.append(
            LabeledSentence(tokens, labels, f"{page_title}#s{seg_index}")
        )
    return sentences


def build_labeled_corpus(
    snapshot: WikiSnapshot,
    selected_titles: set[str],
    lexicon: EntityLexicon,
    report: Optional[PipelineReport] = None,
    corpus_name: str = "wiki-corpus",
    lemmatizer: Optional[Lemmatizer] = None,
) -> Corpus:
    """Label the selected pages' sentences with lexicon entities."""
    report = report if report is not None else PipelineReport()
    lemmatizer = lemmatizer or RuleLemmatizer()
    index = build_keyword_index(lexicon, lemmatizer)
    report.keyword_dropped = index.dropped

    raw: list[LabeledSentence] = []
    for title in sorted(selected_titles):
        page = snapshot.by_title[title]
        if page.is_redirect:
            continue  # a redirect's body carries no content
        raw.extend(label_page(title, page.body, lexicon, index, lemmatizer, report))

    report.raw_sentences = len(raw)
    corpus = dedup_and_filter(
        Corpus(tuple(raw), CorpusMeta(name=corpus_name, snapshot_id=snapshot.snapshot_id))
    )
    report.kept_sentences = len(corpus)
    return corpus


def run_pipeline(
    snapshot: WikiSnapshot,
    config: PipelineConfig,
    scorer: Optional[TypeScorer] = None,
    lemmatizer: Optional[Lemmatizer] = None,
) -> PipelineResult:
    scorer = scorer if scorer is not None else StubScorer()
    lemmatizer = lemmatizer or RuleLemmatizer()
    report = PipelineReport()

    graph = build_category_graph(snapshot, config.root)
    graph = prune_blocklist(graph, config.prune)
    report.prune_warnings = graph.prune_warnings
    report.n_categories_alive = len(graph.alive_nodes())
    report.n_articles = len(snapshot.articles())

    type_map = propagate_type_map(graph, config.manual_map, config.manual_depth)
    selected = filter_articles(snapshot, graph, config.heuristic)
    report.n_selected = len(selected)

    lexicon = build_lexicon(snapshot, selected)
    inferred: dict[str, EntityType] = {}
    for title in sorted(selected):
        page = snapshot.by_title[title]
        plain, _ = extract_link_mentions(page.body, lexicon)
        try:
            inference = infer_entity_type(
                page, graph, type_map.types, scorer, _first_sentence(plain)
            )
        except UntypedPageError:
            report.untyped_pages.append(title)
            continue
        inferred[title] = inference.type
        report.stage_counts[inference.stage] = report.stage_counts.get(inference.stage, 0) + 1
    lexicon = lexicon.with_types(inferred)

    params = (
        ("root", config.root),
        ("heuristic", repr(config.heuristic)),
        ("manual_depth", str(config.manual_depth)),
    )
    corpus = build_labeled_corpus(
        snapshot, selected, lexicon, report, config.corpus_name, lemmatizer
    )
    corpus = Corpus(
        corpus.sentences,
        CorpusMeta(config.corpus_name, params, snapshot.snapshot_id),
    )
    return PipelineResult(corpus, report, graph, lexicon)
