"""Span labeling: sentence splitting, hyperlink and keyword mentions,
three-stage entity-type inference, and the end-to-end corpus pipeline."""

from .infer import (
    ExternalProcessScorer,
    StubScorer,
    TYPE_KEYWORDS,
    TypeInference,
    TypeScorer,
    UntypedPageError,
    infer_entity_type,
)
from .keywords import (
    CASE_SENSITIVE_MAX_CHARS,
    KeywordIndex,
    KeywordMention,
    build_keyword_index,
    propagate_keyword_mentions,
)
from .lemma import Lemmatizer, RuleLemmatizer
from .links import LinkMarkupError, LinkMention, extract_link_mentions
from .pipeline import (
    PipelineConfig,
    PipelineReport,
    PipelineResult,
    build_labeled_corpus,
    label_page,
    run_pipeline,
)
from .sentences import SentenceSegment, split_sentences

__all__ = [
    "CASE_SENSITIVE_MAX_CHARS",
    "ExternalProcessScorer",
    "KeywordIndex",
    "KeywordMention",
    "Lemmatizer",
    "LinkMarkupError",
    "LinkMention",
    "PipelineConfig",
    "PipelineReport",
    "PipelineResult",
    "RuleLemmatizer",
    "SentenceSegment",
    "StubScorer",
    "TYPE_KEYWORDS",
    "TypeInference",
    "TypeScorer",
    "UntypedPageError",
    "build_keyword_index",
    "build_labeled_corpus",
    "extract_link_mentions",
    "infer_entity_type",
    "label_page",
    "propagate_keyword_mentions",
    "run_pipeline",
    "split_sentences",
]
