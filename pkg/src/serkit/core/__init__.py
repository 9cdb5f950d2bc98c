"""Core data model: entity types, IOB labels, tokenization, corpus I/O."""

from .conll import ConllFormatError, read_conll, write_conll
from .corpus_ops import CorpusStats, corpus_stats, dedup_and_filter, stratified_split
from .iob import (
    IOBViolation,
    MalformedIOBError,
    OverlappingSpansError,
    decode_spans,
    encode_iob,
    repair_iob,
    validate_iob,
)
from .tokenizer import TOKENIZER_VERSION, surfaces, tokenize
from .types import (
    ENTITY_TYPES,
    LABEL_INDEX,
    LABEL_SPACE,
    LABEL_STRINGS,
    N_LABELS,
    O_LABEL,
    Corpus,
    CorpusMeta,
    EntityType,
    LabeledSentence,
    Span,
    TagLabel,
    Token,
)

__all__ = [
    "ConllFormatError",
    "Corpus",
    "CorpusMeta",
    "CorpusStats",
    "ENTITY_TYPES",
    "EntityType",
    "IOBViolation",
    "LABEL_INDEX",
    "LABEL_SPACE",
    "LABEL_STRINGS",
    "LabeledSentence",
    "MalformedIOBError",
    "N_LABELS",
    "O_LABEL",
    "OverlappingSpansError",
    "Span",
    "TOKENIZER_VERSION",
    "TagLabel",
    "Token",
    "corpus_stats",
    "decode_spans",
    "dedup_and_filter",
    "encode_iob",
    "read_conll",
    "repair_iob",
    "stratified_split",
    "surfaces",
    "tokenize",
    "validate_iob",
    "write_conll",
]
