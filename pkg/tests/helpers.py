"""Shared test helpers for building small corpora by hand."""

from serkit.core import (
    Corpus,
    CorpusMeta,
    LabeledSentence,
    Span,
    TagLabel,
    Token,
    encode_iob,
)


def toks(*surfaces):
    out = []
    pos = 0
    for s in surfaces:
        out.append(Token(s, pos, pos + len(s)))
        pos += len(s) + 1
    return tuple(out)


def sent(surfaces, spans=(), source_id=""):
    """Build a LabeledSentence from surface strings and (start, end, type) spans."""
    tokens = toks(*surfaces)
    span_objs = [Span(a, b, t) for a, b, t in spans]
    return LabeledSentence(tokens, encode_iob(len(tokens), span_objs), source_id)


def sent_labeled(surfaces, label_strings, source_id=""):
    tokens = toks(*surfaces)
    labels = tuple(TagLabel.parse(s) for s in label_strings)
    return LabeledSentence(tokens, labels, source_id)


def corpus(*sentences, name=""):
    return Corpus(tuple(sentences), CorpusMeta(name=name))
