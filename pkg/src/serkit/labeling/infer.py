"""Three-stage entity-type inference for a page with multiple categories.

Stage 1: a unique most fine-grained category (largest distance from the
root) decides the type. Stage 2: several categories tied at the maximum
depth fall to the majority type among them. Stage 3: a tied majority is
broken by a scorer over the page's first sentence; the candidate with the
lowest score (perplexity-like, lower = more plausible) wins, and a score
tie picks the lexicographically smallest type string. The stage used is
recorded per page.

The bundled stub scorer stands in for an out-of-process language-model
scorer; real scorers attach through a one-request-per-line text protocol
(``<first sentence>\\t<CANDIDATE>`` in, one float out per line).
"""

from __future__ import annotations

import subprocess
from dataclasses import dataclass, field
from typing import Protocol

from ..core import EntityType, tokenize
from ..wiki import CategoryGraph, Page
from .lemma import Lemmatizer, RuleLemmatizer


class UntypedPageError(ValueError):
    def __init__(self, title: str):
        super().__init__(f"page {title!r} has no alive typed category")
        self.title = title


class TypeScorer(Protocol):
    def score(self, first_sentence: str, candidate: EntityType) -> float: ...


#: Lemma-form cue words per type for the stub scorer.
TYPE_KEYWORDS: dict[EntityType, tuple[str, ...]] = {
    EntityType.ALGORITHM: ("algorithm", "procedure", "method", "sort", "search"),
    EntityType.APPLICATION: ("application", "program", "software", "app", "tool"),
    EntityType.ARCHITECTURE: ("architecture", "microarchitecture", "processor", "chip", "design"),
    EntityType.DATA_STRUCTURE: ("structure", "array", "tree", "table", "data"),
    EntityType.DEVICE: ("device", "hardware", "phone", "tablet", "peripheral"),
    EntityType.ERROR_NAME: ("error", "bug", "exception", "failure", "fault"),
    EntityType.GENERAL_CONCEPT: ("concept", "paradigm", "technique", "principle", "practice"),
    EntityType.LANGUAGE: ("language", "syntax", "compiler", "programming", "dialect"),
    EntityType.LIBRARY: ("library", "framework", "package", "toolkit", "api"),
    EntityType.LICENSE: ("license", "copyright", "legal", "term", "agreement"),
    EntityType.OPERATING_SYSTEM: ("operating", "system", "kernel", "distribution", "unix"),
    EntityType.PROTOCOL: ("protocol", "standard", "communication", "network", "specification"),
}


@dataclass
class StubScorer:
    """1 / (1 + overlap between the candidate's cue words and the sentence
    lemmas); deterministic, lower = more plausible."""

    lemmatizer: Lemmatizer = field(default_factory=RuleLemmatizer)

    def score(self, first_sentence: str, candidate: EntityType) -> float:
        lemmas = {self.lemmatizer.lemma(t.surface) for t in tokenize(first_sentence)}
        hits = sum(1 for cue in TYPE_KEYWORDS[candidate] if cue in lemmas)
        return 1.0 / (1.0 + hits)


class ExternalProcessScorer:
    """Scorer backed by a subprocess speaking the line protocol.

    One request per line: the first sentence (tabs and newlines collapsed
    to spaces), a tab, the candidate's canonical type string. The process
    answers with one float per line.
    """

    def __init__(self, command: list[str]):
        self._proc = subprocess.Popen(
            command,
            stdin=subprocess.PIPE,
            stdout=subprocess.PIPE,
            text=True,
            bufsize=1,
        )

    def score(self, first_sentence: str, candidate: EntityType) -> float:
        normalized = " ".join(first_sentence.split())
        assert self._proc.stdin is not None and self._proc.stdout is not None
        self._proc.stdin.write(f"{normalized}\t{candidate.value}\n")
        self._proc.stdin.flush()
        answer = self._proc.stdout.readline()
        if not answer:
            raise RuntimeError("external scorer closed its output")
        return float(answer.strip())

    def close(self) -> None:
        if self._proc.stdin is not None:
            self._proc.stdin.close()
        self._proc.wait(timeout=10)

    def __enter__(self) -> "ExternalProcessScorer":
        return self

    def __exit__(self, *exc_info) -> None:
        self.close()


@dataclass(frozen=True)
class TypeInference:
    type: EntityType
    stage: int  # 1 = unique deepest, 2 = majority, 3 = scorer
    candidates: tuple[str, ...]  # categories considered at the final stage


def infer_entity_type(
    page: Page,
    graph: CategoryGraph,
    category_types: dict[str, EntityType],
    scorer: TypeScorer,
    first_sentence: str,
) -> TypeInference:
    typed = [
        c
        for c in page.categories
        if graph.is_alive(c) and c in category_types
    ]
    if not typed:
        raise UntypedPageError(page.title)

    deepest_depth = max(graph.depth[c] for c in typed)
    deepest = [c for c in typed if graph.depth[c] == deepest_depth]
    if len(deepest) == 1:
        return TypeInference(category_types[deepest[0]], 1, tuple(deepest))

    votes: dict[EntityType, int] = {}
    for category in deepest:
        votes[category_types[category]] = votes.get(category_types[category], 0) + 1
    top = max(votes.values())
    tied = sorted((t for t, n in votes.items() if n == top), key=lambda t: t.value)
    if len(tied) == 1:
        return TypeInference(tied[0], 2, tuple(sorted(deepest)))

    scores = {t: scorer.score(first_sentence, t) for t in tied}
    best = min(scores.values())
    winner = sorted(t.value for t, s in scores.items() if s == best)[0]
    return TypeInference(EntityType(winner), 3, tuple(sorted(deepest)))
