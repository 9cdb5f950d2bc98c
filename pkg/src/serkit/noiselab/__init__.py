"""Label-noise injection, audit statistics and synthetic corpora."""

from .audit import AuditSample, cohen_kappa, draw_audit_sample, sample_size
from .noise import (
    Change,
    ChangeLog,
    NoiseSpec,
    inject_noise,
    label_disagreement,
    replay_changelog,
)
from .synth import gen_synthetic_corpus

__all__ = [
    "AuditSample",
    "Change",
    "ChangeLog",
    "NoiseSpec",
    "cohen_kappa",
    "draw_audit_sample",
    "gen_synthetic_corpus",
    "inject_noise",
    "label_disagreement",
    "replay_changelog",
    "sample_size",
]
