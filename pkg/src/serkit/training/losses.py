"""Public home of the training objectives (implementation in objectives.py,
kept package-top-level so the tagger's gradient code can share it without
an import cycle)."""

from ..objectives import (
    PROB_CLAMP,
    DistributionSet,
    TaskLoss,
    agreement_loss,
    divergence_loss,
    task_loss,
)

__all__ = [
    "PROB_CLAMP",
    "DistributionSet",
    "TaskLoss",
    "agreement_loss",
    "divergence_loss",
    "task_loss",
]
