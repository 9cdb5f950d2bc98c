"""Training objectives, procedures and resource metering."""

from .config import CoRegConfig, TrainConfig
from .loop import (
    EpochStats,
    TrainReport,
    derive_seed,
    encode_corpus,
    micro_f1,
    predict_corpus,
    train_co_reg,
    train_self_reg,
    train_vanilla,
)
from .losses import (
    PROB_CLAMP,
    DistributionSet,
    TaskLoss,
    agreement_loss,
    divergence_loss,
    task_loss,
)
from .meter import ResourceReport, resource_meter
from .optim import Adam
from .sweep import KSweepReport, KSweepRow, k_sweep

__all__ = [
    "Adam",
    "CoRegConfig",
    "DistributionSet",
    "EpochStats",
    "KSweepReport",
    "KSweepRow",
    "PROB_CLAMP",
    "ResourceReport",
    "TaskLoss",
    "TrainConfig",
    "TrainReport",
    "agreement_loss",
    "derive_seed",
    "divergence_loss",
    "encode_corpus",
    "k_sweep",
    "micro_f1",
    "predict_corpus",
    "resource_meter",
    "task_loss",
    "train_co_reg",
    "train_self_reg",
    "train_vanilla",
]
