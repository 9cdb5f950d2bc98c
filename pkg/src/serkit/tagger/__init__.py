"""Trainable token classifier with stochastic forward passes."""

from .checkpoint import CHECKPOINT_FORMAT, CheckpointError, load_checkpoint, save_checkpoint
from .grad import (
    LOSS_AGREEMENT,
    LOSS_TASK,
    LossDefinition,
    LossResult,
    NonFiniteLossError,
    loss_and_gradient,
)
from .model import ArchDescriptor, TokenTagger, softmax_rows, spawn_siblings
from .vocab import PAD_ID, UNK_ID, Vocab, build_vocab, read_vocab, write_vocab

__all__ = [
    "ArchDescriptor",
    "CHECKPOINT_FORMAT",
    "CheckpointError",
    "LOSS_AGREEMENT",
    "LOSS_TASK",
    "LossDefinition",
    "LossResult",
    "NonFiniteLossError",
    "PAD_ID",
    "TokenTagger",
    "UNK_ID",
    "Vocab",
    "build_vocab",
    "load_checkpoint",
    "loss_and_gradient",
    "read_vocab",
    "save_checkpoint",
    "softmax_rows",
    "spawn_siblings",
    "write_vocab",
]
