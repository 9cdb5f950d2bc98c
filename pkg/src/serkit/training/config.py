"""Training hyperparameters.

Dataclass defaults mirror the reference setup for large pretrained
taggers (learning rate 1e-5, batch 16, 30 epochs, 10% warm-up, alpha 10,
K = 3, Adam). ``TrainConfig.desk_scale()`` swaps in settings suited to
the small CPU reference model: 10 epochs at learning rate 1e-3.
"""

from __future__ import annotations

from dataclasses import dataclass, replace


@dataclass(frozen=True)
class TrainConfig:
    learning_rate: float = 1e-5
    batch_size: int = 16
    epochs: int = 30
    warmup_fraction: float = 0.10
    alpha: float = 10.0
    k: int = 3
    optimizer: str = "adam"
    seed: int = 0
    symmetric_kl: bool = False
    warmup_single_pass: bool = False  # speed variant; default keeps K passes

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError("k must be >= 1")
        if self.alpha < 0:
            raise ValueError("alpha must be nonnegative")
        if not 0.0 <= self.warmup_fraction < 1.0:
            raise ValueError("warmup_fraction must be in [0, 1)")
        if self.optimizer != "adam":
            raise ValueError(f"unsupported optimizer {self.optimizer!r}")
        if self.batch_size < 1 or self.epochs < 1:
            raise ValueError("batch_size and epochs must be >= 1")

    @classmethod
    def desk_scale(cls, **overrides) -> "TrainConfig":
        base = cls(learning_rate=1e-3, epochs=10)
        return replace(base, **overrides) if overrides else base

    def vanilla(self) -> "TrainConfig":
        """The degenerate configuration: one pass, no divergence term."""
        return replace(self, k=1, alpha=0.0)


@dataclass(frozen=True)
class CoRegConfig(TrainConfig):
    """Co-regularization: N same-architecture models, different inits."""

    n_models: int = 2

    def __post_init__(self) -> None:
        super().__post_init__()
        if self.n_models < 2:
            raise ValueError("co-regularization needs at least 2 models")
