"""Adam optimizer over a flat parameter vector."""

from __future__ import annotations

import numpy as np


class Adam:
    def __init__(
        self,
        n_params: int,
        learning_rate: float,
        beta1: float = 0.9,
        beta2: float = 0.999,
        epsilon: float = 1e-8,
    ):
        self.learning_rate = learning_rate
        self.beta1 = beta1
        self.beta2 = beta2
        self.epsilon = epsilon
        self.m = np.zeros(n_params)
        self.v = np.zeros(n_params)
        self.t = 0

    def update(self, params: np.ndarray, gradient: np.ndarray) -> np.ndarray:
        """One bias-corrected step; returns the new parameter vector."""
        self.t += 1
        self.m = self.beta1 * self.m + (1.0 - self.beta1) * gradient
        self.v = self.beta2 * self.v + (1.0 - self.beta2) * gradient**2
        m_hat = self.m / (1.0 - self.beta1**self.t)
        v_hat = self.v / (1.0 - self.beta2**self.t)
        return params - self.learning_rate * m_hat / (np.sqrt(v_hat) + self.epsilon)

    @property
    def state_bytes(self) -> int:
        return self.m.nbytes + self.v.nbytes
