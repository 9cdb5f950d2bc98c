"""Small trainable token tagger with dropout-perturbed forward passes.

Architecture: embedding -> width-3 windowed feedforward context encoder
(tanh) -> per-token linear classifier -> row-wise softmax. Dropout acts at
two sites, after the embedding and after the encoder, using inverted
scaling (activations divided by 1 - rate at train time), so deterministic
forwards need no rescaling.

All math is float64. Parameters are exposed as one flat vector in the
fixed order [embedding, encoder weight, encoder bias, classifier weight,
classifier bias], each piece raveled C-order.

Parameter count is an exact function of the descriptor:

    V*E + (3*E)*H + H + H*L + L

with V the vocab size, E the embedding width, H the encoder width and L
the label-space size.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Sequence

import numpy as np

from ..core import N_LABELS


@dataclass(frozen=True)
class ArchDescriptor:
    vocab_size: int
    embed_dim: int = 32
    hidden_dim: int = 64
    window: int = 3
    n_labels: int = N_LABELS
    dropout_rate: float = 0.10
    init_seed: int = 0
    init_scale: float = 0.08

    def __post_init__(self) -> None:
        if self.window != 3:
            raise ValueError("only a width-3 context window is supported")
        if not 0.0 <= self.dropout_rate < 1.0:
            raise ValueError(f"dropout_rate must be in [0,1), got {self.dropout_rate}")

    @property
    def parameter_count(self) -> int:
        v, e, h, l = self.vocab_size, self.embed_dim, self.hidden_dim, self.n_labels
        return v * e + 3 * e * h + h + h * l + l


@dataclass
class ForwardCache:
    """Intermediates of one stochastic or deterministic forward pass."""

    ids: np.ndarray          # (B, T) int
    valid: np.ndarray        # (B, T, 1) float 0/1
    mask_embed: np.ndarray | None
    mask_hidden: np.ndarray | None
    x_dropped: np.ndarray    # (B, T, E) post-dropout embeddings
    context: np.ndarray      # (B, T, 3E)
    hidden: np.ndarray       # (B, T, H) tanh output, pre-dropout
    hidden_dropped: np.ndarray
    probs: np.ndarray        # (B, T, L)


def _shift_back(x: np.ndarray) -> np.ndarray:
    """out[:, t] = x[:, t-1], zeros enter at t = 0."""
    out = np.zeros_like(x)
    out[:, 1:] = x[:, :-1]
    return out


def _shift_fwd(x: np.ndarray) -> np.ndarray:
    """out[:, t] = x[:, t+1], zeros enter at the end."""
    out = np.zeros_like(x)
    out[:, :-1] = x[:, 1:]
    return out


def softmax_rows(logits: np.ndarray) -> np.ndarray:
    shifted = logits - logits.max(axis=-1, keepdims=True)
    exp = np.exp(shifted)
    return exp / exp.sum(axis=-1, keepdims=True)


class TokenTagger:
    """Token classifier over a fixed vocabulary and the 25-label space."""

    def __init__(self, arch: ArchDescriptor):
        self.arch = arch
        rng = np.random.default_rng(arch.init_seed)
        scale = arch.init_scale
        v, e, h, l = arch.vocab_size, arch.embed_dim, arch.hidden_dim, arch.n_labels
        self.embedding = rng.uniform(-scale, scale, size=(v, e))
        self.w_enc = rng.uniform(-scale, scale, size=(3 * e, h))
        self.b_enc = rng.uniform(-scale, scale, size=(h,))
        self.w_cls = rng.uniform(-scale, scale, size=(h, l))
        self.b_cls = rng.uniform(-scale, scale, size=(l,))

    # -- flat parameter view ------------------------------------------------

    @property
    def parameter_count(self) -> int:
        return self.arch.parameter_count

    def _pieces(self) -> list[np.ndarray]:
        return [self.embedding, self.w_enc, self.b_enc, self.w_cls, self.b_cls]

    def get_flat(self) -> np.ndarray:
        return np.concatenate([p.ravel() for p in self._pieces()])

    def set_flat(self, vector: np.ndarray) -> None:
        if vector.shape != (self.parameter_count,):
            raise ValueError(
                f"expected {self.parameter_count} parameters, got {vector.shape}"
            )
        offset = 0
        for piece in self._pieces():
            size = piece.size
            piece[...] = vector[offset : offset + size].reshape(piece.shape)
            offset += size

    def clone(self) -> "TokenTagger":
        twin = TokenTagger(self.arch)
        twin.set_flat(self.get_flat())
        return twin

    # -- forward ------------------------------------------------------------

    def _pad(self, sentences: Sequence[Sequence[int]]) -> tuple[np.ndarray, np.ndarray]:
        batch = len(sentences)
        longest = max((len(s) for s in sentences), default=0)
        ids = np.zeros((batch, max(longest, 1)), dtype=np.int64)
        valid = np.zeros((batch, max(longest, 1), 1))
        for i, sentence in enumerate(sentences):
            if len(sentence) == 0:
                continue
            row = np.asarray(sentence, dtype=np.int64)
            if row.min() < 0 or row.max() >= self.arch.vocab_size:
                raise ValueError(
                    f"token id out of range [0,{self.arch.vocab_size}) in sentence {i}"
                )
            ids[i, : len(row)] = row
            valid[i, : len(row), 0] = 1.0
        return ids, valid

    def forward_batch_cached(
        self,
        sentences: Sequence[Sequence[int]],
        stochastic: bool = False,
        pass_seed: int = 0,
    ) -> ForwardCache:
        """One forward pass over a batch; padded rows carry no information.

        With ``stochastic`` the two dropout masks are drawn from
        ``pass_seed`` alone, so identical inputs and seed reproduce the
        pass exactly, and different seeds give different submodels.
        """
        ids, valid = self._pad(sentences)
        x = self.embedding[ids] * valid

        mask_embed = mask_hidden = None
        rate = self.arch.dropout_rate
        if stochastic and rate > 0.0:
            rng = np.random.default_rng(pass_seed)
            keep = 1.0 - rate
            mask_embed = (rng.random(x.shape) >= rate) / keep
            x = x * mask_embed

        context = np.concatenate([_shift_back(x), x, _shift_fwd(x)], axis=-1)
        hidden = np.tanh(context @ self.w_enc + self.b_enc)

        hidden_dropped = hidden
        if stochastic and rate > 0.0:
            keep = 1.0 - rate
            mask_hidden = (rng.random(hidden.shape) >= rate) / keep
            hidden_dropped = hidden * mask_hidden

        logits = hidden_dropped @ self.w_cls + self.b_cls
        probs = softmax_rows(logits)
        return ForwardCache(
            ids=ids,
            valid=valid,
            mask_embed=mask_embed,
            mask_hidden=mask_hidden,
            x_dropped=x,
            context=context,
            hidden=hidden,
            hidden_dropped=hidden_dropped,
            probs=probs,
        )

    def forward(
        self,
        token_ids: Sequence[int],
        stochastic: bool = False,
        pass_seed: int = 0,
    ) -> np.ndarray:
        """Per-token label distributions for one sentence, shape (n, L)."""
        cache = self.forward_batch_cached([token_ids], stochastic, pass_seed)
        return cache.probs[0, : len(token_ids)]

    # -- backward -----------------------------------------------------------

    def backward(self, cache: ForwardCache, d_probs: np.ndarray) -> np.ndarray:
        """Gradient of a scalar loss w.r.t. the flat parameter vector.

        ``d_probs`` is the loss gradient w.r.t. the softmax output, already
        zeroed at padded positions.
        """
        probs = cache.probs
        inner = (d_probs * probs).sum(axis=-1, keepdims=True)
        d_logits = probs * (d_probs - inner)

        d_w_cls = np.einsum("bth,btl->hl", cache.hidden_dropped, d_logits)
        d_b_cls = d_logits.sum(axis=(0, 1))
        d_hidden_dropped = d_logits @ self.w_cls.T
        if cache.mask_hidden is not None:
            d_hidden = d_hidden_dropped * cache.mask_hidden
        else:
            d_hidden = d_hidden_dropped
        d_pre = d_hidden * (1.0 - cache.hidden**2)

        d_w_enc = np.einsum("btc,bth->ch", cache.context, d_pre)
        d_b_enc = d_pre.sum(axis=(0, 1))
        d_context = d_pre @ self.w_enc.T

        e = self.arch.embed_dim
        d_left, d_mid, d_right = d_context[..., :e], d_context[..., e : 2 * e], d_context[..., 2 * e :]
        d_x = _shift_fwd(d_left) + d_mid + _shift_back(d_right)
        if cache.mask_embed is not None:
            d_x = d_x * cache.mask_embed
        d_x = d_x * cache.valid

        d_embedding = np.zeros_like(self.embedding)
        np.add.at(d_embedding, cache.ids.ravel(), d_x.reshape(-1, e))

        return np.concatenate(
            [
                d_embedding.ravel(),
                d_w_enc.ravel(),
                d_b_enc.ravel(),
                d_w_cls.ravel(),
                d_b_cls.ravel(),
            ]
        )


def spawn_siblings(arch: ArchDescriptor, n: int, base_seed: int) -> list[TokenTagger]:
    """n same-architecture models with different initialization seeds."""
    return [
        TokenTagger(replace(arch, init_seed=base_seed + 7919 * i)) for i in range(n)
    ]
