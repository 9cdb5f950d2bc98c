"""Versioned model checkpoints (.npz with a JSON architecture record)."""

from __future__ import annotations

import json
import os
import zipfile
from dataclasses import asdict

import numpy as np

from .model import ArchDescriptor, TokenTagger

CHECKPOINT_FORMAT = "serkit-ckpt-1"


class CheckpointError(RuntimeError):
    pass


def save_checkpoint(model: TokenTagger, path: str | os.PathLike) -> None:
    np.savez(
        path,
        format=np.array(CHECKPOINT_FORMAT),
        arch=np.array(json.dumps(asdict(model.arch))),
        params=model.get_flat(),
    )


def load_checkpoint(path: str | os.PathLike) -> TokenTagger:
    try:
        with np.load(path, allow_pickle=False) as data:
            if "format" not in data:
                raise CheckpointError(f"{path}: not a model checkpoint")
            fmt = str(data["format"])
            if fmt != CHECKPOINT_FORMAT:
                raise CheckpointError(
                    f"{path}: unsupported checkpoint format {fmt!r}, "
                    f"expected {CHECKPOINT_FORMAT!r}"
                )
            arch = ArchDescriptor(**json.loads(str(data["arch"])))
            params = data["params"]
    except (OSError, ValueError, KeyError, zipfile.BadZipFile) as exc:
        raise CheckpointError(f"{path}: cannot load checkpoint: {exc}") from exc
    model = TokenTagger(arch)
    model.set_flat(params)
    return model
