"""Versioned JSON persistence for trained models."""

from __future__ import annotations

import json
import os
from typing import TextIO

import numpy as np

from ..errors import ConfigError
from ..taxonomy.encoding import EncoderStats
from .base import LearnerSpec, TrainedModel

MODEL_FORMAT_VERSION = "model/1"


def _encode_value(value):
    if isinstance(value, np.ndarray):
        return {"__array__": value.tolist(), "dtype": str(value.dtype)}
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, dict):
        return {k: _encode_value(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_encode_value(v) for v in value]
    return value


def _decode_value(value):
    if isinstance(value, dict):
        if "__array__" in value:
            return np.array(value["__array__"], dtype=value["dtype"])
        return {k: _decode_value(v) for k, v in value.items()}
    if isinstance(value, list):
        return [_decode_value(v) for v in value]
    return value


def save_model(model: TrainedModel, target: str | os.PathLike | TextIO) -> None:
    if isinstance(target, (str, os.PathLike)):
        with open(target, "w", encoding="utf-8") as handle:
            save_model(model, handle)
        return
    doc = {
        "format_version": MODEL_FORMAT_VERSION,
        "spec": {
            "kind": model.spec.kind,
            "hyperparameters": model.spec.hyperparameters,
            "seed": model.spec.seed,
        },
        "feature_names": list(model.feature_names),
        "encoder_stats": model.encoder_stats.to_obj() if model.encoder_stats else None,
        "parameters": _encode_value(model.parameters),
    }
    json.dump(doc, target, sort_keys=True)
    target.write("\n")


def load_model(source: str | os.PathLike | TextIO) -> TrainedModel:
    if isinstance(source, (str, os.PathLike)):
        with open(source, "r", encoding="utf-8") as handle:
            return load_model(handle)
    doc = json.load(source)
    version = doc.get("format_version")
    if version != MODEL_FORMAT_VERSION:
        raise ConfigError(
            f"unsupported model format version {version!r} (expected {MODEL_FORMAT_VERSION!r})"
        )
    spec = LearnerSpec(
        kind=doc["spec"]["kind"],
        hyperparameters=doc["spec"]["hyperparameters"],
        seed=int(doc["spec"]["seed"]),
    )
    stats = EncoderStats.from_obj(doc["encoder_stats"]) if doc["encoder_stats"] else None
    return TrainedModel(
        spec=spec,
        feature_names=tuple(doc["feature_names"]),
        parameters=_decode_value(doc["parameters"]),
        encoder_stats=stats,
    )
