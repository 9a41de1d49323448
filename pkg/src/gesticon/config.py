"""Pipeline configuration: one place for the tunable constants.

Config files are JSON objects; unknown keys are rejected. Defaults
match the reference operating point: handshape prefilter 0.8, bands
[2.4, inf) and [1.7, 2.4), word-similarity threshold 0.3. A null band
upper bound means unbounded.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from .assigner import DEFAULT_TAU, AssignConfig
from .errors import MalformedConfig
from .neighbors import DEFAULT_BANDS, DEFAULT_HANDSHAPE_PREFILTER, RoundConfig
from .sublexical import DEFAULT_RESAMPLE_LEN

_KEYS = {
    "tau",
    "handshape_prefilter",
    "bands",
    "clamp_floor",
    "resample_len",
    "wordvec_path",
    "corpus_path",
}


@dataclass(frozen=True)
class PipelineConfig:
    tau: float = DEFAULT_TAU
    handshape_prefilter: float = DEFAULT_HANDSHAPE_PREFILTER
    bands: tuple[tuple[float, float], ...] = DEFAULT_BANDS
    clamp_floor: float = 1.0
    resample_len: int = DEFAULT_RESAMPLE_LEN
    wordvec_path: str | None = None
    corpus_path: str | None = None

    def round_config(self) -> RoundConfig:
        return RoundConfig(handshape_prefilter=self.handshape_prefilter, bands=self.bands)

    def assign_config(self) -> AssignConfig:
        return AssignConfig(tau=self.tau, rounds=self.round_config(), clamp_floor=self.clamp_floor)


def _number(doc: dict, key: str, default: float) -> float:
    value = doc.get(key, default)
    if not isinstance(value, (int, float)) or isinstance(value, bool):
        raise MalformedConfig(f"{key!r} must be a number")
    return float(value)


def _bands(doc: dict) -> tuple[tuple[float, float], ...]:
    raw = doc.get("bands")
    if raw is None:
        return DEFAULT_BANDS
    if not isinstance(raw, list) or not raw:
        raise MalformedConfig("'bands' must be a nonempty array of [lower, upper] pairs")
    bands = []
    for i, pair in enumerate(raw):
        if not isinstance(pair, list) or len(pair) != 2:
            raise MalformedConfig(f"bands[{i}] must be a [lower, upper] pair")
        lower, upper = pair
        if not isinstance(lower, (int, float)) or isinstance(lower, bool):
            raise MalformedConfig(f"bands[{i}]: lower bound must be a number")
        if upper is None:
            upper = math.inf
        elif not isinstance(upper, (int, float)) or isinstance(upper, bool):
            raise MalformedConfig(f"bands[{i}]: upper bound must be a number or null")
        bands.append((float(lower), float(upper)))
    return tuple(bands)


def loads_config(text: str) -> PipelineConfig:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedConfig(f"config is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise MalformedConfig("config must be a JSON object")
    unknown = set(doc) - _KEYS
    if unknown:
        raise MalformedConfig(f"unknown config keys: {sorted(unknown)}")

    resample_len = doc.get("resample_len", DEFAULT_RESAMPLE_LEN)
    if not isinstance(resample_len, int) or isinstance(resample_len, bool) or resample_len < 2:
        raise MalformedConfig("'resample_len' must be an integer >= 2")
    for key in ("wordvec_path", "corpus_path"):
        if key in doc and doc[key] is not None and not isinstance(doc[key], str):
            raise MalformedConfig(f"{key!r} must be a string path")

    try:
        cfg = PipelineConfig(
            tau=_number(doc, "tau", DEFAULT_TAU),
            handshape_prefilter=_number(doc, "handshape_prefilter", DEFAULT_HANDSHAPE_PREFILTER),
            bands=_bands(doc),
            clamp_floor=_number(doc, "clamp_floor", 1.0),
            resample_len=resample_len,
            wordvec_path=doc.get("wordvec_path"),
            corpus_path=doc.get("corpus_path"),
        )
        cfg.assign_config()  # validate band ordering, tau and clamp ranges
    except ValueError as exc:
        raise MalformedConfig(str(exc)) from exc
    return cfg


def load_config(path) -> PipelineConfig:
    with open(path, "r", encoding="utf-8") as fh:
        return loads_config(fh.read())
