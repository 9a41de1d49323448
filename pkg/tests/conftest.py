"""Shared builders for keypoint sequences, profiles and corpora."""

from __future__ import annotations

import json
import math

import numpy as np
import pytest

from gesticon.corpus import GestureRecord, build_corpus
from gesticon.keypoints import FrameSequence, Landmark, PoseFrame
from gesticon.sublexical import (
    HandProfile,
    HandshapeDescriptor,
    MovementDescriptor,
    SubLexicalProfile,
)
from gesticon.wordvec import WordVectorTable

BASE_POSE = {
    "nose": (0.5, 0.25),
    "left_eye": (0.55, 0.22),
    "right_eye": (0.45, 0.22),
    "left_shoulder": (0.65, 0.4),
    "right_shoulder": (0.35, 0.4),
    "left_elbow": (0.7, 0.55),
    "right_elbow": (0.3, 0.55),
    "left_wrist": (0.72, 0.7),
    "right_wrist": (0.28, 0.7),
}


def make_pose(**overrides) -> dict[str, Landmark]:
    pose = dict(BASE_POSE)
    pose.update(overrides)
    return {name: Landmark(*xy) if not isinstance(xy, Landmark) else xy for name, xy in pose.items()}


def make_hand(center=(0.3, 0.6), spread=0.05, seed=None) -> tuple[Landmark, ...]:
    """21 hand landmarks scattered around a center point."""
    rng = np.random.default_rng(0 if seed is None else seed)
    pts = rng.uniform(-spread, spread, size=(21, 2)) + np.asarray(center)
    return tuple(Landmark(float(x), float(y)) for x, y in pts)


def make_frame(pose=None, left_hand=None, right_hand=None) -> PoseFrame:
    return PoseFrame(pose=pose or make_pose(), left_hand=left_hand, right_hand=right_hand)


def make_sequence(frames, gesture_id="g-test", word="widget") -> FrameSequence:
    return FrameSequence(gesture_id=gesture_id, word=word, frames=tuple(frames))


def sequence_json(n_frames=4, gesture_id="g-test", word="widget", right_hand=True) -> str:
    """A minimal valid gesture document with an optional right hand."""
    frames = []
    for i in range(n_frames):
        pose = {name: [x, y + 0.001 * i] for name, (x, y) in BASE_POSE.items()}
        frame = {"pose": pose}
        if right_hand:
            frame["right_hand"] = [
                [0.28 + 0.01 * (k % 5), 0.68 + 0.01 * (k // 5)] for k in range(21)
            ]
        frames.append(frame)
    return json.dumps({"gesture_id": gesture_id, "word": word, "fps": 30, "frames": frames})


def make_hand_profile(
    start_bucket=1,
    end_bucket=1,
    initial=(3.0, 4.0),
    final=(3.0, 4.0),
    movement=(1.0, 1.0, 1.0, 1.0),
    provenance="imported",
) -> HandProfile:
    return HandProfile(
        start_bucket=start_bucket,
        end_bucket=end_bucket,
        initial_handshape=HandshapeDescriptor(tuple(map(float, initial)), provenance),
        final_handshape=HandshapeDescriptor(tuple(map(float, final)), provenance),
        movement=MovementDescriptor(tuple(map(float, movement)), provenance),
    )


def one_hand_profile(side="right", **kwargs) -> SubLexicalProfile:
    hp = make_hand_profile(**kwargs)
    if side == "right":
        return SubLexicalProfile(left=None, right=hp)
    return SubLexicalProfile(left=hp, right=None)


def make_record(record_id, word, profile, rating=None, source="test") -> GestureRecord:
    return GestureRecord(id=record_id, word=word, profile=profile,
                         iconicity_rating=rating, source=source)


def unit_vector_with_cosine(reference: np.ndarray, target_cos: float) -> np.ndarray:
    """A vector whose cosine with `reference` is target_cos (within float error)."""
    ref = np.asarray(reference, dtype=float)
    ref = ref / np.linalg.norm(ref)
    # any direction orthogonal to ref
    probe = np.zeros_like(ref)
    probe[int(np.argmin(np.abs(ref)))] = 1.0
    ortho = probe - np.dot(probe, ref) * ref
    ortho = ortho / np.linalg.norm(ortho)
    return target_cos * ref + math.sqrt(max(0.0, 1.0 - target_cos**2)) * ortho


def random_profile(rng: np.random.Generator, dim=4, sides=("left", "right")) -> SubLexicalProfile:
    """Random profile with at least one hand; descriptors are random nonzero vectors."""

    def vec():
        v = rng.normal(size=dim)
        while not np.any(v):
            v = rng.normal(size=dim)
        return tuple(float(x) for x in v)

    def hand():
        return HandProfile(
            start_bucket=int(rng.integers(0, 4)),
            end_bucket=int(rng.integers(0, 4)),
            initial_handshape=HandshapeDescriptor(vec(), "imported"),
            final_handshape=HandshapeDescriptor(vec(), "imported"),
            movement=MovementDescriptor(vec(), "imported"),
        )

    has_left = "left" in sides and rng.random() < 0.5
    has_right = "right" in sides and (rng.random() < 0.8 or not has_left)
    if not (has_left or has_right):
        has_right = True
    return SubLexicalProfile(
        left=hand() if has_left else None,
        right=hand() if has_right else None,
    )


def make_table(entries: dict[str, tuple[float, ...]]) -> WordVectorTable:
    dims = {len(v) for v in entries.values()}
    assert len(dims) == 1
    return WordVectorTable(dimension=dims.pop(), entries={k: tuple(map(float, v)) for k, v in entries.items()})


@pytest.fixture
def simple_corpus():
    """Three rated one-handed records sharing descriptor dimensions."""
    records = [
        make_record("g1", "alpha", one_hand_profile(), rating=5.0),
        make_record("g2", "beta", one_hand_profile(initial=(4.0, 3.0)), rating=3.5),
        make_record("g3", "gamma", one_hand_profile(movement=(2.0, 0.0, 0.0, 0.0)), rating=6.0),
    ]
    return build_corpus(records)
