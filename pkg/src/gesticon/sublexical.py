"""Extraction of sub-lexical properties from a normalized keypoint sequence.

Three properties are read off per hand: where the hand starts and ends
(quadrant buckets of the shoulder frame), what shape the hand makes at
the start and end of articulation (scale-normalized pairwise landmark
distances), and how the wrist travels in between (an arc-length
resampled, mean-centered trajectory).

Descriptors carry a provenance tag: "native-geometric" for vectors
computed here, "imported" for externally supplied embeddings loaded via
parse_embedding_lines.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DegenerateHand,
    InconsistentDimension,
    MalformedLine,
    MissingPosePoint,
    NoHands,
    NoWristData,
)
from .keypoints import Landmark, NormalizedSequence

NATIVE = "native-geometric"
IMPORTED = "imported"
PROVENANCES = (NATIVE, IMPORTED)

HAND_LANDMARK_COUNT = 21
DEFAULT_RESAMPLE_LEN = 32

# quadrant encoding: 0 upper-left, 1 upper-right, 2 lower-left, 3 lower-right
BUCKET_UPPER_LEFT = 0
BUCKET_UPPER_RIGHT = 1
BUCKET_LOWER_LEFT = 2
BUCKET_LOWER_RIGHT = 3


@dataclass(frozen=True)
class HandshapeDescriptor:
    vector: tuple[float, ...]
    provenance: str = NATIVE


@dataclass(frozen=True)
class MovementDescriptor:
    vector: tuple[float, ...]
    provenance: str = NATIVE


@dataclass(frozen=True)
class HandProfile:
    start_bucket: int
    end_bucket: int
    initial_handshape: HandshapeDescriptor
    final_handshape: HandshapeDescriptor
    movement: MovementDescriptor


@dataclass(frozen=True)
class SubLexicalProfile:
    left: HandProfile | None
    right: HandProfile | None

    def hands(self) -> dict[str, HandProfile]:
        out = {}
        if self.left is not None:
            out["left"] = self.left
        if self.right is not None:
            out["right"] = self.right
        return out


def _lower_median(start: int, stop: int) -> int:
    # lower median of the index range [start, stop)
    return start + (stop - start - 1) // 2


def select_keyframes(n_frames: int) -> tuple[int, int]:
    """Indices of the initial and final articulation frames.

    The clip splits in half at m = n//2. The final frame is the lower
    median of the second half [m, n); the initial frame is the lower
    median of the second half of the first half, i.e. of [m//2, m). A
    single-frame clip uses frame 0 for both.
    """
    if n_frames < 1:
        raise ValueError("n_frames must be >= 1")
    if n_frames == 1:
        return (0, 0)
    mid = n_frames // 2
    final = _lower_median(mid, n_frames)
    initial = _lower_median(mid // 2, mid)
    return (initial, final)


def bucket_location(x: float, y: float) -> int:
    """Quadrant bucket of a shoulder-frame point.

    Points on an axis resolve upward/rightward: x >= 0 is the right
    column, y >= 0 the upper row.
    """
    if y >= 0.0:
        return BUCKET_UPPER_RIGHT if x >= 0.0 else BUCKET_UPPER_LEFT
    return BUCKET_LOWER_RIGHT if x >= 0.0 else BUCKET_LOWER_LEFT


def hand_descriptor(landmarks: tuple[Landmark, ...]) -> HandshapeDescriptor:
    """Scale-normalized pairwise distances over the 21 hand landmarks.

    All C(21,2) = 210 Euclidean distances in 2-D, ordered
    lexicographically over index pairs and divided by the largest, so
    the result is invariant to translation, rotation and uniform scale.
    """
    if len(landmarks) != HAND_LANDMARK_COUNT:
        raise ValueError(f"expected {HAND_LANDMARK_COUNT} landmarks, got {len(landmarks)}")
    pts = np.array([(lm.x, lm.y) for lm in landmarks], dtype=float)
    i, j = np.triu_indices(HAND_LANDMARK_COUNT, k=1)  # lexicographic pair order
    dists = np.hypot(pts[i, 0] - pts[j, 0], pts[i, 1] - pts[j, 1])
    max_dist = dists.max()
    if max_dist == 0.0:
        raise DegenerateHand("all 21 hand landmarks coincide")
    return HandshapeDescriptor(vector=tuple(float(d) for d in dists / max_dist))


def _resample_polyline(points: np.ndarray, n_points: int) -> np.ndarray:
    """Resample a polyline to n_points uniformly spaced by arc length."""
    seg = np.hypot(np.diff(points[:, 0]), np.diff(points[:, 1]))
    arc = np.concatenate([[0.0], np.cumsum(seg)])
    total = arc[-1]
    if total == 0.0:
        return np.repeat(points[:1], n_points, axis=0)
    targets = np.linspace(0.0, total, n_points)
    x = np.interp(targets, arc, points[:, 0])
    y = np.interp(targets, arc, points[:, 1])
    return np.column_stack([x, y])


def extract_trajectory(
    seq: NormalizedSequence,
    hand: str,
    resample_len: int = DEFAULT_RESAMPLE_LEN,
) -> MovementDescriptor:
    """Wrist path of the chosen hand as a fixed-length centered vector.

    The wrist position is taken from every frame where the pose point
    exists, resampled to resample_len points by arc length, flattened
    to (x0, y0, x1, y1, ...) and mean-centered per axis. Raises
    NoWristData if the wrist appears in no frame.
    """
    if hand not in ("left", "right"):
        raise ValueError(f"hand must be 'left' or 'right', got {hand!r}")
    wrist_name = f"{hand}_wrist"
    path = [
        (frame.pose[wrist_name].x, frame.pose[wrist_name].y)
        for frame in seq.frames
        if wrist_name in frame.pose
    ]
    if not path:
        raise NoWristData(f"{wrist_name} present in no frame of {seq.gesture_id!r}")
    pts = np.asarray(path, dtype=float)
    if np.all(pts == pts[0]):
        # stationary wrist: mean-centering a constant path is exactly zero
        return MovementDescriptor(vector=(0.0,) * (2 * resample_len))
    resampled = _resample_polyline(pts, resample_len)
    centered = resampled - resampled.mean(axis=0)
    return MovementDescriptor(vector=tuple(float(v) for v in centered.ravel()))


def extract_profile(
    seq: NormalizedSequence,
    resample_len: int = DEFAULT_RESAMPLE_LEN,
) -> SubLexicalProfile:
    """Full sub-lexical profile of a normalized sequence.

    A hand counts as present iff its 21-landmark list exists at both
    keyframe indices. Start/end buckets are read from that hand's wrist
    at the same two indices. Raises NoHands when neither hand is
    present.
    """
    initial_idx, final_idx = select_keyframes(len(seq.frames))
    profiles: dict[str, HandProfile | None] = {"left": None, "right": None}
    for hand in ("left", "right"):
        first = seq.frames[initial_idx].hand(hand)
        last = seq.frames[final_idx].hand(hand)
        if first is None or last is None:
            continue
        wrist_name = f"{hand}_wrist"
        buckets = []
        for idx in (initial_idx, final_idx):
            frame = seq.frames[idx]
            if wrist_name not in frame.pose:
                raise MissingPosePoint(f"frame {idx}: {wrist_name!r} absent")
            wrist = frame.pose[wrist_name]
            buckets.append(bucket_location(wrist.x, wrist.y))
        profiles[hand] = HandProfile(
            start_bucket=buckets[0],
            end_bucket=buckets[1],
            initial_handshape=hand_descriptor(first),
            final_handshape=hand_descriptor(last),
            movement=extract_trajectory(seq, hand, resample_len),
        )
    if profiles["left"] is None and profiles["right"] is None:
        raise NoHands(f"no hand observed at keyframes of {seq.gesture_id!r}")
    return SubLexicalProfile(left=profiles["left"], right=profiles["right"])


# -- imported embeddings --

_SLOTS = ("initial", "final", "movement")
_HANDS = {"L": "left", "R": "right"}


def parse_embedding_lines(text: str) -> dict[tuple[str, str, str], tuple[float, ...]]:
    """Parse an import-embeddings file.

    One vector per line: gesture_id, hand (L|R), slot
    (initial|final|movement), then the vector components separated by
    spaces. All vectors of one slot must share a dimension.
    """
    table: dict[tuple[str, str, str], tuple[float, ...]] = {}
    slot_dims: dict[str, int] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        parts = line.split()
        if len(parts) < 4:
            raise MalformedLine(f"line {lineno}: expected id, hand, slot and values")
        gesture_id, hand_code, slot = parts[0], parts[1], parts[2]
        if hand_code not in _HANDS:
            raise MalformedLine(f"line {lineno}: hand must be L or R, got {hand_code!r}")
        if slot not in _SLOTS:
            raise MalformedLine(f"line {lineno}: slot must be one of {_SLOTS}, got {slot!r}")
        try:
            vector = tuple(float(p) for p in parts[3:])
        except ValueError as exc:
            raise MalformedLine(f"line {lineno}: {exc}") from exc
        dim = slot_dims.setdefault(slot, len(vector))
        if len(vector) != dim:
            raise InconsistentDimension(
                f"line {lineno}: slot {slot!r} has dimension {dim}, got {len(vector)}"
            )
        table[(gesture_id, _HANDS[hand_code], slot)] = vector
    return table


def apply_embeddings(
    profile: SubLexicalProfile,
    gesture_id: str,
    table: dict[tuple[str, str, str], tuple[float, ...]],
) -> SubLexicalProfile:
    """Override a profile's descriptors with imported vectors where present."""

    def updated(hand: str, hp: HandProfile | None) -> HandProfile | None:
        if hp is None:
            return None
        initial = table.get((gesture_id, hand, "initial"))
        final = table.get((gesture_id, hand, "final"))
        movement = table.get((gesture_id, hand, "movement"))
        return HandProfile(
            start_bucket=hp.start_bucket,
            end_bucket=hp.end_bucket,
            initial_handshape=(
                HandshapeDescriptor(initial, IMPORTED) if initial is not None else hp.initial_handshape
            ),
            final_handshape=(
                HandshapeDescriptor(final, IMPORTED) if final is not None else hp.final_handshape
            ),
            movement=(
                MovementDescriptor(movement, IMPORTED) if movement is not None else hp.movement
            ),
        )

    return SubLexicalProfile(
        left=updated("left", profile.left),
        right=updated("right", profile.right),
    )
