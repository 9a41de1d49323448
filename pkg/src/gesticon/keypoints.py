"""Parsing and shoulder-frame normalization of pose keypoint sequences.

Gesture file format (JSON, one document per gesture):

    {
      "gesture_id": "g-001",
      "word": "algorithm",
      "fps": 30,
      "frames": [
        {
          "pose": {"nose": [x, y], "left_shoulder": [x, y, z], ...},
          "left_hand": [[x, y], ... 21 entries ...],
          "right_hand": null
        }
      ]
    }

Coordinates are arrays [x, y], [x, y, z] or [x, y, z, visibility]; z may
be null when only visibility is recorded. "fps" is informational and not
retained. The nine pose names in REQUIRED_POSE_POINTS must be present in
every frame; hand lists, when present, hold exactly 21 landmarks.

Normalization re-expresses every frame in a signer-centric frame: origin
at the shoulder midpoint, X axis along the left-to-right shoulder line,
unit length one shoulder width, and Y oriented so the nose is at
positive Y. Only x and y are transformed; z and visibility pass through
untouched.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import (
    BadHandArity,
    DegenerateShoulders,
    EmptySequence,
    MalformedInput,
    MissingPosePoint,
    NoseOnAxis,
)

REQUIRED_POSE_POINTS = (
    "nose",
    "left_eye",
    "right_eye",
    "left_shoulder",
    "right_shoulder",
    "left_elbow",
    "right_elbow",
    "left_wrist",
    "right_wrist",
)

_FRAME_KEYS = {"pose", "left_hand", "right_hand"}
_TOP_KEYS = {"gesture_id", "word", "fps", "frames"}


@dataclass(frozen=True)
class Landmark:
    x: float
    y: float
    z: float | None = None
    visibility: float | None = None


@dataclass(frozen=True)
class PoseFrame:
    pose: dict[str, Landmark]
    left_hand: tuple[Landmark, ...] | None = None
    right_hand: tuple[Landmark, ...] | None = None

    def hand(self, side: str) -> tuple[Landmark, ...] | None:
        return self.left_hand if side == "left" else self.right_hand


@dataclass(frozen=True)
class FrameSequence:
    gesture_id: str
    word: str
    frames: tuple[PoseFrame, ...]


@dataclass(frozen=True)
class NormalizedSequence:
    """Same shape as FrameSequence, coordinates in the shoulder frame."""

    gesture_id: str
    word: str
    frames: tuple[PoseFrame, ...]


def _is_finite(value) -> bool:
    return isinstance(value, (int, float)) and not isinstance(value, bool) and value == value and abs(value) != float("inf")


def _parse_landmark(raw, where: str) -> Landmark:
    if not isinstance(raw, list) or not 2 <= len(raw) <= 4:
        raise MalformedInput(f"{where}: landmark must be an array of 2..4 numbers")
    x, y = raw[0], raw[1]
    if not _is_finite(x) or not _is_finite(y):
        raise MalformedInput(f"{where}: x and y must be finite numbers")
    z = raw[2] if len(raw) >= 3 else None
    if z is not None and not _is_finite(z):
        raise MalformedInput(f"{where}: z must be a finite number or null")
    visibility = raw[3] if len(raw) == 4 else None
    if visibility is not None:
        if not _is_finite(visibility) or not 0.0 <= visibility <= 1.0:
            raise MalformedInput(f"{where}: visibility must lie in [0, 1]")
    return Landmark(float(x), float(y), None if z is None else float(z),
                    None if visibility is None else float(visibility))


def _parse_hand(raw, where: str) -> tuple[Landmark, ...] | None:
    if raw is None:
        return None
    if not isinstance(raw, list):
        raise MalformedInput(f"{where}: hand must be an array of landmarks or null")
    if len(raw) != 21:
        raise BadHandArity(f"{where}: hand list has {len(raw)} landmarks, expected 21")
    return tuple(_parse_landmark(lm, f"{where}[{i}]") for i, lm in enumerate(raw))


def _parse_frame(raw, index: int) -> PoseFrame:
    where = f"frame {index}"
    if not isinstance(raw, dict):
        raise MalformedInput(f"{where}: frame must be an object")
    unknown = set(raw) - _FRAME_KEYS
    if unknown:
        raise MalformedInput(f"{where}: unknown keys {sorted(unknown)}")
    pose_raw = raw.get("pose")
    if not isinstance(pose_raw, dict):
        raise MalformedInput(f"{where}: missing or invalid 'pose' object")
    pose = {}
    for name, lm in pose_raw.items():
        pose[name] = _parse_landmark(lm, f"{where}.pose.{name}")
    for name in REQUIRED_POSE_POINTS:
        if name not in pose:
            raise MissingPosePoint(f"{where}: required pose point {name!r} absent")
    return PoseFrame(
        pose=pose,
        left_hand=_parse_hand(raw.get("left_hand"), f"{where}.left_hand"),
        right_hand=_parse_hand(raw.get("right_hand"), f"{where}.right_hand"),
    )


def parse_sequence(raw: bytes | str) -> FrameSequence:
    """Parse and validate one gesture document.

    Raises MalformedInput, MissingPosePoint, BadHandArity or
    EmptySequence on invalid input.
    """
    if isinstance(raw, bytes):
        try:
            raw = raw.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise MalformedInput(f"gesture file is not UTF-8: {exc}") from exc
    try:
        doc = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"gesture file is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise MalformedInput("gesture document must be a JSON object")
    unknown = set(doc) - _TOP_KEYS
    if unknown:
        raise MalformedInput(f"unknown top-level keys {sorted(unknown)}")

    gesture_id = doc.get("gesture_id")
    if not isinstance(gesture_id, str) or not gesture_id:
        raise MalformedInput("'gesture_id' must be a nonempty string")
    word = doc.get("word")
    if not isinstance(word, str) or not word.strip():
        raise MalformedInput("'word' must be a nonempty string")
    word = word.strip().lower()
    fps = doc.get("fps")
    if fps is not None and not _is_finite(fps):
        raise MalformedInput("'fps' must be a number when present")

    frames_raw = doc.get("frames")
    if not isinstance(frames_raw, list):
        raise MalformedInput("'frames' must be an array")
    if not frames_raw:
        raise EmptySequence(f"gesture {gesture_id!r} has zero frames")
    frames = tuple(_parse_frame(f, i) for i, f in enumerate(frames_raw))
    return FrameSequence(gesture_id=gesture_id, word=word, frames=frames)


def _landmark_to_json(lm: Landmark):
    if lm.visibility is not None:
        return [lm.x, lm.y, lm.z, lm.visibility]
    if lm.z is not None:
        return [lm.x, lm.y, lm.z]
    return [lm.x, lm.y]


def serialize_sequence(seq: FrameSequence | NormalizedSequence) -> str:
    """Inverse of parse_sequence: parse_sequence(serialize_sequence(s)) == s."""
    frames = []
    for frame in seq.frames:
        obj = {"pose": {name: _landmark_to_json(lm) for name, lm in frame.pose.items()}}
        if frame.left_hand is not None:
            obj["left_hand"] = [_landmark_to_json(lm) for lm in frame.left_hand]
        if frame.right_hand is not None:
            obj["right_hand"] = [_landmark_to_json(lm) for lm in frame.right_hand]
        frames.append(obj)
    doc = {"gesture_id": seq.gesture_id, "word": seq.word, "frames": frames}
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def _normalize_frame(frame: PoseFrame, index: int) -> PoseFrame:
    left = frame.pose["left_shoulder"]
    right = frame.pose["right_shoulder"]
    dx = right.x - left.x
    dy = right.y - left.y
    width = (dx * dx + dy * dy) ** 0.5
    if width == 0.0:
        raise DegenerateShoulders(f"frame {index}: shoulders coincide")
    mid_x = (left.x + right.x) / 2.0
    mid_y = (left.y + right.y) / 2.0
    # unit X along the shoulder line; Y is one of the two perpendiculars
    ux, uy = dx / width, dy / width
    vx, vy = -uy, ux
    nose = frame.pose["nose"]
    nose_y = (nose.x - mid_x) * vx + (nose.y - mid_y) * vy
    if nose_y == 0.0:
        raise NoseOnAxis(f"frame {index}: nose lies exactly on the shoulder line")
    if nose_y < 0.0:
        vx, vy = -vx, -vy

    def transform(lm: Landmark) -> Landmark:
        px, py = lm.x - mid_x, lm.y - mid_y
        return Landmark(
            x=(px * ux + py * uy) / width,
            y=(px * vx + py * vy) / width,
            z=lm.z,
            visibility=lm.visibility,
        )

    return PoseFrame(
        pose={name: transform(lm) for name, lm in frame.pose.items()},
        left_hand=None if frame.left_hand is None else tuple(transform(lm) for lm in frame.left_hand),
        right_hand=None if frame.right_hand is None else tuple(transform(lm) for lm in frame.right_hand),
    )


def normalize(seq: FrameSequence) -> NormalizedSequence:
    """Re-express every frame in the shoulder frame.

    Per frame: translate the shoulder midpoint to the origin, rotate the
    shoulder line onto the X axis, scale by 1/shoulder-width, and orient
    Y so the nose lands at positive Y. Raises DegenerateShoulders or
    NoseOnAxis when a frame does not determine the transform.
    """
    return NormalizedSequence(
        gesture_id=seq.gesture_id,
        word=seq.word,
        frames=tuple(_normalize_frame(f, i) for i, f in enumerate(seq.frames)),
    )
