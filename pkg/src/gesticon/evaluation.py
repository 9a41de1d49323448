"""Tolerance-based accuracy of assigned ratings against manual ratings.

Unassigned targets are excluded from scoring; an assigned rating counts
as correct when it lies within the tolerance (default 1.0) of the
manual rating on the 1..7 scale. Accuracy is over scored items only and
is reported as undefined (None) when nothing was scored.
"""

from __future__ import annotations

from dataclasses import dataclass

from .assigner import Assigned, AssignmentResult
from .corpus import RATING_MAX, RATING_MIN
from .errors import MalformedInput, MissingManualRating, RatingOutOfRange

DEFAULT_TOLERANCE = 1.0


@dataclass(frozen=True)
class EvalItem:
    gesture_id: str
    manual: float
    auto: float | None
    correct: bool | None  # None marks an excluded (unassigned) item


@dataclass(frozen=True)
class EvalReport:
    n_targets: int
    n_unassigned: int
    n_correct: int
    tolerance: float
    per_item: tuple[EvalItem, ...]

    @property
    def n_scored(self) -> int:
        return self.n_targets - self.n_unassigned

    @property
    def accuracy(self) -> float | None:
        if self.n_scored == 0:
            return None
        return self.n_correct / self.n_scored


def score(
    assignments: list[tuple[str, AssignmentResult]],
    manual: dict[str, float],
    tolerance: float = DEFAULT_TOLERANCE,
) -> EvalReport:
    """Score batch assignment results against manual ratings.

    Every assignment id must have a manual rating in [1, 7]; raises
    MissingManualRating otherwise.
    """
    items = []
    n_unassigned = 0
    n_correct = 0
    for gesture_id, result in assignments:
        if gesture_id not in manual:
            raise MissingManualRating(gesture_id)
        manual_rating = manual[gesture_id]
        if not RATING_MIN <= manual_rating <= RATING_MAX:
            raise RatingOutOfRange(
                f"manual rating {manual_rating} for {gesture_id!r} outside [{RATING_MIN}, {RATING_MAX}]"
            )
        if isinstance(result, Assigned):
            correct = abs(result.rating - manual_rating) <= tolerance
            n_correct += correct
            items.append(EvalItem(gesture_id, manual_rating, result.rating, bool(correct)))
        else:
            n_unassigned += 1
            items.append(EvalItem(gesture_id, manual_rating, None, None))
    return EvalReport(
        n_targets=len(assignments),
        n_unassigned=n_unassigned,
        n_correct=n_correct,
        tolerance=tolerance,
        per_item=tuple(items),
    )


def parse_manual_ratings(text: str) -> dict[str, float]:
    """Parse a manual-ratings file: one "gesture_id rating" pair per line."""
    ratings: dict[str, float] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        parts = line.split()
        if len(parts) != 2:
            raise MalformedInput(f"line {lineno}: expected 'gesture_id rating'")
        gesture_id, raw = parts
        try:
            rating = float(raw)
        except ValueError as exc:
            raise MalformedInput(f"line {lineno}: {exc}") from exc
        if not RATING_MIN <= rating <= RATING_MAX:
            raise RatingOutOfRange(f"line {lineno}: rating {rating} outside [{RATING_MIN}, {RATING_MAX}]")
        if gesture_id in ratings:
            raise MalformedInput(f"line {lineno}: duplicate gesture id {gesture_id!r}")
        ratings[gesture_id] = rating
    return ratings
