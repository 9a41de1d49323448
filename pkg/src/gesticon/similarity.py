"""Cosine similarity and the per-property scores composing the congruency score.

A congruency score between two gesture profiles is the sum of three
property similarities (location, handshape, movement), each in [-1, 1],
so the total lives in [-3, 3]. Properties are compared per hand and
averaged over the hands present in both profiles.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DimensionMismatch, NoSharedHands, ZeroVector
from .sublexical import HandProfile, SubLexicalProfile


@dataclass(frozen=True)
class CongruencyScore:
    location_sim: float
    handshape_sim: float
    movement_sim: float

    @property
    def total(self) -> float:
        return self.location_sim + self.handshape_sim + self.movement_sim


def cosine(u: Sequence[float], v: Sequence[float]) -> float:
    """Cosine of the angle between u and v, clamped to [-1, 1].

    Raises DimensionMismatch on unequal lengths and ZeroVector if either
    vector has zero norm.
    """
    a = np.asarray(u, dtype=float)
    b = np.asarray(v, dtype=float)
    if a.shape != b.shape or a.ndim != 1:
        raise DimensionMismatch(f"cosine over shapes {a.shape} and {b.shape}")
    norm_a = float(np.linalg.norm(a))
    norm_b = float(np.linalg.norm(b))
    if norm_a == 0.0 or norm_b == 0.0:
        raise ZeroVector("cosine similarity is undefined for a zero vector")
    value = float(np.dot(a, b)) / (norm_a * norm_b)
    # guard against rounding overshoot just past the ends of the range
    return min(1.0, max(-1.0, value))


def location_similarity(a: HandProfile, b: HandProfile) -> float:
    """Similarity of (start, end) location buckets.

    Equals the cosine of the concatenated one-hot encodings of the two
    bucket pairs, computed as matches/2 so the {0.0, 0.5, 1.0} range is
    exact in floating point.
    """
    matches = int(a.start_bucket == b.start_bucket) + int(a.end_bucket == b.end_bucket)
    return matches / 2.0


def handshape_similarity(a: HandProfile, b: HandProfile) -> float:
    """Mean of the initial-handshape and final-handshape cosines."""
    initial = cosine(a.initial_handshape.vector, b.initial_handshape.vector)
    final = cosine(a.final_handshape.vector, b.final_handshape.vector)
    return (initial + final) / 2.0


def movement_similarity(a: HandProfile, b: HandProfile) -> float:
    """Cosine of the wrist-trajectory descriptors.

    Zero vectors mean a stationary wrist: two stationary wrists are
    maximally similar (1.0), a stationary wrist against a moving one is
    maximally dissimilar (0.0).
    """
    u = np.asarray(a.movement.vector, dtype=float)
    v = np.asarray(b.movement.vector, dtype=float)
    if u.shape != v.shape:
        raise DimensionMismatch(f"movement vectors of lengths {u.size} and {v.size}")
    u_zero = not np.any(u)
    v_zero = not np.any(v)
    if u_zero and v_zero:
        return 1.0
    if u_zero or v_zero:
        return 0.0
    return cosine(u, v)


def congruency(a: SubLexicalProfile, b: SubLexicalProfile) -> CongruencyScore:
    """Congruency score between two profiles.

    Each property similarity is computed per hand present in both
    profiles and averaged over those hands. Raises NoSharedHands when
    the profiles have no hand in common.
    """
    pairs = []
    if a.left is not None and b.left is not None:
        pairs.append((a.left, b.left))
    if a.right is not None and b.right is not None:
        pairs.append((a.right, b.right))
    if not pairs:
        raise NoSharedHands("profiles share no hand")

    def mean_over(fn) -> float:
        return sum(fn(x, y) for x, y in pairs) / len(pairs)

    return CongruencyScore(
        location_sim=mean_over(location_similarity),
        handshape_sim=mean_over(handshape_similarity),
        movement_sim=mean_over(movement_similarity),
    )
