"""Round-banded neighbor retrieval over a gesture corpus.

Candidates must carry an iconicity rating (they donate it downstream),
pass a handshape-similarity prefilter, and have a congruency total
inside the round's band. Bands are half-open [lower, upper) intervals
listed from highest to lowest; the default two-round setup is
[2.4, inf) then [1.7, 2.4). Entries are ranked by congruency total
descending with ties broken by record id, so retrieval is fully
deterministic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .corpus import Corpus
from .errors import BadRound, NoSharedHands
from .similarity import CongruencyScore, congruency
from .sublexical import SubLexicalProfile

DEFAULT_HANDSHAPE_PREFILTER = 0.8
DEFAULT_BANDS = ((2.4, math.inf), (1.7, 2.4))


@dataclass(frozen=True)
class RoundConfig:
    handshape_prefilter: float = DEFAULT_HANDSHAPE_PREFILTER
    bands: tuple[tuple[float, float], ...] = DEFAULT_BANDS

    def __post_init__(self):
        if not -1.0 <= self.handshape_prefilter <= 1.0:
            raise ValueError("handshape_prefilter must lie in [-1, 1]")
        if not self.bands:
            raise ValueError("at least one congruency band is required")
        previous_lower = math.inf
        for lower, upper in self.bands:
            if not lower < upper:
                raise ValueError(f"band ({lower}, {upper}) is empty")
            if upper > previous_lower:
                raise ValueError("bands must be strictly descending and non-overlapping")
            previous_lower = lower


@dataclass(frozen=True)
class Neighbor:
    record_id: str
    congruency: CongruencyScore


@dataclass(frozen=True)
class NeighborList:
    round_index: int
    entries: tuple[Neighbor, ...] = field(default_factory=tuple)


def find_neighbors(
    target: SubLexicalProfile,
    corpus: Corpus,
    round_index: int,
    cfg: RoundConfig = RoundConfig(),
) -> NeighborList:
    """Rated corpus records congruent with the target in one round's band.

    A record qualifies when it shares a hand with the target, its
    handshape similarity reaches the prefilter, and its congruency
    total falls inside bands[round_index]. Raises BadRound for an
    out-of-range round index.
    """
    if not 0 <= round_index < len(cfg.bands):
        raise BadRound(f"round {round_index} outside configured bands 0..{len(cfg.bands) - 1}")
    lower, upper = cfg.bands[round_index]
    found = []
    for record in corpus:
        if record.iconicity_rating is None:
            continue
        try:
            score = congruency(target, record.profile)
        except NoSharedHands:
            continue
        if score.handshape_sim < cfg.handshape_prefilter:
            continue
        if lower <= score.total < upper:
            found.append(Neighbor(record_id=record.id, congruency=score))
    found.sort(key=lambda n: (-n.congruency.total, n.record_id))
    return NeighborList(round_index=round_index, entries=tuple(found))


def rank_all(
    target: SubLexicalProfile,
    corpus: Corpus,
    cfg: RoundConfig = RoundConfig(),
) -> list[NeighborList]:
    """find_neighbors over every configured round, in round order."""
    return [find_neighbors(target, corpus, r, cfg) for r in range(len(cfg.bands))]
