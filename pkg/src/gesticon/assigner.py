"""Iconicity rating assignment by rated-neighbor rating transfer.

Rounds are walked in order; within a round, neighbors are scanned in
congruency rank order. The first neighbor whose gloss reaches the word
similarity threshold donates its rating, discounted by the round index
and clamped to the bottom of the 1..7 scale:

    rating = max(clamp_floor, neighbor_rating - round_index)

The threshold comparison is inclusive (similarity == threshold
qualifies). A gloss missing from the vector table never qualifies. If
every round exhausts without a qualifying neighbor the target stays
unassigned; that is a result, not an error.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .corpus import Corpus, GestureRecord
from .errors import GesticonError, MalformedInput, OutOfVocabulary
from .neighbors import RoundConfig, find_neighbors
from .sublexical import SubLexicalProfile
from .wordvec import WordVectorTable, word_similarity

DEFAULT_TAU = 0.3
RATING_FLOOR = 1.0


@dataclass(frozen=True)
class AssignConfig:
    tau: float = DEFAULT_TAU
    rounds: RoundConfig = RoundConfig()
    clamp_floor: float = RATING_FLOOR

    def __post_init__(self):
        if not -1.0 <= self.tau <= 1.0:
            raise ValueError("tau must lie in [-1, 1]")
        if not 1.0 <= self.clamp_floor <= 7.0:
            raise ValueError("clamp_floor must lie on the 1..7 scale")


@dataclass(frozen=True)
class Assigned:
    rating: float
    neighbor_id: str
    round_index: int
    word_similarity: float
    congruency_total: float


@dataclass(frozen=True)
class Unassigned:
    rounds_exhausted: int
    candidates_tested: int


@dataclass(frozen=True)
class Failed:
    """Batch item that raised instead of producing a result."""

    error: str


AssignmentResult = Assigned | Unassigned | Failed


def assign(
    target_profile: SubLexicalProfile,
    target_word: str,
    corpus: Corpus,
    table: WordVectorTable,
    cfg: AssignConfig = AssignConfig(),
) -> Assigned | Unassigned:
    """Assign an iconicity rating to one target gesture.

    Scans each round's neighbor list in rank order and transfers the
    first qualifying neighbor's rating per the round-discount rule.
    """
    tested = 0
    n_rounds = len(cfg.rounds.bands)
    for round_index in range(n_rounds):
        listing = find_neighbors(target_profile, corpus, round_index, cfg.rounds)
        for neighbor in listing.entries:
            tested += 1
            record = corpus.get(neighbor.record_id)
            try:
                similarity = word_similarity(table, target_word, record.word)
            except OutOfVocabulary:
                continue  # an unmatchable gloss cannot reach the threshold
            if similarity >= cfg.tau:
                rating = max(cfg.clamp_floor, record.iconicity_rating - round_index)
                return Assigned(
                    rating=rating,
                    neighbor_id=record.id,
                    round_index=round_index,
                    word_similarity=similarity,
                    congruency_total=neighbor.congruency.total,
                )
    return Unassigned(rounds_exhausted=n_rounds, candidates_tested=tested)


def assign_batch(
    targets: list[GestureRecord],
    corpus: Corpus,
    table: WordVectorTable,
    cfg: AssignConfig = AssignConfig(),
) -> list[tuple[str, AssignmentResult]]:
    """assign over a list of target records, order preserved.

    A failing item is reported as Failed in place; it does not abort
    the rest of the batch.
    """
    results: list[tuple[str, AssignmentResult]] = []
    for target in targets:
        try:
            result: AssignmentResult = assign(target.profile, target.word, corpus, table, cfg)
        except GesticonError as exc:
            result = Failed(error=f"{type(exc).__name__}: {exc}")
        results.append((target.id, result))
    return results


# -- wire format for batch results --

def results_to_json(
    results: list[tuple[str, AssignmentResult]],
    words: dict[str, str],
) -> str:
    """Serialize batch results as a JSON array, one object per target."""
    items = []
    for gesture_id, result in results:
        item: dict = {"gesture_id": gesture_id, "word": words.get(gesture_id, "")}
        if isinstance(result, Assigned):
            item.update(
                outcome="assigned",
                rating=result.rating,
                neighbor_id=result.neighbor_id,
                round=result.round_index,
                word_similarity=result.word_similarity,
                congruency=result.congruency_total,
            )
        elif isinstance(result, Unassigned):
            item.update(
                outcome="unassigned",
                rounds_exhausted=result.rounds_exhausted,
                candidates_tested=result.candidates_tested,
            )
        else:
            item.update(outcome="error", error=result.error)
        items.append(item)
    return json.dumps(items, indent=2, ensure_ascii=False) + "\n"


def results_from_json(text: str) -> list[tuple[str, AssignmentResult]]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"assignments file is not valid JSON: {exc}") from exc
    if not isinstance(doc, list):
        raise MalformedInput("assignments file must be a JSON array")
    results: list[tuple[str, AssignmentResult]] = []
    for i, item in enumerate(doc):
        if not isinstance(item, dict) or "gesture_id" not in item or "outcome" not in item:
            raise MalformedInput(f"assignment {i}: expected an object with gesture_id and outcome")
        outcome = item["outcome"]
        try:
            if outcome == "assigned":
                result: AssignmentResult = Assigned(
                    rating=float(item["rating"]),
                    neighbor_id=str(item["neighbor_id"]),
                    round_index=int(item["round"]),
                    word_similarity=float(item["word_similarity"]),
                    congruency_total=float(item["congruency"]),
                )
            elif outcome == "unassigned":
                result = Unassigned(
                    rounds_exhausted=int(item["rounds_exhausted"]),
                    candidates_tested=int(item["candidates_tested"]),
                )
            elif outcome == "error":
                result = Failed(error=str(item.get("error", "")))
            else:
                raise MalformedInput(f"assignment {i}: unknown outcome {outcome!r}")
        except (KeyError, TypeError, ValueError) as exc:
            raise MalformedInput(f"assignment {i}: {exc}") from exc
        results.append((str(item["gesture_id"]), result))
    return results
