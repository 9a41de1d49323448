"""Persistent store for the rated gesture set.

A corpus file is a JSON array of records, each embedding its full
sub-lexical profile with explicit descriptor vectors:

    [
      {
        "id": "g-001",
        "word": "algorithm",
        "source": "studio capture",
        "iconicity_rating": 4.33,
        "profile": {
          "left": null,
          "right": {
            "start_bucket": 1,
            "end_bucket": 3,
            "initial_handshape": {"vector": [...], "provenance": "native-geometric"},
            "final_handshape":   {"vector": [...], "provenance": "native-geometric"},
            "movement":          {"vector": [...], "provenance": "native-geometric"}
          }
        }
      }
    ]

Serialization is canonical: records sorted by id, fixed key order, so
saving the same corpus twice yields byte-identical files.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace

from .errors import DuplicateId, MalformedCorpus, RatingOutOfRange
from .sublexical import (
    PROVENANCES,
    HandProfile,
    HandshapeDescriptor,
    MovementDescriptor,
    SubLexicalProfile,
)

RATING_MIN = 1.0
RATING_MAX = 7.0


@dataclass(frozen=True)
class GestureRecord:
    id: str
    word: str
    profile: SubLexicalProfile
    iconicity_rating: float | None = None
    source: str = ""


@dataclass(frozen=True)
class Corpus:
    records: dict[str, GestureRecord]

    def __len__(self) -> int:
        return len(self.records)

    def __iter__(self):
        return iter(self.records.values())

    def get(self, record_id: str) -> GestureRecord | None:
        return self.records.get(record_id)


def _check_rating(rating, where: str) -> float | None:
    if rating is None:
        return None
    if not isinstance(rating, (int, float)) or isinstance(rating, bool):
        raise MalformedCorpus(f"{where}: rating must be a number or null")
    if not RATING_MIN <= rating <= RATING_MAX:
        raise RatingOutOfRange(f"{where}: rating {rating} outside [{RATING_MIN}, {RATING_MAX}]")
    return float(rating)


def _check_word(word, where: str) -> str:
    if not isinstance(word, str) or not word:
        raise MalformedCorpus(f"{where}: 'word' must be a nonempty string")
    if word != word.lower():
        raise MalformedCorpus(f"{where}: gloss {word!r} must be lowercase")
    if any(ch.isspace() for ch in word):
        raise MalformedCorpus(f"{where}: gloss {word!r} must be a single token")
    return word


def _descriptor_from_json(obj, where: str, cls):
    if not isinstance(obj, dict) or set(obj) != {"vector", "provenance"}:
        raise MalformedCorpus(f"{where}: descriptor must have keys vector and provenance")
    vector = obj["vector"]
    if not isinstance(vector, list) or not vector:
        raise MalformedCorpus(f"{where}: vector must be a nonempty array")
    values = []
    for v in vector:
        if not isinstance(v, (int, float)) or isinstance(v, bool) or v != v or abs(v) == float("inf"):
            raise MalformedCorpus(f"{where}: vector components must be finite numbers")
        values.append(float(v))
    provenance = obj["provenance"]
    if provenance not in PROVENANCES:
        raise MalformedCorpus(f"{where}: provenance must be one of {PROVENANCES}")
    return cls(vector=tuple(values), provenance=provenance)


def _hand_from_json(obj, where: str) -> HandProfile | None:
    if obj is None:
        return None
    keys = {"start_bucket", "end_bucket", "initial_handshape", "final_handshape", "movement"}
    if not isinstance(obj, dict) or set(obj) != keys:
        raise MalformedCorpus(f"{where}: hand profile must have keys {sorted(keys)}")
    buckets = []
    for key in ("start_bucket", "end_bucket"):
        b = obj[key]
        if not isinstance(b, int) or isinstance(b, bool) or b not in (0, 1, 2, 3):
            raise MalformedCorpus(f"{where}: {key} must be an integer in 0..3")
        buckets.append(b)
    return HandProfile(
        start_bucket=buckets[0],
        end_bucket=buckets[1],
        initial_handshape=_descriptor_from_json(obj["initial_handshape"], f"{where}.initial_handshape", HandshapeDescriptor),
        final_handshape=_descriptor_from_json(obj["final_handshape"], f"{where}.final_handshape", HandshapeDescriptor),
        movement=_descriptor_from_json(obj["movement"], f"{where}.movement", MovementDescriptor),
    )


def profile_from_json(obj, where: str = "profile") -> SubLexicalProfile:
    if not isinstance(obj, dict) or set(obj) != {"left", "right"}:
        raise MalformedCorpus(f"{where}: profile must have keys left and right")
    left = _hand_from_json(obj["left"], f"{where}.left")
    right = _hand_from_json(obj["right"], f"{where}.right")
    if left is None and right is None:
        raise MalformedCorpus(f"{where}: at least one hand must be present")
    return SubLexicalProfile(left=left, right=right)


def _descriptor_to_json(desc) -> dict:
    return {"vector": list(desc.vector), "provenance": desc.provenance}


def _hand_to_json(hp: HandProfile | None):
    if hp is None:
        return None
    return {
        "start_bucket": hp.start_bucket,
        "end_bucket": hp.end_bucket,
        "initial_handshape": _descriptor_to_json(hp.initial_handshape),
        "final_handshape": _descriptor_to_json(hp.final_handshape),
        "movement": _descriptor_to_json(hp.movement),
    }


def profile_to_json(profile: SubLexicalProfile) -> dict:
    return {"left": _hand_to_json(profile.left), "right": _hand_to_json(profile.right)}


def record_from_json(obj, where: str) -> GestureRecord:
    keys = {"id", "word", "source", "iconicity_rating", "profile"}
    if not isinstance(obj, dict) or set(obj) != keys:
        raise MalformedCorpus(f"{where}: record must have keys {sorted(keys)}")
    record_id = obj["id"]
    if not isinstance(record_id, str) or not record_id:
        raise MalformedCorpus(f"{where}: 'id' must be a nonempty string")
    source = obj["source"]
    if not isinstance(source, str):
        raise MalformedCorpus(f"{where}: 'source' must be a string")
    return GestureRecord(
        id=record_id,
        word=_check_word(obj["word"], where),
        profile=profile_from_json(obj["profile"], f"{where}.profile"),
        iconicity_rating=_check_rating(obj["iconicity_rating"], where),
        source=source,
    )


def record_to_json(record: GestureRecord) -> dict:
    return {
        "id": record.id,
        "word": record.word,
        "source": record.source,
        "iconicity_rating": record.iconicity_rating,
        "profile": profile_to_json(record.profile),
    }


def _slot_dims(record: GestureRecord) -> dict[str, int]:
    dims = {}
    for hp in record.profile.hands().values():
        dims["handshape"] = len(hp.initial_handshape.vector)
        if len(hp.final_handshape.vector) != dims["handshape"]:
            raise MalformedCorpus(
                f"record {record.id!r}: initial and final handshape dimensions differ"
            )
        dims["movement"] = len(hp.movement.vector)
    return dims


def build_corpus(records: list[GestureRecord]) -> Corpus:
    """Assemble records into a corpus, enforcing id uniqueness and
    slot-wise descriptor dimension consistency."""
    by_id: dict[str, GestureRecord] = {}
    dims: dict[str, int] = {}
    for record in records:
        if record.id in by_id:
            raise DuplicateId(f"duplicate gesture id {record.id!r}")
        for slot, dim in _slot_dims(record).items():
            seen = dims.setdefault(slot, dim)
            if dim != seen:
                raise MalformedCorpus(
                    f"record {record.id!r}: {slot} dimension {dim} differs from corpus-wide {seen}"
                )
        by_id[record.id] = record
    return Corpus(records=by_id)


def loads_corpus(text: str) -> Corpus:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedCorpus(f"corpus is not valid JSON: {exc}") from exc
    if not isinstance(doc, list):
        raise MalformedCorpus("corpus document must be a JSON array of records")
    return build_corpus([record_from_json(obj, f"record {i}") for i, obj in enumerate(doc)])


def load_corpus(path) -> Corpus:
    with open(path, "r", encoding="utf-8") as fh:
        return loads_corpus(fh.read())


def dumps_corpus(corpus: Corpus) -> str:
    """Canonical serialization: records sorted by id."""
    ordered = [record_to_json(corpus.records[k]) for k in sorted(corpus.records)]
    return json.dumps(ordered, indent=2, ensure_ascii=False) + "\n"


def save_corpus(corpus: Corpus, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_corpus(corpus))


def add_record(corpus: Corpus, record: GestureRecord) -> Corpus:
    """New corpus with the record added; the input corpus is unchanged."""
    if record.id in corpus.records:
        raise DuplicateId(f"duplicate gesture id {record.id!r}")
    return build_corpus(list(corpus.records.values()) + [record])


def with_rating(record: GestureRecord, rating: float) -> GestureRecord:
    if not RATING_MIN <= rating <= RATING_MAX:
        raise RatingOutOfRange(f"rating {rating} outside [{RATING_MIN}, {RATING_MAX}]")
    return replace(record, iconicity_rating=float(rating))
