"""Regenerate the committed end-to-end fixtures under tests/fixtures/golden/.

Builds ten synthetic gesture keypoint files, extracts them into a rated
corpus, writes three target gesture files plus a small word-vector
table, and freezes the expected assignment output. The expected values
are computed with the brute-force oracle from tests/oracle.py, not with
the production assigner, so the golden file stays an independent
reference.

Run from the repository root:

    python scripts/make_golden_fixtures.py
"""

from __future__ import annotations

import json
import math
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "tests"))

from gesticon.assigner import Assigned, Unassigned, results_to_json
from gesticon.corpus import GestureRecord, build_corpus, dumps_corpus
from gesticon.keypoints import normalize, parse_sequence
from gesticon.sublexical import extract_profile
from gesticon.wordvec import loads_table

from oracle import bf_assign, bf_neighbor_ids

FIXTURES = ROOT / "tests" / "fixtures" / "golden"

# raw-image pose skeleton (y grows downward); wrist/hand overridden per frame
SKELETON = {
    "nose": (0.50, 0.22),
    "left_eye": (0.54, 0.20),
    "right_eye": (0.46, 0.20),
    "left_shoulder": (0.64, 0.38),
    "right_shoulder": (0.36, 0.38),
    "left_elbow": (0.70, 0.52),
    "right_elbow": (0.30, 0.52),
    "left_wrist": (0.74, 0.66),
}

N_FRAMES = 12

# hand shapes: fixed landmark offset clouds around the wrist
HAND_CLOUDS = {
    "flat": [(0.012 * k, 0.004 * (k % 5)) for k in range(21)],
    "spread": [(0.02 * math.cos(k * 0.6), 0.02 * math.sin(k * 0.6) + 0.001 * k) for k in range(21)],
    "fist": [(0.008 * math.cos(k * 1.1), 0.008 * math.sin(k * 1.7)) for k in range(21)],
    "point": [(0.015 * (k % 3), 0.01 * (k % 7)) for k in range(21)],
}


def lerp(a, b, t):
    return (a[0] + (b[0] - a[0]) * t, a[1] + (b[1] - a[1]) * t)


def gesture_doc(gesture_id, word, start, end, cloud, bend=0.0):
    """One synthetic gesture: right wrist travels start -> end with an
    optional perpendicular bow, hand cloud rides on the wrist."""
    dx, dy = end[0] - start[0], end[1] - start[1]
    frames = []
    for i in range(N_FRAMES):
        t = i / (N_FRAMES - 1)
        wx, wy = lerp(start, end, t)
        arch = bend * math.sin(math.pi * t)
        wx += -dy * arch
        wy += dx * arch
        pose = {name: [x, y] for name, (x, y) in SKELETON.items()}
        pose["right_wrist"] = [wx, wy]
        frames.append({
            "pose": pose,
            "right_hand": [[wx + ox, wy + oy] for ox, oy in HAND_CLOUDS[cloud]],
        })
    return {"gesture_id": gesture_id, "word": word, "fps": 24, "frames": frames}


# corpus gestures: id, word, path, cloud, bend, rating
CORPUS_GESTURES = [
    ("g01", "algorithm", (0.30, 0.30), (0.66, 0.30), "flat",   0.00, 5.5),
    ("g02", "array",     (0.30, 0.60), (0.66, 0.60), "flat",   0.00, 4.33),
    ("g03", "signal",    (0.32, 0.58), (0.68, 0.62), "flat",   0.18, 3.67),
    ("g04", "cache",     (0.40, 0.70), (0.40, 0.34), "spread", 0.00, 6.0),
    ("g05", "router",    (0.60, 0.70), (0.60, 0.34), "spread", 0.10, 2.33),
    ("g06", "binary",    (0.36, 0.30), (0.64, 0.64), "fist",   0.00, 4.0),
    ("g07", "network",   (0.64, 0.30), (0.36, 0.64), "fist",   0.08, 5.0),
    ("g08", "index",     (0.50, 0.28), (0.50, 0.50), "point",  0.00, 3.0),
    ("g09", "packet",    (0.34, 0.46), (0.68, 0.40), "point",  0.15, 6.67),
    ("g10", "disk",      (0.48, 0.62), (0.52, 0.36), "spread", 0.25, None),
]

# targets: t1 shadows g01 (round 0); t2 shares g02's start area but moves
# steeply upward, landing in the round-1 band against g02 then g03 — the
# scan passes 'array' (below tau) and qualifies at 'signal'; t3 shadows
# g01 but its word is out of vocabulary
TARGET_GESTURES = [
    ("t1", "sorting",    (0.31, 0.31), (0.665, 0.305), "flat", 0.01),
    ("t2", "stream",     (0.31, 0.61), (0.51, 0.26),   "flat", 0.00),
    ("t3", "blockchain", (0.30, 0.31), (0.66, 0.31),   "flat", 0.00),
]

# word vectors (dimension 6): computing cluster near e1, network cluster
# near e2, storage cluster near e3; "stream" sits with the network words
WORD_VECTORS = {
    "algorithm": (1.0, 0.1, 0.0, 0.2, 0.0, 0.1),
    "sorting":   (0.9, 0.0, 0.1, 0.3, 0.1, 0.0),
    "array":     (0.95, 0.05, 0.1, 0.1, 0.0, 0.2),
    "index":     (0.85, 0.1, 0.2, 0.0, 0.1, 0.1),
    "hash":      (0.9, 0.2, 0.0, 0.1, 0.2, 0.0),
    "binary":    (0.8, 0.1, 0.1, 0.3, 0.0, 0.1),
    "signal":    (0.1, 1.0, 0.1, 0.0, 0.1, 0.0),
    "network":   (0.0, 0.9, 0.2, 0.1, 0.0, 0.1),
    "router":    (0.1, 0.85, 0.1, 0.2, 0.1, 0.0),
    "packet":    (0.2, 0.9, 0.0, 0.1, 0.0, 0.2),
    "stream":    (0.15, 0.95, 0.1, 0.05, 0.1, 0.1),
    "cache":     (0.2, 0.0, 0.9, 0.1, 0.1, 0.0),
    "disk":      (0.1, 0.1, 0.95, 0.0, 0.2, 0.1),
    "file":      (0.0, 0.2, 0.85, 0.2, 0.0, 0.1),
    "backup":    (0.1, 0.0, 0.9, 0.1, 0.3, 0.0),
    "kernel":    (0.4, 0.3, 0.3, 0.6, 0.1, 0.2),
    "thread":    (0.3, 0.4, 0.1, 0.7, 0.0, 0.1),
    "socket":    (0.2, 0.6, 0.1, 0.5, 0.2, 0.0),
    "buffer":    (0.3, 0.2, 0.5, 0.4, 0.1, 0.3),
    "queue":     (0.5, 0.2, 0.2, 0.5, 0.3, 0.1),
}


def extract_record(doc, rating):
    seq = parse_sequence(json.dumps(doc))
    profile = extract_profile(normalize(seq))
    return GestureRecord(id=seq.gesture_id, word=seq.word, profile=profile,
                         iconicity_rating=rating, source="synthetic")


def main():
    FIXTURES.mkdir(parents=True, exist_ok=True)

    records = []
    for gid, word, start, end, cloud, bend, rating in CORPUS_GESTURES:
        records.append(extract_record(gesture_doc(gid, word, start, end, cloud, bend), rating))
    corpus = build_corpus(records)
    (FIXTURES / "corpus.json").write_text(dumps_corpus(corpus), encoding="utf-8")

    target_records = []
    for gid, word, start, end, cloud, bend in TARGET_GESTURES:
        doc = gesture_doc(gid, word, start, end, cloud, bend)
        (FIXTURES / f"{gid}.json").write_text(json.dumps(doc, indent=2) + "\n", encoding="utf-8")
        target_records.append(extract_record(doc, None))

    vec_lines = "".join(
        f"{word} " + " ".join(f"{x:g}" for x in vec) + "\n"
        for word, vec in WORD_VECTORS.items()
    )
    (FIXTURES / "vectors.txt").write_text(vec_lines, encoding="utf-8")
    table = loads_table(vec_lines)

    # diagnostics: where does each target land per round?
    bands = ((2.4, math.inf), (1.7, 2.4))
    for target in target_records:
        print(f"-- {target.id} ({target.word})")
        for round_index in range(2):
            ids = bf_neighbor_ids(target.profile, corpus, round_index, 0.8, bands)
            print(f"   round {round_index}: {ids}")

    # golden expectations via the brute-force oracle
    results = []
    for target in target_records:
        outcome = bf_assign(target.profile, target.word, corpus, table, 0.3, 0.8, bands)
        print(f"   {target.id}: {outcome}")
        if outcome["outcome"] == "assigned":
            results.append((target.id, Assigned(
                rating=outcome["rating"],
                neighbor_id=outcome["neighbor_id"],
                round_index=outcome["round"],
                word_similarity=outcome["word_similarity"],
                congruency_total=_oracle_total(target, corpus, outcome["neighbor_id"]),
            )))
        else:
            results.append((target.id, Unassigned(
                rounds_exhausted=outcome["rounds_exhausted"],
                candidates_tested=outcome["candidates_tested"],
            )))
    words = {t.id: t.word for t in target_records}
    (FIXTURES / "expected_assignments.json").write_text(
        results_to_json(results, words), encoding="utf-8"
    )
    print(f"fixtures written to {FIXTURES}")


def _oracle_total(target, corpus, neighbor_id):
    from gesticon.similarity import congruency

    return congruency(target.profile, corpus.get(neighbor_id).profile).total


if __name__ == "__main__":
    main()
