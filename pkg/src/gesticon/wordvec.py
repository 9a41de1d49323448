"""Plain-text word-vector table: loading and word-pair similarity.

The file format is one entry per line, a token followed by its vector
components, all space-separated:

    algorithm 0.12 -0.48 0.33 ...

Tokens are lowercased on load; lookups lowercase the query, so the
table is case-insensitive. Later duplicate tokens overwrite earlier
ones.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import EmptyTable, InconsistentDimension, MalformedLine, OutOfVocabulary
from .similarity import cosine


@dataclass(frozen=True)
class WordVectorTable:
    dimension: int
    entries: dict[str, tuple[float, ...]]

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, word: str) -> bool:
        return word.lower() in self.entries

    def vector(self, word: str) -> tuple[float, ...]:
        key = word.lower()
        if key not in self.entries:
            raise OutOfVocabulary(word)
        return self.entries[key]


def loads_table(text: str) -> WordVectorTable:
    entries: dict[str, tuple[float, ...]] = {}
    dimension: int | None = None
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        parts = line.split()
        if len(parts) < 2:
            raise MalformedLine(f"line {lineno}: expected a token followed by values")
        token = parts[0].lower()
        try:
            vector = tuple(float(p) for p in parts[1:])
        except ValueError as exc:
            raise MalformedLine(f"line {lineno}: {exc}") from exc
        if dimension is None:
            dimension = len(vector)
        elif len(vector) != dimension:
            raise InconsistentDimension(
                f"line {lineno}: dimension {len(vector)}, table dimension {dimension}"
            )
        entries[token] = vector
    if dimension is None:
        raise EmptyTable("vector file contains no entries")
    return WordVectorTable(dimension=dimension, entries=entries)


def load_table(path) -> WordVectorTable:
    with open(path, "r", encoding="utf-8") as fh:
        return loads_table(fh.read())


def word_similarity(table: WordVectorTable, word1: str, word2: str) -> float:
    """Cosine similarity of two words' vectors; lookups are
    case-insensitive. Raises OutOfVocabulary naming the missing word."""
    u = table.vector(word1)
    v = table.vector(word2)
    return cosine(np.asarray(u), np.asarray(v))
