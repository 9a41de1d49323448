"""Gesture expressions over a small context-free grammar.

A gesture expression pairs a left-hand and a right-hand expression. Each
hand derives one of four shapes over three disjoint alphabets
(handshapes, locations, movements):

    empty | H | H L | H L M H L

Concrete syntax: tokens separated by whitespace, hands separated by "|",
with "empty" (or the symbol "∅") denoting the empty hand. Both hands
empty denotes no gesture and is rejected.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable

from .errors import BothHandsEmpty, MalformedProduction, UnknownSymbol
from .sublexical import SubLexicalProfile

EMPTY_TOKENS = ("empty", "∅")

_HAND_SHAPES = {
    0: (),
    1: ("H",),
    2: ("H", "L"),
    5: ("H", "L", "M", "H", "L"),
}


@dataclass(frozen=True)
class Alphabets:
    handshapes: frozenset[str]
    locations: frozenset[str]
    movements: frozenset[str]

    def __post_init__(self):
        if not (self.handshapes and self.locations and self.movements):
            raise ValueError("all three alphabets must be nonempty")
        if (self.handshapes & self.locations
                or self.handshapes & self.movements
                or self.locations & self.movements):
            raise ValueError("alphabets must be pairwise disjoint")

    def kind_of(self, token: str) -> str | None:
        if token in self.handshapes:
            return "H"
        if token in self.locations:
            return "L"
        if token in self.movements:
            return "M"
        return None


def default_alphabets() -> Alphabets:
    """Default configuration: quadrant buckets b0..b3 as locations plus
    opaque handshape/movement symbol inventories."""
    return Alphabets(
        handshapes=frozenset(f"h{i}" for i in range(10)),
        locations=frozenset(f"b{i}" for i in range(4)),
        movements=frozenset(f"m{i}" for i in range(10)),
    )


def load_alphabets(text: str) -> Alphabets:
    """Load alphabets from a JSON object with keys handshapes/locations/movements."""
    doc = json.loads(text)
    if not isinstance(doc, dict) or set(doc) != {"handshapes", "locations", "movements"}:
        raise ValueError("alphabet config must have exactly the keys handshapes, locations, movements")
    return Alphabets(
        handshapes=frozenset(doc["handshapes"]),
        locations=frozenset(doc["locations"]),
        movements=frozenset(doc["movements"]),
    )


@dataclass(frozen=True)
class HandExpression:
    """One hand's derivation: a tuple of 0, 1, 2 or 5 symbols."""

    symbols: tuple[str, ...]

    @property
    def is_empty(self) -> bool:
        return not self.symbols

    @property
    def form(self) -> str:
        return {0: "empty", 1: "h", 2: "hl", 5: "hlmhl"}[len(self.symbols)]


EMPTY_HAND = HandExpression(symbols=())


@dataclass(frozen=True)
class GestureExpression:
    left: HandExpression
    right: HandExpression


def _parse_hand(tokens: list[str], alphabets: Alphabets, side: str) -> HandExpression:
    if len(tokens) == 1 and tokens[0] in EMPTY_TOKENS:
        return EMPTY_HAND
    kinds = []
    for token in tokens:
        kind = alphabets.kind_of(token)
        if kind is None:
            raise UnknownSymbol(f"{side} hand: token {token!r} is in no alphabet")
        kinds.append(kind)
    expected = _HAND_SHAPES.get(len(tokens))
    if expected is None or tuple(kinds) != expected:
        raise MalformedProduction(
            f"{side} hand: sequence {' '.join(kinds) or '(none)'} matches no production"
        )
    return HandExpression(symbols=tuple(tokens))


def parse_expression(text: str, alphabets: Alphabets) -> GestureExpression:
    """Parse "left-tokens | right-tokens" into a GestureExpression.

    Accepts exactly the strings derivable from the grammar; raises
    UnknownSymbol, MalformedProduction or BothHandsEmpty otherwise.
    """
    parts = text.split("|")
    if len(parts) != 2:
        raise MalformedProduction("expression must be two hands separated by one '|'")
    left_tokens, right_tokens = parts[0].split(), parts[1].split()
    if not left_tokens or not right_tokens:
        raise MalformedProduction("each hand needs at least one token ('empty' for no hand)")
    left = _parse_hand(left_tokens, alphabets, "left")
    right = _parse_hand(right_tokens, alphabets, "right")
    if left.is_empty and right.is_empty:
        raise BothHandsEmpty("an expression needs at least one non-empty hand")
    return GestureExpression(left=left, right=right)


def render_expression(expr: GestureExpression) -> str:
    """Inverse of parse_expression over valid expressions."""

    def hand(h: HandExpression) -> str:
        return "empty" if h.is_empty else " ".join(h.symbols)

    return f"{hand(expr.left)} | {hand(expr.right)}"


def expression_of(
    profile: SubLexicalProfile,
    alphabets: Alphabets,
    handshape_labeler: Callable[[object], str],
    movement_labeler: Callable[[object], str],
) -> GestureExpression:
    """Express a profile as a production of the grammar.

    Each present hand becomes the five-symbol shape (initial handshape,
    start bucket, movement, final handshape, end bucket); absent hands
    are empty. Bucket values map to location symbols b0..b3. Labelers
    map descriptors to alphabet symbols; their failures propagate.
    """

    def label(symbol: str, alphabet: frozenset[str], what: str) -> str:
        if symbol not in alphabet:
            raise UnknownSymbol(f"{what} label {symbol!r} is not in its alphabet")
        return symbol

    def hand(hp) -> HandExpression:
        if hp is None:
            return EMPTY_HAND
        return HandExpression(symbols=(
            label(handshape_labeler(hp.initial_handshape), alphabets.handshapes, "handshape"),
            label(f"b{hp.start_bucket}", alphabets.locations, "location"),
            label(movement_labeler(hp.movement), alphabets.movements, "movement"),
            label(handshape_labeler(hp.final_handshape), alphabets.handshapes, "handshape"),
            label(f"b{hp.end_bucket}", alphabets.locations, "location"),
        ))

    return GestureExpression(left=hand(profile.left), right=hand(profile.right))
