"""Exception types raised across the pipeline."""


class GesticonError(Exception):
    """Base class for all errors raised by this package."""


# -- keypoint ingestion --

class MalformedInput(GesticonError):
    """Input document is syntactically or structurally invalid."""


class MissingPosePoint(MalformedInput):
    """A required named body point is absent from a frame."""


class BadHandArity(MalformedInput):
    """A hand landmark list does not contain exactly 21 points."""


class EmptySequence(MalformedInput):
    """A gesture file contains zero frames."""


class DegenerateShoulders(GesticonError):
    """Both shoulders coincide; the shoulder frame is undefined."""


class NoseOnAxis(GesticonError):
    """Nose lies exactly on the shoulder line; Y orientation is ambiguous."""


# -- sub-lexical extraction --

class DegenerateHand(GesticonError):
    """All 21 hand landmarks coincide; the shape descriptor is undefined."""


class NoWristData(GesticonError):
    """The requested wrist is present in no frame of the sequence."""


class NoHands(GesticonError):
    """Neither hand is observed at the keyframe indices."""


# -- grammar --

class UnknownSymbol(GesticonError):
    """A token belongs to none of the configured alphabets."""


class MalformedProduction(GesticonError):
    """A token sequence matches no production of the gesture grammar."""


class BothHandsEmpty(GesticonError):
    """An expression with two empty hands denotes no gesture."""


# -- corpus --

class MalformedCorpus(GesticonError):
    """Corpus document is structurally invalid."""


class DuplicateId(GesticonError):
    """Two records share a gesture id."""


class RatingOutOfRange(GesticonError):
    """An iconicity rating falls outside the 1..7 scale."""


# -- similarity --

class DimensionMismatch(GesticonError):
    """Two vectors being compared have different lengths."""


class ZeroVector(GesticonError):
    """Cosine similarity is undefined for a zero-norm vector."""


class NoSharedHands(GesticonError):
    """Two profiles have no hand in common; congruency is vacuous."""


# -- neighbor search --

class BadRound(GesticonError):
    """Round index does not address a configured congruency band."""


# -- word vectors --

class MalformedLine(GesticonError):
    """A vector-file line does not parse as token plus floats."""


class InconsistentDimension(GesticonError):
    """Vector dimensions differ where a single dimension is required."""


class EmptyTable(GesticonError):
    """A word-vector file yielded no entries."""


class OutOfVocabulary(GesticonError):
    """A queried word has no vector in the table."""

    def __init__(self, word: str):
        super().__init__(f"word not in vector table: {word!r}")
        self.word = word


# -- evaluation --

class MissingManualRating(GesticonError):
    """An assignment id has no manual rating to compare against."""

    def __init__(self, gesture_id: str):
        super().__init__(f"no manual rating for gesture: {gesture_id!r}")
        self.gesture_id = gesture_id


# -- configuration --

class MalformedConfig(GesticonError):
    """Pipeline configuration is invalid or contains unknown keys."""
