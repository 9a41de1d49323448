"""Iconicity rating assignment for sign-language gestures.

Pipeline: parse pose keypoint sequences, normalize them to a
shoulder-anchored frame, extract sub-lexical properties (location
buckets, handshape descriptors, movement trajectories), retrieve
congruent rated neighbors from a gesture corpus in descending score
bands, gate candidates on word-vector similarity of the glosses, and
transfer the first qualifying neighbor's rating with a per-round
discount.
"""

from .assigner import (
    AssignConfig,
    Assigned,
    AssignmentResult,
    Failed,
    Unassigned,
    assign,
    assign_batch,
)
from .config import PipelineConfig, load_config, loads_config
from .corpus import (
    Corpus,
    GestureRecord,
    add_record,
    build_corpus,
    load_corpus,
    loads_corpus,
    save_corpus,
)
from .errors import GesticonError
from .evaluation import EvalItem, EvalReport, parse_manual_ratings, score
from .grammar import (
    Alphabets,
    GestureExpression,
    HandExpression,
    default_alphabets,
    expression_of,
    parse_expression,
    render_expression,
)
from .keypoints import (
    FrameSequence,
    Landmark,
    NormalizedSequence,
    PoseFrame,
    normalize,
    parse_sequence,
    serialize_sequence,
)
from .neighbors import Neighbor, NeighborList, RoundConfig, find_neighbors, rank_all
from .similarity import (
    CongruencyScore,
    congruency,
    cosine,
    handshape_similarity,
    location_similarity,
    movement_similarity,
)
from .sublexical import (
    HandProfile,
    HandshapeDescriptor,
    MovementDescriptor,
    SubLexicalProfile,
    bucket_location,
    extract_profile,
    extract_trajectory,
    hand_descriptor,
    select_keyframes,
)
from .wordvec import WordVectorTable, load_table, loads_table, word_similarity

__version__ = "0.1.0"
