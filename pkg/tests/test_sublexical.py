"""Keyframe selection, bucketing, descriptors, trajectories, profile assembly."""

import math

import numpy as np
import pytest

from gesticon.errors import DegenerateHand, NoHands, NoWristData
from gesticon.keypoints import Landmark, normalize
from gesticon.sublexical import (
    IMPORTED,
    NATIVE,
    apply_embeddings,
    bucket_location,
    extract_profile,
    extract_trajectory,
    hand_descriptor,
    parse_embedding_lines,
    select_keyframes,
)

from conftest import make_frame, make_hand, make_pose, make_sequence, one_hand_profile

from oracle import bf_keyframes


class TestSelectKeyframes:
    @pytest.mark.parametrize("n,expected", [
        (1, (0, 0)),
        (2, (0, 1)),
        (3, (0, 1)),
        (8, (2, 5)),
        (9, (2, 6)),
    ])
    def test_known_values(self, n, expected):
        assert select_keyframes(n) == expected

    def test_matches_bruteforce_for_all_small_n(self):
        for n in range(1, 1001):
            assert select_keyframes(n) == bf_keyframes(n)

    def test_indices_in_range_and_ordered(self):
        for n in range(1, 200):
            initial, final = select_keyframes(n)
            assert 0 <= initial <= final < n

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            select_keyframes(0)


class TestBucketLocation:
    @pytest.mark.parametrize("point,bucket", [
        ((0.0, 0.0), 1),    # boundary resolves upper-right
        ((-0.3, -0.8), 2),  # lower-left
        ((0.5, 0.2), 1),    # upper-right
        ((-0.4, 0.7), 0),   # upper-left
        ((0.6, -0.1), 3),   # lower-right
    ])
    def test_quadrants(self, point, bucket):
        assert bucket_location(*point) == bucket

    def test_partitions_plane(self):
        rng = np.random.default_rng(3)
        for _ in range(500):
            x, y = rng.uniform(-2, 2, size=2)
            assert bucket_location(x, y) in (0, 1, 2, 3)

    def test_open_quadrant_interiors_are_distinct(self):
        interiors = {
            bucket_location(-0.5, 0.5),
            bucket_location(0.5, 0.5),
            bucket_location(-0.5, -0.5),
            bucket_location(0.5, -0.5),
        }
        assert interiors == {0, 1, 2, 3}


class TestHandDescriptor:
    def test_length_and_normalization(self):
        desc = hand_descriptor(make_hand(seed=1))
        assert len(desc.vector) == 210
        assert max(desc.vector) == 1.0
        assert all(0.0 <= v <= 1.0 for v in desc.vector)
        assert desc.provenance == NATIVE

    def test_lexicographic_pair_order(self):
        # landmarks on a line: distance(i, j) proportional to j - i
        hand = tuple(Landmark(float(k), 0.0) for k in range(21))
        desc = hand_descriptor(hand)
        # first entries are (0,1), (0,2), ...: distances 1/20, 2/20, ...
        assert desc.vector[0] == pytest.approx(1 / 20)
        assert desc.vector[1] == pytest.approx(2 / 20)
        assert desc.vector[19] == pytest.approx(20 / 20)
        # entry 20 is pair (1,2): distance 1/20
        assert desc.vector[20] == pytest.approx(1 / 20)

    def test_rotation_invariance(self):
        hand = make_hand(seed=2)
        rotated = tuple(Landmark(-lm.y, lm.x) for lm in hand)  # 90 degrees
        a = hand_descriptor(hand).vector
        b = hand_descriptor(rotated).vector
        assert all(abs(x - y) <= 1e-9 for x, y in zip(a, b))

    def test_similarity_transform_invariance(self):
        rng = np.random.default_rng(4)
        hand = make_hand(seed=5)
        base = hand_descriptor(hand).vector
        for _ in range(100):
            angle = rng.uniform(0, 2 * math.pi)
            scale = rng.uniform(0.1, 10.0)
            tx, ty = rng.uniform(-5, 5, size=2)
            c, s = math.cos(angle), math.sin(angle)
            moved = tuple(
                Landmark(scale * (c * lm.x - s * lm.y) + tx, scale * (s * lm.x + c * lm.y) + ty)
                for lm in hand
            )
            got = hand_descriptor(moved).vector
            assert all(abs(x - y) <= 1e-9 for x, y in zip(base, got))

    def test_degenerate_hand(self):
        hand = tuple(Landmark(0.3, 0.6) for _ in range(21))
        with pytest.raises(DegenerateHand):
            hand_descriptor(hand)

    def test_wrong_arity_rejected(self):
        with pytest.raises(ValueError):
            hand_descriptor(make_hand()[:20])


class TestExtractTrajectory:
    def _seq_with_wrist_path(self, points, hand="right"):
        frames = []
        for x, y in points:
            pose = make_pose(**{f"{hand}_wrist": (x, y)})
            frames.append(make_frame(pose=pose))
        return normalize(make_sequence(frames))

    def test_stationary_wrist_is_zero_vector(self):
        seq = self._seq_with_wrist_path([(0.2, 0.4)] * 5)
        desc = extract_trajectory(seq, "right")
        assert len(desc.vector) == 64
        assert all(v == 0.0 for v in desc.vector)

    def test_straight_segment_resampling(self):
        # work in already-normalized coordinates so the path is exactly known
        frames = []
        for x in (0.0, 1.0):
            pose = {name: Landmark(*xy) for name, xy in {
                "nose": (0.0, 0.5), "left_eye": (0.1, 0.45), "right_eye": (-0.1, 0.45),
                "left_shoulder": (-0.5, 0.0), "right_shoulder": (0.5, 0.0),
                "left_elbow": (-0.6, -0.3), "right_elbow": (0.6, -0.3),
                "left_wrist": (-0.7, -0.5), "right_wrist": (x, 0.0),
            }.items()}
            frames.append(make_frame(pose=pose))
        seq = normalize(make_sequence(frames))
        desc = extract_trajectory(seq, "right")
        xs = desc.vector[0::2]
        ys = desc.vector[1::2]
        assert len(xs) == 32
        # mean-centered: spans [-0.5, 0.5] in steps of 1/31
        for j, x in enumerate(xs):
            assert x == pytest.approx(-0.5 + j / 31, abs=1e-9)
        assert all(abs(y) <= 1e-9 for y in ys)

    def test_mean_centered_per_axis(self):
        rng = np.random.default_rng(6)
        points = [(float(x), float(y)) for x, y in rng.uniform(0.1, 0.9, size=(7, 2))]
        desc = extract_trajectory(self._seq_with_wrist_path(points), "right")
        assert abs(sum(desc.vector[0::2])) <= 1e-9 * 32
        assert abs(sum(desc.vector[1::2])) <= 1e-9 * 32

    def test_frame_duplication_invariance(self):
        rng = np.random.default_rng(7)
        points = [(float(x), float(y)) for x, y in rng.uniform(0.1, 0.9, size=(6, 2))]
        base = extract_trajectory(self._seq_with_wrist_path(points), "right").vector
        doubled = [p for p in points for _ in range(2)]
        got = extract_trajectory(self._seq_with_wrist_path(doubled), "right").vector
        assert all(abs(x - y) <= 1e-6 for x, y in zip(base, got))

    def test_resample_len_configurable(self):
        seq = self._seq_with_wrist_path([(0.1, 0.1), (0.9, 0.9)])
        assert len(extract_trajectory(seq, "right", resample_len=16).vector) == 32

    def test_no_wrist_data(self):
        # a frame map lacking the wrist entirely (constructed directly)
        pose = make_pose()
        del pose["left_wrist"]
        seq = make_sequence([make_frame(pose=pose)])
        with pytest.raises(NoWristData):
            extract_trajectory(seq, "left")

    def test_unknown_hand_rejected(self):
        seq = self._seq_with_wrist_path([(0.1, 0.1)])
        with pytest.raises(ValueError):
            extract_trajectory(seq, "both")


class TestExtractProfile:
    def test_right_hand_only(self):
        frames = [make_frame(right_hand=make_hand(seed=k)) for k in range(4)]
        profile = extract_profile(normalize(make_sequence(frames)))
        assert profile.left is None
        assert profile.right is not None
        assert len(profile.right.initial_handshape.vector) == 210
        assert len(profile.right.movement.vector) == 64

    def test_identical_first_and_last_frames(self):
        frame = make_frame(right_hand=make_hand(seed=9))
        profile = extract_profile(normalize(make_sequence([frame, frame])))
        assert profile.right.start_bucket == profile.right.end_bucket
        assert profile.right.initial_handshape.vector == profile.right.final_handshape.vector

    def test_hand_absent_at_keyframe_not_present(self):
        # right hand only on frame 0; keyframes of n=4 are (1, 3)
        frames = [
            make_frame(right_hand=make_hand()),
            make_frame(),
            make_frame(),
            make_frame(),
        ]
        with pytest.raises(NoHands):
            extract_profile(normalize(make_sequence(frames)))

    def test_no_hands(self):
        with pytest.raises(NoHands):
            extract_profile(normalize(make_sequence([make_frame()])))

    def test_buckets_read_at_keyframes(self):
        # n=2: keyframes (0, 1); wrist in different quadrants per frame
        hand = make_hand()
        f0 = make_frame(pose=make_pose(right_wrist=(0.2, 0.1)), right_hand=hand)
        f1 = make_frame(pose=make_pose(right_wrist=(0.8, 0.7)), right_hand=hand)
        profile = extract_profile(normalize(make_sequence([f0, f1])))
        # BASE_POSE: left shoulder at image x 0.65, right at 0.35, nose above;
        # image-down y flips, so image-left / image-above map to +x / +y
        assert profile.right.start_bucket != profile.right.end_bucket


class TestImportedEmbeddings:
    def test_parse_and_apply(self):
        table = parse_embedding_lines(
            "g1 R initial 1 0 0\n"
            "g1 R movement 0.5 0.5 -1\n"
        )
        profile = one_hand_profile()
        updated = apply_embeddings(profile, "g1", table)
        assert updated.right.initial_handshape.vector == (1.0, 0.0, 0.0)
        assert updated.right.initial_handshape.provenance == IMPORTED
        assert updated.right.movement.vector == (0.5, 0.5, -1.0)
        # untouched slots keep their native vectors
        assert updated.right.final_handshape == profile.right.final_handshape

    def test_other_gesture_untouched(self):
        table = parse_embedding_lines("g1 R initial 1 0\n")
        profile = one_hand_profile()
        assert apply_embeddings(profile, "g2", table) == profile

    def test_bad_hand_code(self):
        from gesticon.errors import MalformedLine
        with pytest.raises(MalformedLine):
            parse_embedding_lines("g1 X initial 1 0\n")

    def test_bad_slot(self):
        from gesticon.errors import MalformedLine
        with pytest.raises(MalformedLine):
            parse_embedding_lines("g1 R middle 1 0\n")

    def test_inconsistent_slot_dimension(self):
        from gesticon.errors import InconsistentDimension
        with pytest.raises(InconsistentDimension):
            parse_embedding_lines("g1 R initial 1 0\ng2 R initial 1 0 0\n")

    def test_non_numeric_value(self):
        from gesticon.errors import MalformedLine
        with pytest.raises(MalformedLine):
            parse_embedding_lines("g1 R initial 1 zero\n")
