"""Domain-type tests: pair indexing, distances, configurations, masses."""

import json
import math
import random
from fractions import Fraction
from itertools import combinations

import pytest

from distgeom import (
    DimensionMismatch,
    DistanceVector,
    InputFormatError,
    MassParams,
    PairIndex,
    PairSpace,
    PointConfiguration,
    affine_rank,
    distances,
    elementary_symmetric,
    is_singular,
)
from distgeom import sampling


class TestPairIndex:
    def test_canonicalizes_order(self):
        assert PairIndex(2, 0) == PairIndex(0, 2)
        assert PairIndex(2, 0).i == 0
        assert PairIndex(2, 0).j == 2

    def test_rejects_equal_and_negative(self):
        with pytest.raises(ValueError):
            PairIndex(1, 1)
        with pytest.raises(ValueError):
            PairIndex(-1, 2)

    def test_label_is_one_based(self):
        assert PairIndex(0, 1).label == "1,2"
        assert PairIndex(2, 4).label == "3,5"

    def test_sorts_lexicographically(self):
        pairs = [PairIndex(1, 2), PairIndex(0, 2), PairIndex(0, 1)]
        assert sorted(pairs) == [PairIndex(0, 1), PairIndex(0, 2), PairIndex(1, 2)]


class TestPairSpace:
    def test_enumeration_matches_combinations(self):
        for n in range(1, 9):
            space = PairSpace(n)
            expected = [PairIndex(i, j) for i, j in combinations(range(n), 2)]
            assert list(space.pairs) == expected
            assert space.size == n * (n - 1) // 2

    def test_rank_unrank_roundtrip(self):
        space = PairSpace(7)
        for k, pair in enumerate(space.pairs):
            assert space.rank(pair) == k
            assert space.unrank(k) == pair

    def test_rank_rejects_foreign_pair(self):
        with pytest.raises(ValueError):
            PairSpace(3).rank(PairIndex(0, 5))


class TestDistanceVector:
    def test_from_sequence_in_pair_order(self):
        r = DistanceVector(3, [3, 7, 4])
        assert r.get(0, 1) == 3
        assert r.get(1, 0) == 3
        assert r.get(2, 1) == 4
        assert r.sq(0, 2) == 49
        assert r.get(1, 1) == 0
        assert r.sq(2, 2) == 0

    def test_from_mapping(self):
        r = DistanceVector(3, {(1, 0): 3, (0, 2): 7, (2, 1): 4})
        assert r.values == (3, 7, 4)

    def test_wrong_count_rejected(self):
        with pytest.raises(DimensionMismatch):
            DistanceVector(3, [1, 2])
        with pytest.raises(DimensionMismatch):
            DistanceVector(3, {(0, 1): 1})

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            DistanceVector(2, [-1])
        with pytest.raises(ValueError):
            DistanceVector.from_squared(2, [Fraction(-1, 2)])

    def test_exact_squares_from_rational_distances(self):
        r = DistanceVector(2, [Fraction(3, 2)])
        assert r.sq(0, 1) == Fraction(9, 4)

    def test_exact_root_recovered_from_perfect_square(self):
        r = DistanceVector.from_squared(2, [Fraction(9, 4)])
        assert r.get(0, 1) == Fraction(3, 2)

    def test_irrational_root_falls_back_to_float(self):
        r = DistanceVector.from_squared(2, [2])
        assert r.get(0, 1) == pytest.approx(math.sqrt(2))
        assert r.sq(0, 1) == 2

    def test_json_roundtrip_exact(self):
        r = DistanceVector(3, [Fraction(1, 3), 2, Fraction(7, 2)])
        doc = json.loads(r.to_json())
        assert doc["r"]["1,2"] == "1/3"
        assert doc["r"]["1,3"] == 2
        back = DistanceVector.from_json(r.to_json())
        assert back == r

    def test_json_rejects_bad_labels(self):
        with pytest.raises(InputFormatError):
            DistanceVector.from_json_dict({"n": 3, "r": {"1,2": 1, "1,4": 1, "2,3": 1}})
        with pytest.raises(InputFormatError):
            DistanceVector.from_json_dict({"n": 2, "r": {"nope": 1}})

    def test_json_decimal_is_exact_in_exact_mode(self):
        back = DistanceVector.from_json('{"n": 2, "r": {"1,2": 0.1}}', exact=True)
        assert back.get(0, 1) == Fraction(1, 10)


class TestPointConfiguration:
    def test_dimension_consistency(self):
        with pytest.raises(DimensionMismatch):
            PointConfiguration([(0, 0), (1,)])

    def test_json_roundtrip(self):
        cfg = PointConfiguration([(Fraction(1, 2), 0), (1, 1)])
        back = PointConfiguration.from_json(cfg.to_json())
        assert back == cfg
        assert back.points[0][0] == Fraction(1, 2)

    def test_json_requires_matching_counts(self):
        with pytest.raises(InputFormatError):
            PointConfiguration.from_json_dict({"n": 2, "d": 1, "points": [[0]]})
        with pytest.raises(InputFormatError):
            PointConfiguration.from_json_dict({"n": 1, "d": 2, "points": [[0]]})

    def test_transformed_applies_map_and_shift(self):
        cfg = PointConfiguration([(1, 0), (0, 1)])
        rotated = cfg.transformed([(0, -1), (1, 0)], (10, 0))
        assert rotated.points == ((10, 1), (9, 0))


class TestDistances:
    def test_collinear_integer_points_give_exact_distances(self):
        cfg = PointConfiguration([(0,), (3,), (7,)])
        assert distances(cfg).values == (3, 7, 4)

    def test_matches_bruteforce_norms(self):
        rng = random.Random(20250815)
        for _ in range(25):
            n = rng.randint(2, 6)
            d = rng.randint(1, 4)
            cfg = sampling.random_configuration(rng, n, d)
            r = distances(cfg)
            for i in range(n):
                for j in range(i + 1, n):
                    expected = sum(
                        (a - b) ** 2 for a, b in zip(cfg.points[i], cfg.points[j])
                    )
                    assert r.sq(i, j) == expected

    def test_rigid_motion_preserves_distances_exactly(self):
        # Rational rotation from the (3,4,5) triple, plus a translation.
        rng = random.Random(7)
        rot = [
            (Fraction(3, 5), Fraction(-4, 5)),
            (Fraction(4, 5), Fraction(3, 5)),
        ]
        for _ in range(20):
            cfg = sampling.random_configuration(rng, 5, 2)
            moved = cfg.transformed(rot, (Fraction(9, 7), -3))
            assert distances(moved) == distances(cfg)

    def test_permuting_coordinates_preserves_distances(self):
        rng = random.Random(8)
        perm = [(0, 0, 1), (1, 0, 0), (0, 1, 0)]
        for _ in range(10):
            cfg = sampling.random_configuration(rng, 4, 3)
            assert distances(cfg.transformed(perm)) == distances(cfg)


class TestSingularity:
    def test_coplanar_points_in_three_space(self):
        cfg = PointConfiguration(
            [(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0)]
        )
        assert affine_rank(cfg) == 2
        assert is_singular(cfg)

    def test_simplex_is_nonsingular(self):
        cfg = PointConfiguration([(0, 0), (1, 0), (0, 1)])
        assert not is_singular(cfg)

    def test_single_point_is_nonsingular(self):
        assert not is_singular(PointConfiguration([(5, 5)]))

    def test_two_coincident_points_are_singular(self):
        cfg = PointConfiguration([(1, 2), (1, 2)])
        assert is_singular(cfg)

    def test_float_rank_uses_relative_threshold(self):
        cfg = PointConfiguration(
            [(0.0, 0.0), (1.0, 0.0), (0.5, 1e-14)]
        )
        assert is_singular(cfg)

    def test_embedding_dimension_bound(self):
        # Four points in the plane always lie in a 2-dimensional span.
        rng = random.Random(11)
        for _ in range(10):
            cfg = sampling.random_configuration(rng, 4, 2)
            assert affine_rank(cfg) <= 2
            assert is_singular(cfg)


class TestElementarySymmetric:
    def test_frozen_value(self):
        # Oracle: 2*3 + 2*5 + 3*5 = 31.
        assert elementary_symmetric(2, [2, 3, 5]) == 31

    def test_matches_subset_enumeration(self):
        rng = random.Random(13)
        for _ in range(20):
            n = rng.randint(1, 7)
            values = [Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(n)]
            for k in range(n + 1):
                oracle = sum(
                    math.prod(combo) for combo in combinations(values, k)
                )
                assert elementary_symmetric(k, values) == oracle

    def test_bounds(self):
        assert elementary_symmetric(0, [4, 5]) == 1
        with pytest.raises(ValueError):
            elementary_symmetric(3, [4, 5])
        with pytest.raises(ValueError):
            elementary_symmetric(-1, [4, 5])


class TestMassParams:
    def test_from_masses_is_exact_inverse(self):
        params = MassParams.from_masses([2, Fraction(1, 3), 5])
        assert params.alpha == (Fraction(1, 2), 3, Fraction(1, 5))
        for m, a in zip([2, Fraction(1, 3), 5], params.alpha):
            assert m * a == 1

    def test_zero_mass_rejected(self):
        with pytest.raises(ValueError):
            MassParams.from_masses([1, 0])

    def test_needs_entries(self):
        with pytest.raises(DimensionMismatch):
            MassParams(())
