"""Domain types and exact arithmetic primitives."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import bit_vectors, int_curves, rat_curves, rational_coord, vector_pairs
from ovgeom.core import (
    OvInstance,
    Rat,
    as_integer_grid,
    bit_vector,
    curve,
    inner_product,
    ov_instance,
    point,
    sq_dist,
    squared_euclidean,
)


class TestInnerProduct:
    def test_zero_vector(self):
        assert inner_product((0, 0, 0), (1, 1, 1)) == 0

    def test_single_overlap(self):
        assert inner_product((1, 0, 1), (1, 1, 0)) == 1

    def test_all_ones(self):
        assert inner_product((1, 1), (1, 1)) == 2

    def test_length_mismatch(self):
        with pytest.raises(ValueError, match="mismatch"):
            inner_product((1, 0), (1, 0, 1))

    @given(vector_pairs())
    def test_matches_overlap_count(self, pair):
        a, b = pair
        overlap = sum(1 for x, y in zip(a, b) if x == 1 and y == 1)
        assert inner_product(a, b) == overlap
        assert inner_product(b, a) == overlap

    @given(vector_pairs())
    def test_zero_iff_disjoint_support(self, pair):
        a, b = pair
        disjoint = all(not (x and y) for x, y in zip(a, b))
        assert (inner_product(a, b) == 0) == disjoint


class TestSquaredEuclidean:
    def test_identity(self):
        assert squared_euclidean(point((0, 0)), point((0, 0))) == 0

    def test_three_four_five(self):
        assert squared_euclidean(point((0, 0)), point((3, 4))) == 25

    def test_unit_offsets(self):
        assert squared_euclidean(point((1, 3)), point((0, 2))) == 2

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError, match="mismatch"):
            squared_euclidean(point((1,)), point((1, 2)))

    @given(st.lists(st.tuples(rational_coord, rational_coord), min_size=1, max_size=6))
    def test_symmetry_and_zero_iff_equal(self, pairs):
        p = point([x for x, _ in pairs])
        q = point([y for _, y in pairs])
        assert squared_euclidean(p, q) == squared_euclidean(q, p)
        assert (squared_euclidean(p, q) == 0) == (p == q)
        assert squared_euclidean(p, q) >= 0


class TestRatExactness:
    @given(
        st.fractions(max_denominator=1000),
        st.fractions(max_denominator=1000),
    )
    def test_add_then_subtract_is_identity(self, x, y):
        assert (x + y) - y == x

    @given(
        st.fractions(max_denominator=100),
        st.fractions(max_denominator=100),
        st.fractions(max_denominator=100),
    )
    def test_associativity(self, x, y, z):
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)

    def test_rat_is_lowest_terms(self):
        r = Rat(6, 4)
        assert (r.numerator, r.denominator) == (3, 2)


class TestValidators:
    def test_bit_vector_rejects_non_bits(self):
        with pytest.raises(ValueError, match="0 or 1"):
            bit_vector((0, 2))
        with pytest.raises(ValueError, match="length >= 1"):
            bit_vector(())

    def test_point_coerces_mixed_tokens(self):
        assert point((1, "1/2", Fraction(3, 4))) == (Rat(1), Rat(1, 2), Rat(3, 4))
        with pytest.raises(ValueError, match="dimension >= 1"):
            point(())

    def test_curve_needs_planar_vertices(self):
        with pytest.raises(ValueError, match="at least one vertex"):
            curve(())
        with pytest.raises(ValueError, match="2-dimensional"):
            curve(((1, 2, 3),))

    def test_sq_dist_rejects_negative(self):
        assert sq_dist("9/4") == Rat(9, 4)
        with pytest.raises(ValueError, match=">= 0"):
            sq_dist(-1)


class TestOvInstance:
    def test_builder_infers_dimension(self):
        inst = ov_instance([(1, 0)], [(0, 1), (1, 1)])
        assert (inst.n_a, inst.n_b, inst.d) == (1, 2, 2)

    def test_rejects_ragged_vectors(self):
        with pytest.raises(ValueError, match="dimension"):
            ov_instance([(1, 0)], [(0,)])

    def test_rejects_empty_side(self):
        with pytest.raises(ValueError):
            ov_instance([], [(1,)])
        with pytest.raises(ValueError, match="non-empty"):
            OvInstance(((1,),), (), 1)

    def test_rejects_non_bits(self):
        with pytest.raises(ValueError):
            OvInstance(((2,),), ((1,),), 1)

    def test_immutable(self):
        inst = ov_instance([(1,)], [(0,)])
        with pytest.raises(AttributeError):
            inst.d = 2

    @given(bit_vectors(max_d=6))
    def test_round_numbers(self, vec):
        inst = ov_instance([vec], [vec])
        assert inst.d == len(vec)


class TestIntegerGrid:
    @given(rat_curves(), rat_curves())
    def test_scale_reproduces_coordinates(self, c1, c2):
        p, q = curve(c1), curve(c2)
        (ip, iq), scale = as_integer_grid([p, q])
        assert scale >= 1 and isinstance(scale, int)
        for orig, scaled in ((p, ip), (q, iq)):
            for (x, y), (sx, sy) in zip(orig, scaled):
                assert isinstance(sx, int) and isinstance(sy, int)
                assert Rat(sx, scale) == x and Rat(sy, scale) == y

    @given(rat_curves(max_len=3), rat_curves(max_len=3))
    def test_squared_distances_scale_by_square(self, c1, c2):
        p, q = curve(c1), curve(c2)
        (ip, iq), scale = as_integer_grid([p, q])
        for (px, py), v in zip(ip, p):
            for (qx, qy), w in zip(iq, q):
                grid_sq = (px - qx) ** 2 + (py - qy) ** 2
                assert Rat(grid_sq, scale * scale) == squared_euclidean(v, w)

    def test_integer_input_scale_is_one(self):
        (grid,), scale = as_integer_grid([curve(((1, 2), (3, 4)))])
        assert scale == 1 and grid == [(1, 2), (3, 4)]
