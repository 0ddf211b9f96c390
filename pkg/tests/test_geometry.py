"""Right-angle predicate, witness search, layer construction, and bounds."""

import random
from itertools import permutations

import pytest

from rightangles import (
    bounds_table,
    construction_layer,
    default_field,
    errors,
    fe_mul,
    find_right_angle,
    is_right_angle,
    lower_bound_size,
    point_from_ints,
    point_set,
    point_set_from_ints,
    space_points,
    translate,
    triple_value,
    upper_bound,
)

F3 = default_field(3)


def brute_force_has_right_angle(A):
    """Full ordered-triple enumeration through the public predicate only."""
    pts = A.points
    for x, y, z in permutations(pts, 3):
        if is_right_angle(x, y, z, A.field):
            return True
    return False


class TestPredicate:
    def test_distinctness_required(self):
        x = point_from_ints(F3, [0, 0])
        y = point_from_ints(F3, [1, 0])
        assert not is_right_angle(x, x, y, F3)
        assert not is_right_angle(x, y, y, F3)

    def test_orthogonal_unit_arms(self):
        x = point_from_ints(F3, [0, 0])
        y = point_from_ints(F3, [1, 0])
        z = point_from_ints(F3, [0, 1])
        assert is_right_angle(x, y, z, F3)

    def test_weight_two_triple_in_dimension_five(self):
        # <z-x, y-x> = 1+1+0+1+0 = 3 = 0 mod 3
        x = point_from_ints(F3, [1, 1, 0, 0, 0])
        y = point_from_ints(F3, [0, 0, 1, 1, 0])
        z = point_from_ints(F3, [0, 0, 0, 1, 1])
        assert triple_value(x, y, z, F3) == F3.zero
        assert is_right_angle(x, y, z, F3)

    def test_arm_symmetry(self):
        rng = random.Random(11)
        pts = space_points(F3, 3)
        for _ in range(300):
            x, y, z = rng.sample(pts, 3)
            assert is_right_angle(x, y, z, F3) == is_right_angle(x, z, y, F3)

    def test_dimension_mismatch(self):
        with pytest.raises(errors.DimensionMismatch):
            triple_value(
                point_from_ints(F3, [0, 0]),
                point_from_ints(F3, [1, 0]),
                point_from_ints(F3, [0, 1, 1]),
                F3,
            )


class TestFindRightAngle:
    def test_full_line_is_free(self):
        # (z-x)(y-x) is a product of nonzero field elements
        line = point_set_from_ints(F3, 1, [[0], [1], [2]])
        assert find_right_angle(line) is None

    def test_unit_corner_witness(self):
        A = point_set_from_ints(F3, 2, [[0, 0], [1, 0], [0, 1]])
        w = find_right_angle(A)
        assert w is not None
        assert w.vertex_index == 0
        assert (w.arm1_index, w.arm2_index) == (1, 2)
        assert w.value == F3.zero

    def test_matches_brute_force_on_random_sets(self):
        rng = random.Random(23)
        pts = space_points(F3, 2)
        for _ in range(60):
            size = rng.randint(1, 7)
            A = point_set(F3, 2, rng.sample(pts, size))
            assert (find_right_angle(A) is None) == (not brute_force_has_right_angle(A))

    def test_witness_is_lexicographically_first(self):
        rng = random.Random(31)
        pts = space_points(F3, 2)
        for _ in range(40):
            A = point_set(F3, 2, rng.sample(pts, 6))
            w = find_right_angle(A)
            expected = None
            for vx in range(6):
                for a1 in range(6):
                    for a2 in range(a1 + 1, 6):
                        if vx in (a1, a2):
                            continue
                        if is_right_angle(A.points[vx], A.points[a1], A.points[a2], F3):
                            expected = (vx, a1, a2)
                            break
                    if expected:
                        break
                if expected:
                    break
            got = None if w is None else (w.vertex_index, w.arm1_index, w.arm2_index)
            assert got == expected


class TestConstructionLayer:
    def test_single_point_layer(self):
        layer = construction_layer(2, 3)
        assert layer.points == (point_from_ints(F3, [1, 1]),)

    def test_sizes(self):
        assert len(construction_layer(4, 3)) == 6
        assert len(construction_layer(5, 3)) == 10

    def test_entries_are_zero_one_of_weight_q_minus_1(self):
        layer = construction_layer(5, 3)
        one, zero = F3.one, F3.zero
        for pt in layer.points:
            assert all(c in (zero, one) for c in pt)
            assert sum(1 for c in pt if c == one) == 2

    def test_bad_dimension(self):
        with pytest.raises(errors.BadDimension):
            construction_layer(1, 3)

    def test_layer_verdicts_are_empirical(self):
        # the weight-2 layers over F_3 contain right angles from n = 4 on,
        # confirmed here against the ordered brute-force oracle
        for n, expect_angle in [(2, False), (3, False), (4, True), (5, True)]:
            layer = construction_layer(n, 3)
            w = find_right_angle(layer)
            assert (w is not None) == expect_angle
            assert brute_force_has_right_angle(layer) == expect_angle

    def test_documented_triple_lies_in_layer_5_3(self):
        layer = construction_layer(5, 3)
        x = point_from_ints(F3, [1, 1, 0, 0, 0])
        y = point_from_ints(F3, [0, 0, 1, 1, 0])
        z = point_from_ints(F3, [0, 0, 0, 1, 1])
        assert {x, y, z} <= set(layer.points)
        assert find_right_angle(layer) is not None


class TestBounds:
    def test_upper_bound_values(self):
        assert upper_bound(1, 3) == 9
        assert upper_bound(2, 3) == 13
        assert upper_bound(10, 3) == 81

    def test_upper_bound_needs_odd_q(self):
        with pytest.raises(errors.EvenCharacteristic):
            upper_bound(3, 2)

    def test_lower_bound_size_values(self):
        assert lower_bound_size(4, 3) == 6
        assert lower_bound_size(5, 3) == 10
        assert lower_bound_size(2, 3) == 1  # n = q-1

    def test_lower_bound_bad_dimension(self):
        with pytest.raises(errors.BadDimension):
            lower_bound_size(1, 3)

    def test_bounds_table_rows(self):
        rows = bounds_table(3, 3, exact={1: (3, "exact")})
        assert [r.upper for r in rows] == [9, 13, 18]
        assert rows[0].exact == 3 and rows[0].status == "exact"
        even_rows = bounds_table(3, 2)
        assert all(r.upper is None for r in even_rows)


class TestTranslate:
    def test_identity(self):
        A = point_set_from_ints(F3, 2, [[0, 0], [1, 2]])
        assert translate(A, point_from_ints(F3, [0, 0])) == A

    def test_wraparound(self):
        A = point_set_from_ints(F3, 2, [[1, 1]])
        moved = translate(A, point_from_ints(F3, [2, 2]))
        assert moved.points == (point_from_ints(F3, [0, 0]),)

    def test_preserves_freeness(self):
        rng = random.Random(5)
        pts = space_points(F3, 2)
        for _ in range(50):
            A = point_set(F3, 2, rng.sample(pts, rng.randint(2, 6)))
            v = rng.choice(pts)
            assert (find_right_angle(A) is None) == (find_right_angle(translate(A, v)) is None)

    def test_dimension_mismatch(self):
        A = point_set_from_ints(F3, 2, [[0, 0]])
        with pytest.raises(errors.DimensionMismatch):
            translate(A, point_from_ints(F3, [1]))


class TestInvariances:
    @pytest.mark.parametrize("q", [3, 5, 9])
    def test_translation_and_scaling(self, q):
        F = default_field(q)
        rng = random.Random(q * 101)
        pts = space_points(F, 2)
        nonzero = [e for e in F.elements() if e != F.zero]
        from rightangles import fe_add

        for _ in range(400):
            x, y, z = (rng.choice(pts) for _ in range(3))
            v = rng.choice(pts)
            lam = rng.choice(nonzero)
            base = is_right_angle(x, y, z, F)
            shift = lambda p: tuple(fe_add(c, w, F) for c, w in zip(p, v))
            scale = lambda p: tuple(fe_mul(lam, c, F) for c in p)
            assert is_right_angle(shift(x), shift(y), shift(z), F) == base
            assert is_right_angle(scale(x), scale(y), scale(z), F) == base


@pytest.mark.parametrize("q", [3, 5, 7, 9, 11, 13, 25, 27, 49])
def test_full_line_free_for_all_supported_orders(q):
    F = default_field(q)
    line = point_set(F, 1, ((e,) for e in F.elements()))
    assert find_right_angle(line) is None


def test_duplicate_points_rejected():
    with pytest.raises(errors.DuplicatePoint):
        point_set_from_ints(F3, 2, [[0, 0], [0, 0]])
