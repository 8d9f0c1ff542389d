from fractions import Fraction

import pytest

from vpart import (
    ConstantOne,
    LatticePathCount,
    LatticeVector,
    StepMatrix,
    TableWeight,
    certify_pointed,
    enumerate_solutions,
    generalized_vp,
    generalized_vp_table,
    integer_span_contains,
    vector_partition,
)

import cases
import oracles


def certified(matrix):
    return matrix, certify_pointed(matrix)


class TestEnumerate:
    def test_two_ones(self):
        A, cert = certified(cases.TWO_ONES)
        sols = enumerate_solutions(A, cert, LatticeVector((3,)))
        assert [s.coords for s in sols] == [(0, 3), (1, 2), (2, 1), (3, 0)]

    def test_delannoy_target(self):
        A, cert = certified(cases.DELANNOY)
        sols = enumerate_solutions(A, cert, LatticeVector((1, 1)))
        assert [s.coords for s in sols] == [(0, 0, 1), (1, 1, 0)]

    def test_negative_target_is_empty(self):
        A, cert = certified(cases.UNIT_1D)
        assert len(enumerate_solutions(A, cert, LatticeVector((-1,)))) == 0

    def test_dimension_mismatch(self):
        A, cert = certified(cases.BASIS_2D)
        with pytest.raises(ValueError):
            enumerate_solutions(A, cert, LatticeVector((1,)))

    @pytest.mark.parametrize("matrix", cases.MAIN_MATRICES)
    def test_matches_box_scan(self, matrix):
        A, cert = certified(matrix)
        spans = [max(abs(col.coords[i]) for col in A.columns) for i in range(A.dim)]
        seen = 0
        for candidate in _candidate_targets(spans, bound=6):
            if not -1 <= cert.degree(candidate) <= 6:
                continue
            expected = oracles.box_scan_solutions(A, cert, candidate)
            got = list(enumerate_solutions(A, cert, candidate))
            assert got == expected
            seen += len(expected)
        assert seen > 0

    @pytest.mark.parametrize("matrix", cases.MAIN_MATRICES)
    def test_solution_count_bound(self, matrix):
        A, cert = certified(matrix)
        for x in _orthant_sample(A, cert, 5):
            target = A.apply(x)
            budget = cert.degree(target)
            limit = 1
            for d in cert.step_degrees:
                limit *= 1 + budget // d
            assert len(enumerate_solutions(A, cert, target)) <= limit


def _candidate_targets(spans, bound):
    import itertools

    ranges = [range(-bound * s, bound * s + 1) for s in spans]
    for combo in itertools.product(*ranges):
        yield LatticeVector(combo)


def _orthant_sample(A, cert, bound):
    from vpart import iter_orthant

    return iter_orthant(cert.step_degrees, bound)


class TestCounts:
    def test_two_ones_count(self):
        A, cert = certified(cases.TWO_ONES)
        assert vector_partition(A, cert, LatticeVector((3,))) == 4

    def test_basis_unique(self):
        A, cert = certified(cases.BASIS_2D)
        assert vector_partition(A, cert, LatticeVector((7, 9))) == 1

    def test_delannoy_pair(self):
        A, cert = certified(cases.DELANNOY)
        assert vector_partition(A, cert, LatticeVector((1, 1))) == 2


class TestWeightedCounts:
    def test_first_coordinate_sum(self):
        # weight x -> x1 over x1 + x2 = 3 sums 0 + 1 + 2 + 3
        A, cert = certified(cases.TWO_ONES)
        table = TableWeight((3, 3), [Fraction(i) for i in range(4) for _ in range(4)])
        assert generalized_vp(A, cert, LatticeVector((3,)), table) == 6

    @pytest.mark.parametrize("matrix", cases.MAIN_MATRICES)
    def test_constant_weight_reduces_to_count(self, matrix):
        A, cert = certified(matrix)
        for x in _orthant_sample(A, cert, 4):
            target = A.apply(x)
            assert generalized_vp(A, cert, target, ConstantOne()) == vector_partition(
                A, cert, target
            )

    def test_delannoy_paths(self):
        A, cert = certified(cases.DELANNOY)
        assert generalized_vp(A, cert, LatticeVector((1, 1)), LatticePathCount()) == 3
        assert generalized_vp(A, cert, LatticeVector((2, 2)), LatticePathCount()) == 13

    def test_arity_mismatch(self):
        A, cert = certified(cases.DELANNOY)
        with pytest.raises(ValueError):
            generalized_vp(A, cert, LatticeVector((1, 1)), TableWeight((1, 1), [1, 1, 1, 1]))

    @pytest.mark.parametrize("matrix", cases.MAIN_MATRICES)
    def test_difference_equation_for_path_weights(self, matrix):
        # inherited recurrence: P(t) = sum_j P(t - step_j) on the shifted window
        A, cert = certified(matrix)
        phi = LatticePathCount()
        corner = A.column_sum()
        base = cert.degree(corner)
        for x in _orthant_sample(A, cert, 6 - base):
            target = corner + A.apply(x)
            total = sum(
                (generalized_vp(A, cert, target - col, phi) for col in A.columns),
                Fraction(0),
            )
            assert generalized_vp(A, cert, target, phi) == total


class TestTable:
    def test_basis_bound_one(self):
        A, cert = certified(cases.BASIS_2D)
        table = generalized_vp_table(A, cert, ConstantOne(), 1)
        assert {t.coords: v for t, v in table.items()} == {
            (0, 0): 1,
            (1, 0): 1,
            (0, 1): 1,
        }

    def test_two_ones_counts(self):
        A, cert = certified(cases.TWO_ONES)
        table = generalized_vp_table(A, cert, ConstantOne(), 2)
        assert {t.coords[0]: v for t, v in table.items()} == {0: 1, 1: 2, 2: 3}

    def test_delannoy_small_bound(self):
        A, cert = certified(cases.DELANNOY)
        table = generalized_vp_table(A, cert, LatticePathCount(), 2)
        assert {t.coords: v for t, v in table.items()} == {
            (0, 0): 1,
            (1, 0): 1,
            (0, 1): 1,
            (2, 0): 1,
            (1, 1): 3,
            (0, 2): 1,
        }
        assert LatticeVector((2, 2)) not in table

    def test_delannoy_larger_bound_reaches_diagonal(self):
        A, cert = certified(cases.DELANNOY)
        table = generalized_vp_table(A, cert, LatticePathCount(), 4)
        assert table[LatticeVector((2, 2))] == 13

    def test_gap_matrix_reports_explicit_zeros(self):
        A, cert = certified(cases.GAPPED)
        table = generalized_vp_table(A, cert, ConstantOne(), 7)
        values = {t.coords[0]: v for t, v in table.items()}
        assert values == {0: 1, 1: 0, 2: 1, 3: 1, 4: 1, 5: 1, 6: 2, 7: 1}

    def test_iteration_is_graded_lex(self):
        A, cert = certified(cases.DELANNOY)
        keys = list(generalized_vp_table(A, cert, ConstantOne(), 3))
        ordered = sorted(keys, key=lambda t: (cert.degree(t), t.coords))
        assert keys == ordered

    @pytest.mark.parametrize("matrix", cases.MAIN_MATRICES)
    def test_values_match_per_target_enumeration(self, matrix):
        A, cert = certified(matrix)
        phi = cases.random_table_weight(23, A.nsteps)
        table = generalized_vp_table(A, cert, phi, 5)
        for target, value in table.items():
            assert value == oracles.box_scan_weighted(A, cert, target, phi)


class TestIntegerSpan:
    def test_full_lattice(self):
        assert integer_span_contains(cases.BASIS_2D, LatticeVector((-3, 7)))

    def test_sublattice(self):
        A = cases.MIXED_SIGN  # index-3 sublattice: coordinates congruent mod 3
        assert integer_span_contains(A, LatticeVector((1, 1)))
        assert integer_span_contains(A, LatticeVector((3, 0)))
        assert not integer_span_contains(A, LatticeVector((1, 0)))

    def test_one_dimensional(self):
        A = StepMatrix([(2,)])
        assert integer_span_contains(A, LatticeVector((-4,)))
        assert not integer_span_contains(A, LatticeVector((3,)))
