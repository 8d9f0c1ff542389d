import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from vpart import (
    ConstantOne,
    GeometricWeights,
    LatticePathCount,
    LatticeVector,
    RuleWeight,
    StepMatrix,
    TruncatedSeries,
    certify_pointed,
    full_support_part,
    generalized_vp,
    geometric_inverse,
    iter_orthant,
    multinomial,
    substitute_monomial,
    weight_series,
)

import cases
import oracles


def xi(nvars, bound, exponent, coeff=1):
    return TruncatedSeries.monomial(nvars, LatticeVector.ones(nvars), bound, exponent, coeff)


def one(nvars, bound):
    return TruncatedSeries.one(nvars, LatticeVector.ones(nvars), bound)


rationals = st.fractions(min_value=-9, max_value=9, max_denominator=5)


@st.composite
def sparse_series(draw, nvars=2, bound=4):
    n_terms = draw(st.integers(0, 5))
    table = {}
    for _ in range(n_terms):
        exp = tuple(draw(st.integers(0, bound)) for _ in range(nvars))
        if sum(exp) <= bound:
            table[LatticeVector(exp)] = draw(rationals)
    return TruncatedSeries.with_total_degree(nvars, bound, table)


class TestConstruction:
    def test_window_enforced(self):
        with pytest.raises(ValueError):
            TruncatedSeries.with_total_degree(2, 2, {(2, 1): 1})
        with pytest.raises(ValueError):
            TruncatedSeries(2, LatticeVector((1, 1)), 2, {(-1, 0): 1})

    def test_zero_coefficients_dropped(self):
        s = TruncatedSeries.with_total_degree(2, 3, {(1, 0): 0, (0, 1): 2})
        assert s.support() == [LatticeVector((0, 1))]

    def test_dimension_checked(self):
        with pytest.raises(ValueError):
            TruncatedSeries.with_total_degree(2, 3, {(1, 0, 0): 1})


class TestArithmetic:
    def test_additive_identity_and_inverse(self):
        s = TruncatedSeries.with_total_degree(2, 3, {(1, 0): Fraction(2, 3), (0, 2): -1})
        zero = TruncatedSeries.zero(2, LatticeVector.ones(2), 3)
        assert s + zero == s
        assert (s - s).is_zero()

    def test_scalar_scaling(self):
        s = one(1, 3) + xi(1, 3, (1,))
        assert 2 * s == TruncatedSeries.with_total_degree(1, 3, {(0,): 2, (1,): 2})

    def test_telescoping_product(self):
        bound = 5
        geometric = TruncatedSeries.with_total_degree(1, bound, {(k,): 1 for k in range(bound + 1)})
        product = (one(1, bound) - xi(1, bound, (1,))) * geometric
        assert product == one(1, bound)

    def test_two_variable_product(self):
        product = (one(2, 2) + xi(2, 2, (1, 0))) * (one(2, 2) + xi(2, 2, (0, 1)))
        assert product == TruncatedSeries.with_total_degree(
            2, 2, {(0, 0): 1, (1, 0): 1, (0, 1): 1, (1, 1): 1}
        )

    def test_incompatible_windows_rejected(self):
        with pytest.raises(ValueError):
            one(2, 2) + one(2, 3)
        with pytest.raises(ValueError):
            one(2, 2) * one(1, 2)

    @given(sparse_series(), sparse_series(), sparse_series())
    @settings(max_examples=40)
    def test_ring_laws(self, a, b, c):
        assert a + b == b + a
        assert (a + b) + c == a + (b + c)
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


class TestProjections:
    def test_project_keeps_zero_exponents(self):
        s = weight_series(LatticePathCount(), 2, 4)
        projected = s.project(2)
        assert projected == TruncatedSeries.with_total_degree(
            2, 4, {(k, 0): 1 for k in range(5)}
        )

    def test_project_kills_mixed_terms(self):
        assert xi(2, 3, (1, 1)).project(1).is_zero()

    def test_projections_commute(self):
        s = weight_series(cases.random_table_weight(3, 3), 3, 4)
        assert s.project(1).project(3) == s.project(3).project(1)

    def test_project_set(self):
        s = weight_series(LatticePathCount(), 2, 4)
        assert s.project_set(()) == s
        assert s.project_set((1, 2)) == one(2, 4)
        assert s.project_set((2,)) == s.project(2)

    def test_project_set_validates(self):
        s = one(2, 3)
        with pytest.raises(ValueError):
            s.project_set((2, 1))
        with pytest.raises(ValueError):
            s.project_set((1, 3))
        with pytest.raises(ValueError):
            s.project(0)


class TestFullSupportPart:
    def test_all_ones_coefficients(self):
        s = weight_series(ConstantOne(), 2, 3)
        filtered = full_support_part(s)
        assert filtered == TruncatedSeries.with_total_degree(
            2, 3, {(1, 1): 1, (2, 1): 1, (1, 2): 1}
        )

    def test_series_without_one_variable_dies(self):
        s = weight_series(LatticePathCount(), 2, 4).project(2)
        assert full_support_part(s).is_zero()
        assert full_support_part(s, method="signed").is_zero()

    def test_fixed_point(self):
        s = xi(2, 3, (1, 1))
        assert full_support_part(s) == s

    @pytest.mark.parametrize("nvars", [1, 2, 3])
    def test_methods_agree(self, nvars):
        s = weight_series(cases.random_table_weight(11, nvars), nvars, 5)
        assert full_support_part(s, "filter") == full_support_part(s, "signed")

    @given(sparse_series(nvars=2, bound=4))
    @settings(max_examples=40)
    def test_methods_agree_on_random_series(self, s):
        assert full_support_part(s, "filter") == full_support_part(s, "signed")

    def test_unknown_method(self):
        with pytest.raises(ValueError):
            full_support_part(one(1, 1), method="fast")


class TestWeightSeries:
    def test_constant(self):
        assert weight_series(ConstantOne(), 2, 1) == TruncatedSeries.with_total_degree(
            2, 1, {(0, 0): 1, (1, 0): 1, (0, 1): 1}
        )

    def test_geometric(self):
        s = weight_series(GeometricWeights((Fraction(1, 2),)), 1, 2)
        assert s == TruncatedSeries.with_total_degree(
            1, 2, {(0,): 1, (1,): Fraction(1, 2), (2,): Fraction(1, 4)}
        )

    def test_path_counts(self):
        s = weight_series(LatticePathCount(), 2, 2)
        assert s == TruncatedSeries.with_total_degree(
            2, 2, {(0, 0): 1, (1, 0): 1, (0, 1): 1, (2, 0): 1, (1, 1): 2, (0, 2): 1}
        )

    def test_arity_checked(self):
        with pytest.raises(ValueError):
            weight_series(GeometricWeights((1,)), 2, 3)


class TestSubstitution:
    def test_steps_merge(self):
        A = cases.TWO_ONES
        cert = certify_pointed(A)
        s = xi(2, 3, (1, 0)) + xi(2, 3, (0, 1))
        image = substitute_monomial(s, A, cert, 3)
        assert image.coefficient((1,)) == 2

    def test_basis_substitution_renames(self):
        A = cases.BASIS_2D
        cert = certify_pointed(A)
        image = substitute_monomial(xi(2, 3, (1, 1)), A, cert, 3)
        assert image == TruncatedSeries(2, cert.functional, 3, {(1, 1): 1})

    def test_path_series_becomes_diagonal_counts(self):
        A = cases.DELANNOY
        cert = certify_pointed(A)
        s = weight_series(LatticePathCount(), 3, 4)
        image = substitute_monomial(s, A, cert, 4)
        assert image.coefficient((2, 2)) == 13
        for a in range(3):
            for b in range(3):
                if a + b <= 4:
                    assert image.coefficient((a, b)) == oracles.delannoy_number(a, b)

    def test_insufficient_bound_reported(self):
        A = cases.BASIS_2D
        cert = certify_pointed(A)
        with pytest.raises(ValueError):
            substitute_monomial(one(2, 2), A, cert, 3)

    @pytest.mark.parametrize("matrix", cases.MAIN_MATRICES)
    def test_image_coefficients_are_weighted_counts(self, matrix):
        # the defining link between the series route and the enumeration route
        cert = certify_pointed(matrix)
        phi = cases.random_table_weight(17, matrix.nsteps)
        image = substitute_monomial(weight_series(phi, matrix.nsteps, 5), matrix, cert, 5)
        for x in iter_orthant(cert.step_degrees, 5):
            target = matrix.apply(x)
            assert image.coefficient(target) == generalized_vp(matrix, cert, target, phi)


class TestGeometricInverse:
    def test_one_dimensional(self):
        A = cases.UNIT_1D
        cert = certify_pointed(A)
        assert geometric_inverse(A, cert, 3) == TruncatedSeries(
            1, cert.functional, 3, {(k,): 1 for k in range(4)}
        )

    def test_basis_gives_binomials(self):
        A = cases.BASIS_2D
        cert = certify_pointed(A)
        series = geometric_inverse(A, cert, 2)
        for a in range(3):
            for b in range(3):
                if a + b <= 2:
                    assert series.coefficient((a, b)) == oracles.pascal_coefficient(a, b)

    def test_delannoy_diagonal(self):
        A = cases.DELANNOY
        cert = certify_pointed(A)
        series = geometric_inverse(A, cert, 4)
        assert series.coefficient((2, 2)) == 13

    @pytest.mark.parametrize("matrix", cases.PATH_SERIES_MATRICES + [cases.MIXED_SIGN])
    def test_multiply_back(self, matrix):
        cert = certify_pointed(matrix)
        bound = 4
        inverse = geometric_inverse(matrix, cert, bound)
        denominator = TruncatedSeries.one(matrix.dim, cert.functional, bound)
        for col in matrix.columns:
            denominator = denominator - TruncatedSeries.monomial(
                matrix.dim, cert.functional, bound, col
            )
        assert denominator * inverse == TruncatedSeries.one(matrix.dim, cert.functional, bound)

    @pytest.mark.parametrize("matrix", cases.PATH_SERIES_MATRICES)
    def test_matches_walk_enumeration(self, matrix):
        cert = certify_pointed(matrix)
        series = geometric_inverse(matrix, cert, 4)
        walks = oracles.walk_endpoint_counts(matrix, cert, 4)
        for target, count in walks.items():
            assert series.coefficient(target) == count
        for target in series.support():
            assert walks.get(target, 0) == series.coefficient(target)


class TestLemmas:
    """The four structural properties of the projection calculus, at bound 6."""

    BOUND = 6
    NVARS = 3
    COEFFS = (Fraction(1, 2), Fraction(1, 3), Fraction(1, 6))

    def test_full_support_filter(self):
        phi = cases.random_table_weight(29, self.NVARS)
        s = weight_series(phi, self.NVARS, self.BOUND)
        filtered = full_support_part(s, "signed")
        ones = LatticeVector.ones(self.NVARS)
        for x in iter_orthant((1,) * self.NVARS, self.BOUND):
            expected = s.coefficient(x) if x.dominates(ones) else Fraction(0)
            assert filtered.coefficient(x) == expected

    def test_shifted_projection(self):
        # applying the alternating projection sum to xi_j * Phi shifts the weight
        phi = cases.random_table_weight(31, self.NVARS)
        s = weight_series(phi, self.NVARS, self.BOUND)
        ones = LatticeVector.ones(self.NVARS)
        for j in range(1, self.NVARS + 1):
            unit = LatticeVector.unit(self.NVARS, j)
            shifted = xi(self.NVARS, self.BOUND, unit) * s
            lhs = full_support_part(shifted, "signed")
            # the same alternating sum skipping axis j must give the same thing
            others = [a for a in range(1, self.NVARS + 1) if a != j]
            partial = TruncatedSeries.zero(self.NVARS, ones, self.BOUND)
            for size in range(len(others) + 1):
                for subset in itertools.combinations(others, size):
                    piece = shifted.project_set(subset)
                    partial = partial + (piece if size % 2 == 0 else -piece)
            assert lhs == partial
            from vpart import evaluate_weight

            for x in iter_orthant((1,) * self.NVARS, self.BOUND):
                if x.dominates(ones):
                    assert lhs.coefficient(x) == evaluate_weight(phi, x - unit)

    def test_annihilation_without_dependence(self):
        phi = cases.random_table_weight(37, self.NVARS)
        s = weight_series(phi, self.NVARS, self.BOUND).project(2)
        assert full_support_part(s, "signed").is_zero()

    def test_partial_fraction_split(self):
        # product form of the orthant series against its per-axis split
        n, bound, coeffs = self.NVARS, self.BOUND, self.COEFFS
        orthant = weight_series(ConstantOne(), n, bound)
        linear_inverse = weight_series(
            RuleWeight(
                lambda x: multinomial(x)
                * Fraction(
                    (coeffs[0] ** x.coords[0])
                    * (coeffs[1] ** x.coords[1])
                    * (coeffs[2] ** x.coords[2])
                ),
                arity=n,
            ),
            n,
            bound,
        )
        # sanity: it really is the inverse of 1 - <coeffs, variables>
        denominator = one(n, bound)
        for j, c in enumerate(coeffs, start=1):
            denominator = denominator - xi(n, bound, LatticeVector.unit(n, j), c)
        assert denominator * linear_inverse == one(n, bound)

        split = TruncatedSeries.zero(n, LatticeVector.ones(n), bound)
        for j, c in enumerate(coeffs, start=1):
            split = split + c * (orthant.project(j) * linear_inverse)
        assert split == orthant


class TestRendering:
    def test_delannoy_listing(self):
        A = cases.DELANNOY
        cert = certify_pointed(A)
        text = geometric_inverse(A, cert, 4).render()
        assert "(2,2) : 13/1" in text.splitlines()

    def test_graded_lex_lines(self):
        s = TruncatedSeries.with_total_degree(
            2, 2, {(0, 0): 1, (2, 0): Fraction(1, 3), (0, 1): -2, (1, 0): 5}
        )
        assert s.render() == "\n".join(
            ["(0,0) : 1/1", "(0,1) : -2/1", "(1,0) : 5/1", "(2,0) : 1/3"]
        )

    def test_zero_series_renders_empty(self):
        assert TruncatedSeries.zero(2, LatticeVector.ones(2), 1).render() == ""
