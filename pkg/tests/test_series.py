"""Power series tests.

Covers: coefficient normalization and immutability, ring axioms (checked
property-style), the quasi-inverse contract, derivatives, the fixed-point
solver against the count table, coefficientwise identity verification
with deliberate corruption, and the numeric evaluation branch with its
singular endpoint.
"""
from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from deptrees import (
    PowerSeries,
    build_count_table,
    eval_T_numeric,
    solve_tree_gf,
    verify_functional_identity,
    z_times_derivative,
)
from deptrees.series import SINGULARITY_FLOAT, _shift_up, _zero_extend

coefficients = st.one_of(
    st.integers(-9, 9),
    st.fractions(min_value=-3, max_value=3, max_denominator=6),
)
series = st.lists(coefficients, min_size=1, max_size=7).map(PowerSeries)
delayed_series = st.lists(coefficients, min_size=1, max_size=6).map(
    lambda tail: PowerSeries([0] + tail)
)


class TestConstruction:
    def test_fraction_normalized_to_int(self):
        ps = PowerSeries([Fraction(4, 2), Fraction(1, 2)])
        assert ps.coeffs == (2, Fraction(1, 2))
        assert isinstance(ps.coeffs[0], int)

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            PowerSeries([])

    def test_rejects_non_rational(self):
        with pytest.raises(TypeError):
            PowerSeries([1.5])
        with pytest.raises(TypeError):
            PowerSeries(["2"])

    def test_immutable(self):
        ps = PowerSeries([1, 2])
        with pytest.raises(AttributeError):
            ps.coeffs = (0,)

    def test_constructors(self):
        assert PowerSeries.zero(3).coeffs == (0, 0, 0, 0)
        assert PowerSeries.monomial(3, 1).coeffs == (0, 1, 0, 0)
        assert PowerSeries.monomial(2, 0, coeff=5).coeffs == (5, 0, 0)
        with pytest.raises(ValueError):
            PowerSeries.monomial(2, 3)

    def test_order_and_coefficient(self):
        ps = PowerSeries([3, 1, 4])
        assert ps.order == 2
        assert ps.coefficient(2) == 4
        for bad in (-1, 3):
            with pytest.raises(IndexError):
                ps.coefficient(bad)

    def test_truncate(self):
        ps = PowerSeries([1, 2, 3])
        assert ps.truncate(1).coeffs == (1, 2)
        assert ps.truncate(2) == ps
        with pytest.raises(ValueError):
            ps.truncate(3)


class TestRingAxioms:
    @given(series, series)
    def test_addition_commutes(self, a, b):
        assert a + b == b + a

    @given(series, series, series)
    def test_addition_associates(self, a, b, c):
        assert (a + b) + c == a + (b + c)

    @given(series, series)
    def test_multiplication_commutes(self, a, b):
        assert a * b == b * a

    @given(series, series, series)
    @settings(deadline=None)
    def test_multiplication_associates(self, a, b, c):
        assert (a * b) * c == a * (b * c)

    @given(series, series, series)
    @settings(deadline=None)
    def test_distributivity(self, a, b, c):
        assert a * (b + c) == a * b + a * c

    @given(series)
    def test_identities(self, a):
        assert a + 0 == a
        assert a + (-a) == PowerSeries.zero(a.order)
        assert a * 1 == a
        one = PowerSeries.monomial(a.order, 0)
        assert one * a == a

    def test_additive_identity_and_inverse(self):
        one_plus_z = PowerSeries([1, 1])
        assert one_plus_z + 0 == one_plus_z
        T = solve_tree_gf(6)
        assert T + (-T) == PowerSeries.zero(6)

    @given(series)
    def test_scalar_arithmetic(self, a):
        assert (a + 5).coefficient(0) == a.coefficient(0) + 5
        assert 5 + a == a + 5
        assert (a - Fraction(1, 2)) + Fraction(1, 2) == a
        assert Fraction(1, 2) - a == -(a - Fraction(1, 2))
        assert (a * 3).coeffs == tuple(3 * c for c in a.coeffs)
        assert 3 * a == a * 3

    @given(series)
    def test_square_matches_product(self, a):
        assert a.square() == a * a

    @given(series, series)
    def test_truncation_to_smaller_order(self, a, b):
        n = min(a.order, b.order)
        assert (a + b).order == n
        assert (a * b).order == n


class TestQuasiInverse:
    def test_geometric_series(self):
        z = PowerSeries.monomial(5, 1)
        assert z.quasi_inverse().coeffs == (1, 1, 1, 1, 1, 1)

    def test_rejects_nonzero_constant(self):
        with pytest.raises(ValueError):
            PowerSeries([1, 1]).quasi_inverse()

    @given(delayed_series)
    def test_defining_property(self, a):
        one = PowerSeries.monomial(a.order, 0)
        assert (1 - a) * a.quasi_inverse() == one

    def test_forest_counts(self):
        # 1/(1-T) enumerates forests
        T = solve_tree_gf(8)
        table = build_count_table(8)
        assert T.quasi_inverse().coeffs == tuple(table.s[:9])


class TestDerivative:
    def test_basic(self):
        ps = PowerSeries([7, 1, 3, 5])
        assert ps.derivative().coeffs == (1, 6, 15)

    def test_order_zero(self):
        assert PowerSeries([7]).derivative().coeffs == (0,)

    @given(series)
    def test_z_times_derivative_scales_indices(self, a):
        zd = z_times_derivative(a)
        assert zd.order == a.order
        assert zd.coeffs == tuple(k * c for k, c in enumerate(a.coeffs))

    @given(series, series)
    @settings(deadline=None)
    def test_leibniz_rule(self, a, b):
        n = min(a.order, b.order)
        lhs = (a * b).derivative()
        rhs = a.derivative() * b.truncate(n) + a.truncate(n) * b.derivative()
        assert lhs == rhs.truncate(n - 1) if n >= 1 else True


class TestHelpers:
    def test_shift_up(self):
        assert _shift_up(PowerSeries([1, 2, 3])).coeffs == (0, 1, 2)

    def test_zero_extend(self):
        ps = PowerSeries([1, 2])
        assert _zero_extend(ps, 4).coeffs == (1, 2, 0, 0, 0)
        assert _zero_extend(ps, 1).coeffs == (1, 2)
        assert _zero_extend(ps, 0).coeffs == (1,)


class TestTreeGF:
    def test_coefficients_match_table(self):
        T = solve_tree_gf(40)
        table = build_count_table(40)
        assert T.coeffs == tuple(table.t)
        assert T.order == 40

    def test_single_term(self):
        assert solve_tree_gf(1).coeffs == (0, 1)

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            solve_tree_gf(0)

    def test_identity_holds(self):
        for n in (1, 2, 8, 33):
            assert verify_functional_identity(solve_tree_gf(n)) == n

    def test_identity_detects_corruption(self):
        T = solve_tree_gf(12)
        for k in (2, 7, 12):
            coeffs = list(T.coeffs)
            coeffs[k] += 1
            assert verify_functional_identity(PowerSeries(coeffs)) == k - 1

    def test_identity_fails_at_zero_for_wrong_start(self):
        assert verify_functional_identity(PowerSeries.zero(5)) == 0
        assert verify_functional_identity(PowerSeries([1, 1, 1])) == 0

    def test_derivative_identity(self):
        T = solve_tree_gf(48)
        lhs = z_times_derivative(T)
        rhs = T * (1 - T) * (3 * T).quasi_inverse()
        assert lhs == rhs


class TestNumericBranch:
    def test_domain(self):
        for bad in (-1e-9, SINGULARITY_FLOAT + 1e-9, 1.0):
            with pytest.raises(ValueError):
                eval_T_numeric(bad)

    def test_endpoints(self):
        assert eval_T_numeric(0.0) == 0.0
        assert eval_T_numeric(SINGULARITY_FLOAT) == pytest.approx(1 / 3, abs=1e-9)

    def test_residual_and_range(self):
        for i in range(33):
            z = SINGULARITY_FLOAT * i / 32
            x = eval_T_numeric(z)
            assert 0.0 <= x <= 1 / 3 + 1e-15
            assert abs(x * (1 - x) ** 2 - z) <= 1e-12

    def test_monotone(self):
        values = [eval_T_numeric(SINGULARITY_FLOAT * i / 64) for i in range(65)]
        assert all(a <= b for a, b in zip(values, values[1:]))

    def test_small_z_linear_regime(self):
        # T(z) = z + 2z^2 + O(z^3)
        z = 1e-6
        assert eval_T_numeric(z) == pytest.approx(z + 2 * z * z, rel=1e-6)
