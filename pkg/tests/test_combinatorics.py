"""Exact counting and log-scale fraction arithmetic."""

from __future__ import annotations

import decimal
import math

import pytest
from hypothesis import given, strategies as st

from nflkit.combinatorics import (
    FractionRow,
    LogFraction,
    binomial,
    count_all_subsets,
    count_cup_subsets,
    count_histograms,
    cup_fraction,
    fraction_table,
    log10_int,
    log10_ratio,
    multinomial,
)
from nflkit.core import Histogram, SpaceSignature

import oracles


def decimal_log10(n: int) -> decimal.Decimal:
    """High-precision base-10 log of a big integer, via the decimal module."""
    with decimal.localcontext() as ctx:
        ctx.prec = 60
        return decimal.Decimal(n).ln() / decimal.Decimal(10).ln()


class TestBinomial:
    def test_small_values(self):
        assert binomial(4, 2) == 6
        assert binomial(9, 8) == 9
        assert binomial(0, 0) == 1

    def test_out_of_range_k_is_zero(self):
        assert binomial(3, 5) == 0
        assert binomial(3, -1) == 0

    def test_negative_n_rejected(self):
        with pytest.raises(ValueError):
            binomial(-1, 0)

    @given(st.integers(min_value=0, max_value=40), st.integers(min_value=0, max_value=40))
    def test_matches_pascal_recurrence(self, n, k):
        assert binomial(n, k) == oracles.pascal_binomial(n, k)


class TestMultinomial:
    def test_sequence_inputs(self):
        assert multinomial([2, 1]) == 3
        assert multinomial([1, 1, 1]) == 6
        assert multinomial([3, 0]) == 1
        assert multinomial([2, 2]) == 6

    def test_histogram_input(self):
        h = Histogram(SpaceSignature(4, 3), (1, 2, 1))
        assert multinomial(h) == 12

    def test_equals_orbit_size(self):
        # the orbit of a function is exactly the rearrangements of its values
        assert multinomial([2, 1]) == len(oracles.brute_orbit((0, 0, 1)))
        assert multinomial([1, 2, 1]) == len(oracles.brute_orbit((0, 1, 1, 2)))


class TestCounts:
    def test_histogram_counts(self):
        assert count_histograms(SpaceSignature(2, 2)) == 3
        assert count_histograms(SpaceSignature(3, 2)) == 4
        assert count_histograms(SpaceSignature(8, 2)) == 9

    def test_cup_subset_counts(self):
        assert count_cup_subsets(SpaceSignature(2, 2)) == 7
        assert count_cup_subsets(SpaceSignature(3, 2)) == 15
        assert count_cup_subsets(SpaceSignature(2, 3)) == 63

    def test_all_subset_counts(self):
        assert count_all_subsets(SpaceSignature(2, 2)) == 15
        assert count_all_subsets(SpaceSignature(3, 2)) == 255

    def test_cup_counts_match_exhaustive_closure_sweep(self):
        for x, y in [(1, 2), (2, 2), (3, 2), (2, 3)]:
            assert count_cup_subsets(SpaceSignature(x, y)) == oracles.count_closed_subsets(x, y)


class TestLog10:
    def test_log10_int_exact_powers(self):
        assert log10_int(1) == 0.0
        assert abs(log10_int(10**50) - 50.0) < 1e-9

    def test_log10_int_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            log10_int(0)

    def test_log10_ratio_small(self):
        assert abs(log10_ratio(1000, 10) - 2.0) < 1e-12
        assert abs(log10_ratio(15, 255) - math.log10(15 / 255)) < 1e-12

    def test_log10_ratio_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            log10_ratio(0, 5)
        with pytest.raises(ValueError):
            log10_ratio(5, 0)

    def test_log10_ratio_huge_operands(self):
        # operands far beyond float range; check against 60-digit decimal logs
        num = 2**9 - 1
        den = 2**256 - 1
        expected = float(decimal_log10(num) - decimal_log10(den))
        assert abs(log10_ratio(num, den) - expected) < 1e-9

    @given(st.integers(min_value=200, max_value=4000), st.integers(min_value=200, max_value=4000))
    def test_log10_ratio_property(self, a, b):
        num = 2**a - 1
        den = 2**b + 1
        expected = float(decimal_log10(num) - decimal_log10(den))
        assert abs(log10_ratio(num, den) - expected) < 1e-9


class TestCupFraction:
    def test_small_case(self):
        lf = cup_fraction(SpaceSignature(3, 2))
        assert isinstance(lf, LogFraction)
        assert abs(lf.log10_value - math.log10(15 / 255)) < 1e-12
        assert lf.exact_numerator_bits == (15).bit_length()
        assert lf.exact_denominator_bits == (255).bit_length()

    def test_eight_two_frozen_value(self):
        lf = cup_fraction(SpaceSignature(8, 2))
        expected = float(decimal_log10(2**9 - 1) - decimal_log10(2**256 - 1))
        assert abs(lf.log10_value - expected) < 1e-9
        assert round(lf.log10_value, 1) == -74.4


class TestFractionTable:
    def test_row_order_and_shape(self):
        rows = fraction_table(range(1, 8), [2, 3, 4])
        assert len(rows) == 21
        assert [(r.x_size, r.y_size) for r in rows[:4]] == [(1, 2), (1, 3), (1, 4), (2, 2)]
        for r in rows:
            assert isinstance(r, FractionRow)
            assert r.num_histograms == binomial(r.x_size + r.y_size - 1, r.x_size)

    def test_monotone_decrease_in_each_direction(self):
        rows = {(r.x_size, r.y_size): r.fraction.log10_value for r in fraction_table(range(1, 8), [2, 3, 4])}
        for y in [2, 3, 4]:
            for x in range(2, 7):
                assert rows[(x + 1, y)] < rows[(x, y)]
        for x in range(2, 8):
            assert rows[(x, 4)] < rows[(x, 3)] < rows[(x, 2)]

    def test_empty_ranges_rejected(self):
        with pytest.raises(ValueError):
            fraction_table([], [2])
        with pytest.raises(ValueError):
            fraction_table([2], [])
