"""Core representations: functions, permutations, histograms, enumeration."""

from __future__ import annotations

import itertools

import pytest
from hypothesis import given, strategies as st

from nflkit.core import (
    CapacityError,
    FiniteFunction,
    FunctionSet,
    Histogram,
    Permutation,
    SignatureMismatchError,
    SpaceSignature,
    compose,
    compose_permutations,
    enumerate_functions,
    enumerate_histograms,
    find_permutation,
    histogram_of,
    iter_value_rearrangements,
    orbit,
    representative_function,
)

import oracles


def ff(values, y):
    return FiniteFunction.from_sequence(values, y)


class TestSpaceSignature:
    def test_function_count(self):
        assert SpaceSignature(2, 2).function_count == 4
        assert SpaceSignature(3, 2).function_count == 8
        assert SpaceSignature(8, 2).function_count == 256

    def test_rejects_nonpositive_sizes(self):
        with pytest.raises(ValueError):
            SpaceSignature(0, 2)
        with pytest.raises(ValueError):
            SpaceSignature(2, 0)


class TestFiniteFunction:
    def test_call_and_values(self):
        f = ff([0, 2, 1], 3)
        assert f(0) == 0 and f(1) == 2 and f(2) == 1
        assert f.values == (0, 2, 1)

    def test_rejects_out_of_range_values(self):
        with pytest.raises(ValueError):
            ff([0, 2], 2)
        with pytest.raises(ValueError):
            ff([-1, 0], 2)

    def test_rejects_length_mismatch(self):
        with pytest.raises(ValueError):
            FiniteFunction(SpaceSignature(3, 2), (0, 1))


class TestPermutation:
    def test_identity_and_call(self):
        p = Permutation.identity(3)
        assert p.mapping == (0, 1, 2)
        assert [p(i) for i in range(3)] == [0, 1, 2]

    def test_inverse(self):
        p = Permutation((2, 0, 1))
        q = p.inverse()
        assert compose_permutations(p, q).mapping == (0, 1, 2)
        assert compose_permutations(q, p).mapping == (0, 1, 2)

    def test_rejects_non_bijection(self):
        with pytest.raises(ValueError):
            Permutation((0, 0, 1))
        with pytest.raises(ValueError):
            Permutation((0, 1, 3))


class TestHistogram:
    def test_validates_sum(self):
        sig = SpaceSignature(3, 2)
        Histogram(sig, (2, 1))
        with pytest.raises(ValueError):
            Histogram(sig, (2, 2))
        with pytest.raises(ValueError):
            Histogram(sig, (3, 0, 0))  # wrong length

    def test_rejects_negative_counts(self):
        with pytest.raises(ValueError):
            Histogram(SpaceSignature(1, 2), (2, -1))


class TestFunctionSet:
    def test_canonical_order_and_dedup(self):
        sig = SpaceSignature(2, 2)
        fs = FunctionSet.from_values(sig, [(1, 0), (0, 1), (1, 0)])
        assert fs.value_arrays() == ((0, 1), (1, 0))
        assert len(fs) == 2

    def test_contains(self):
        sig = SpaceSignature(2, 2)
        fs = FunctionSet.from_values(sig, [(0, 1)])
        assert ff([0, 1], 2) in fs
        assert ff([1, 0], 2) not in fs

    def test_rejects_signature_mismatch(self):
        sig = SpaceSignature(2, 2)
        with pytest.raises(SignatureMismatchError):
            FunctionSet.from_iterable(sig, [ff([0, 1, 0], 2)])

    def test_rejects_unsorted_members(self):
        sig = SpaceSignature(2, 2)
        with pytest.raises(ValueError):
            FunctionSet(sig, (ff([1, 0], 2), ff([0, 1], 2)))


class TestCompose:
    def test_identity_fixes_function(self):
        f = ff([0, 2, 1], 3)
        assert compose(f, Permutation.identity(3)).values == f.values

    def test_worked_example(self):
        # values [0,0,1] under mapping [0,2,1]: position i reads value at
        # the mapped position, giving [0,1,0]
        f = ff([0, 0, 1], 2)
        p = Permutation((0, 2, 1))
        assert compose(f, p).values == (0, 1, 0)

    def test_composition_is_action(self):
        # (f o p) o q == f o (p o q) for all f, p, q on a small domain
        sig = SpaceSignature(3, 2)
        perms = [Permutation(m) for m in itertools.permutations(range(3))]
        for f in enumerate_functions(sig):
            for p in perms:
                for q in perms:
                    left = compose(compose(f, p), q)
                    right = compose(f, compose_permutations(p, q))
                    assert left.values == right.values

    def test_rejects_size_mismatch(self):
        with pytest.raises(SignatureMismatchError):
            compose(ff([0, 1], 2), Permutation.identity(3))


class TestHistogramOf:
    def test_counts_values(self):
        assert histogram_of(ff([0, 0, 1], 2)).counts == (2, 1)
        assert histogram_of(ff([2, 2, 2], 3)).counts == (0, 0, 3)

    def test_invariant_under_composition(self):
        f = ff([0, 1, 1, 2], 3)
        for m in itertools.permutations(range(4)):
            assert histogram_of(compose(f, Permutation(m))).counts == (1, 2, 1)

    def test_representative_is_sorted_member(self):
        h = Histogram(SpaceSignature(4, 3), (1, 2, 1))
        rep = representative_function(h)
        assert rep.values == (0, 1, 1, 2)
        assert histogram_of(rep).counts == h.counts


class TestFindPermutation:
    def test_worked_example(self):
        f = ff([0, 0, 1], 2)
        g = ff([0, 1, 0], 2)
        p = find_permutation(f, g)
        assert p is not None and p.mapping == (0, 2, 1)
        assert compose(f, p).values == g.values

    def test_none_iff_histograms_differ(self):
        sig = SpaceSignature(3, 2)
        functions = list(enumerate_functions(sig))
        for f in functions:
            for g in functions:
                p = find_permutation(f, g)
                same = histogram_of(f).counts == histogram_of(g).counts
                assert (p is not None) == same
                if p is not None:
                    assert compose(f, p).values == g.values

    def test_rejects_signature_mismatch(self):
        with pytest.raises(SignatureMismatchError):
            find_permutation(ff([0, 1], 2), ff([0, 1, 0], 2))


class TestIterValueRearrangements:
    def test_matches_permutation_enumeration(self):
        for values in [(0, 0, 1), (0, 1, 2), (1, 1, 1), (0, 1, 1, 2)]:
            produced = list(iter_value_rearrangements(values))
            assert set(produced) == oracles.brute_orbit(values)
            assert produced == sorted(produced)
            assert len(produced) == len(set(produced))

    @given(
        st.lists(st.integers(min_value=0, max_value=3), min_size=1, max_size=6)
    )
    def test_property_distinct_sorted_complete(self, values):
        produced = list(iter_value_rearrangements(values))
        assert produced == sorted(set(produced))
        assert set(produced) == oracles.brute_orbit(tuple(values))


class TestOrbit:
    def test_three_element_orbit(self):
        orb = orbit(ff([0, 0, 1], 2))
        assert orb.value_arrays() == ((0, 0, 1), (0, 1, 0), (1, 0, 0))

    def test_constant_is_fixed_point(self):
        orb = orbit(ff([1, 1], 2))
        assert orb.value_arrays() == ((1, 1),)

    def test_matches_brute_force(self):
        for x, y in [(3, 2), (4, 2), (4, 3)]:
            for f in enumerate_functions(SpaceSignature(x, y)):
                assert set(orbit(f).value_arrays()) == oracles.brute_orbit(f.values)

    def test_domain_cap(self):
        f = ff([0] * 13, 2)
        with pytest.raises(CapacityError):
            orbit(f)
        assert len(orbit(f, max_domain=13)) == 1


class TestEnumerateFunctions:
    def test_lexicographic_order_and_count(self):
        sig = SpaceSignature(2, 2)
        out = [f.values for f in enumerate_functions(sig)]
        assert out == [(0, 0), (0, 1), (1, 0), (1, 1)]

    def test_matches_oracle(self):
        sig = SpaceSignature(3, 3)
        out = [f.values for f in enumerate_functions(sig)]
        assert out == oracles.all_functions(3, 3)

    def test_cap_is_checked_eagerly(self):
        with pytest.raises(CapacityError):
            enumerate_functions(SpaceSignature(8, 2), cap=255)


class TestEnumerateHistograms:
    def test_order_for_two_by_two(self):
        sig = SpaceSignature(2, 2)
        out = [h.counts for h in enumerate_histograms(sig)]
        assert out == [(2, 0), (1, 1), (0, 2)]

    def test_first_count_descending(self):
        sig = SpaceSignature(3, 3)
        out = [h.counts for h in enumerate_histograms(sig)]
        assert out == sorted(out, reverse=True)
        assert len(out) == len(set(out))

    def test_covers_all_function_histograms(self):
        sig = SpaceSignature(4, 3)
        listed = {h.counts for h in enumerate_histograms(sig)}
        seen = {histogram_of(f).counts for f in enumerate_functions(sig)}
        assert listed == seen
