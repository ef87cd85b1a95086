"""Closure-under-permutation analysis of function sets.

A set of functions is closed under permutation (c.u.p.) when composing
any member with any rearrangement of the domain lands back in the set.
Because two functions are related by such a composition exactly when
they share a histogram, a set is c.u.p. iff for every histogram
occurring in it the set contains the *whole* class of functions with
that histogram.  That membership-count criterion is what is_cup checks;
it avoids touching any of the |X|! permutations.

decompose reports the histogram classes explicitly (complete or
partial), and closure completes every touched class, yielding the
smallest c.u.p. superset.
"""

from __future__ import annotations

from dataclasses import dataclass

from .combinatorics import multinomial
from .core import (
    DEFAULT_SPACE_CAP,
    CapacityError,
    FiniteFunction,
    FunctionSet,
    Histogram,
    histogram_of,
    iter_value_rearrangements,
)


@dataclass(frozen=True)
class BasisClass:
    """One histogram class touched by a function set.

    class_size is the number of functions sharing the histogram (the
    multinomial coefficient of its counts); member_count is how many of
    them the set actually contains.
    """

    histogram: Histogram
    class_size: int
    member_count: int

    def __post_init__(self) -> None:
        if not 1 <= self.member_count <= self.class_size:
            raise ValueError(
                f"member count {self.member_count} outside 1..{self.class_size}"
            )

    @property
    def complete(self) -> bool:
        return self.member_count == self.class_size


@dataclass(frozen=True)
class BasisDecomposition:
    """Histogram classes of a function set, each marked complete or partial.

    residual_is_empty is true when no member is stranded in a partial
    class, i.e. the set is exactly a union of complete classes, which is
    the same as being closed under permutation.  An empty set decomposes
    into no classes at all; vacuous flags that case.
    """

    classes: tuple[BasisClass, ...]
    residual_is_empty: bool

    @property
    def vacuous(self) -> bool:
        return not self.classes


def is_cup(functions: FunctionSet) -> bool:
    """Whether the set is closed under permutation of the domain.

    Uses the histogram-count criterion: every histogram present must be
    present with its full class of rearrangements.  The empty set is
    reported closed (the condition is vacuous; see BasisDecomposition
    for the explicit marker).
    """
    counts: dict[tuple[int, ...], int] = {}
    for f in functions:
        key = histogram_of(f).counts
        counts[key] = counts.get(key, 0) + 1
    return all(n == multinomial(key) for key, n in counts.items())


def decompose(functions: FunctionSet) -> BasisDecomposition:
    """Group members by histogram, marking each class complete or partial.

    Classes are ordered with the first histogram count descending, the
    same order enumerate_histograms produces, so output is reproducible.
    """
    sig = functions.signature
    groups: dict[tuple[int, ...], int] = {}
    for f in functions:
        key = histogram_of(f).counts
        groups[key] = groups.get(key, 0) + 1
    classes = tuple(
        BasisClass(
            histogram=Histogram(sig, key),
            class_size=multinomial(key),
            member_count=groups[key],
        )
        for key in sorted(groups, reverse=True)
    )
    return BasisDecomposition(
        classes=classes,
        residual_is_empty=all(c.complete for c in classes),
    )


def closure(
    functions: FunctionSet, *, cap: int = DEFAULT_SPACE_CAP
) -> FunctionSet:
    """Smallest c.u.p. superset: the union of members' rearrangement classes.

    The result size is the sum of multinomial coefficients over the
    distinct histograms present, which grows factorially; a CapacityError
    is raised before materializing anything larger than cap.
    """
    sig = functions.signature
    seen: set[tuple[int, ...]] = set()
    for f in functions:
        seen.add(histogram_of(f).counts)
    total = sum(multinomial(key) for key in seen)
    if total > cap:
        raise CapacityError(
            f"closure would contain {total} functions, above the cap of {cap}"
        )
    arrays: list[tuple[int, ...]] = []
    for key in seen:
        base = []
        for value, count in enumerate(key):
            base.extend([value] * count)
        arrays.extend(iter_value_rearrangements(base))
    return FunctionSet.from_values(sig, arrays)
