"""Deterministic non-repeating black-box search and equal-performance checks.

An algorithm here is a rule that, given the trace of (point, value)
pairs seen so far, names the next unvisited point to query.  Nothing
else about the function is visible.  Running an algorithm for m steps
yields a value sequence, and summing a Kronecker-style indicator of a
performance measure over a whole function set yields a performance
table.  Two algorithms get identical tables for every measure exactly
when their multisets of value sequences over the set coincide, so
verify_nfl compares those multisets directly and never needs to
quantify over measures.  Over sets closed under permutation the
multisets agree for all algorithm pairs; over other sets some pair
tells them apart, and desk-scale spaces are small enough to check both
directions by enumerating every decision-tree algorithm outright.

Randomized search enters as SeededRandom: one fixed seed is one
deterministic algorithm, driven by a bit-exact xorshift64-star
recurrence so traces reproduce across implementations.
"""

from __future__ import annotations

import itertools
from abc import ABC, abstractmethod
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping, Sequence

from .core import (
    CapacityError,
    FiniteFunction,
    FunctionSet,
    SignatureMismatchError,
    SpaceSignature,
)
from .landscape import Neighborhood

ALGORITHM_ENUMERATION_CAP = 1 << 16
MASK64 = (1 << 64) - 1
ZERO_SEED_REPLACEMENT = 0x9E3779B97F4A7C15
_MULTIPLIER = 2685821657736338717

MINIMUM_VALUE = "minimum-value"
VALUE_AT_STEP = "value-at-step"
SUM_OF_VALUES = "sum-of-values"

Step = tuple[int, int]
ValueSequence = tuple[int, ...]


class ProtocolViolationError(RuntimeError):
    """An algorithm proposed a visited or out-of-range point."""


@dataclass(frozen=True)
class Trace:
    """Visited (point, value) pairs in query order, points pairwise distinct."""

    steps: tuple[Step, ...]

    def __post_init__(self) -> None:
        steps = tuple((int(x), int(v)) for x, v in self.steps)
        object.__setattr__(self, "steps", steps)
        points = [x for x, _ in steps]
        if len(set(points)) != len(points):
            raise ValueError(f"trace revisits a point: {points}")

    @property
    def points(self) -> tuple[int, ...]:
        return tuple(x for x, _ in self.steps)

    @property
    def values(self) -> ValueSequence:
        return tuple(v for _, v in self.steps)


class SearchAlgorithm(ABC):
    """Deterministic choice of the next unvisited point from the trace alone."""

    name: str = "algorithm"

    @abstractmethod
    def next_point(self, sig: SpaceSignature, steps: tuple[Step, ...]) -> int:
        """Domain index to query next, given the (point, value) pairs so far."""


class Lexicographic(SearchAlgorithm):
    """Visit domain points in ascending index order."""

    name = "lexicographic"

    def next_point(self, sig: SpaceSignature, steps: tuple[Step, ...]) -> int:
        visited = {x for x, _ in steps}
        for x in range(sig.domain_size):
            if x not in visited:
                return x
        raise ProtocolViolationError("no unvisited point left")


class ReverseLexicographic(SearchAlgorithm):
    """Visit domain points in descending index order."""

    name = "reverse-lexicographic"

    def next_point(self, sig: SpaceSignature, steps: tuple[Step, ...]) -> int:
        visited = {x for x, _ in steps}
        for x in range(sig.domain_size - 1, -1, -1):
            if x not in visited:
                return x
        raise ProtocolViolationError("no unvisited point left")


class SeededRandom(SearchAlgorithm):
    """Pseudo-random order driven by the pinned xorshift64-star recurrence.

    The rank drawn at each step never depends on observed values, so the
    generator state is a pure function of the seed and the step count;
    next_point replays the draws from the seed every call and stays
    stateless.
    """

    def __init__(self, seed: int) -> None:
        if not 0 <= seed <= MASK64:
            raise ValueError(f"seed must be an unsigned 64-bit integer, got {seed}")
        self.seed = seed
        self.name = f"seeded-random(seed={seed})"

    def next_point(self, sig: SpaceSignature, steps: tuple[Step, ...]) -> int:
        visited = {x for x, _ in steps}
        unvisited = [x for x in range(sig.domain_size) if x not in visited]
        if not unvisited:
            raise ProtocolViolationError("no unvisited point left")
        state = initial_state(self.seed)
        rank = 0
        for remaining in range(sig.domain_size, len(unvisited) - 1, -1):
            rank, state = seeded_random_next(state, remaining)
        return unvisited[rank]


class GreedyNeighbor(SearchAlgorithm):
    """Expand from the best point seen so far along the neighborhood.

    Starts at index 0.  The pivot is the visited point with the lowest
    observed value (ties to the lowest index); the next query is the
    lowest-index unvisited neighbor of the pivot, falling back to the
    lowest unvisited index when the pivot's neighbors are exhausted.
    Unvisited values are unknown to a black-box searcher, so candidate
    neighbors are ranked by index, not by value.
    """

    def __init__(self, nb: Neighborhood) -> None:
        self.neighborhood = nb
        self.name = "greedy-neighbor"

    def next_point(self, sig: SpaceSignature, steps: tuple[Step, ...]) -> int:
        if self.neighborhood.domain_size != sig.domain_size:
            raise SignatureMismatchError(
                f"neighborhood size {self.neighborhood.domain_size} != "
                f"domain size {sig.domain_size}"
            )
        if not steps:
            return 0
        visited = {x for x, _ in steps}
        pivot = min((v, x) for x, v in steps)[1]
        candidates = [
            y for y in self.neighborhood.neighbors(pivot) if y not in visited
        ]
        if candidates:
            return min(candidates)
        for x in range(sig.domain_size):
            if x not in visited:
                return x
        raise ProtocolViolationError("no unvisited point left")


class DecisionTree(SearchAlgorithm):
    """Explicit algorithm: a table from observed value prefixes to next points.

    The empty prefix keys the first query.  Visited points are already
    determined by the observed prefix through the table itself, so
    prefixes alone suffice as keys.
    """

    def __init__(
        self, choices: Mapping[tuple[int, ...], int], name: str = "tree"
    ) -> None:
        self.choices = {tuple(k): int(v) for k, v in choices.items()}
        if () not in self.choices:
            raise ValueError("decision tree must map the empty prefix to a first point")
        self.name = name

    def next_point(self, sig: SpaceSignature, steps: tuple[Step, ...]) -> int:
        prefix = tuple(v for _, v in steps)
        try:
            return self.choices[prefix]
        except KeyError:
            raise ProtocolViolationError(
                f"decision tree has no choice for observed prefix {prefix}"
            ) from None


def initial_state(seed: int) -> int:
    """Generator state for a seed; the all-zero seed is remapped to a constant."""
    if not 0 <= seed <= MASK64:
        raise ValueError(f"seed must be an unsigned 64-bit integer, got {seed}")
    return seed if seed != 0 else ZERO_SEED_REPLACEMENT


def seeded_random_next(state: int, unvisited_count: int) -> tuple[int, int]:
    """One xorshift64-star draw: (rank among unvisited points, new state).

    Bit-exact contract: state ^= state >> 12; state ^= state << 25
    (truncated to 64 bits); state ^= state >> 27; output is state times
    2685821657736338717 truncated to 64 bits; the rank is output modulo
    unvisited_count, indexing unvisited points in ascending order.
    """
    if unvisited_count < 1:
        raise ValueError(f"unvisited count must be positive, got {unvisited_count}")
    if not 1 <= state <= MASK64:
        raise ValueError(f"state must be a non-zero 64-bit integer, got {state}")
    state ^= state >> 12
    state = (state ^ (state << 25)) & MASK64
    state ^= state >> 27
    output = (state * _MULTIPLIER) & MASK64
    return output % unvisited_count, state


@dataclass(frozen=True)
class PerformanceMeasure:
    """Map from a value sequence to an exact rational score.

    Kinds: minimum-value (lowest value seen), value-at-step (the value at
    a fixed 1-indexed step), sum-of-values.  Scores stay exact rationals
    so equality of performance is never a float comparison.
    """

    kind: str
    step: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in (MINIMUM_VALUE, VALUE_AT_STEP, SUM_OF_VALUES):
            raise ValueError(f"unknown measure kind {self.kind!r}")
        if self.kind == VALUE_AT_STEP:
            if self.step is None or self.step < 1:
                raise ValueError(f"value-at-step needs a step >= 1, got {self.step}")
        elif self.step is not None:
            raise ValueError(f"{self.kind} takes no step argument")

    @property
    def name(self) -> str:
        if self.kind == VALUE_AT_STEP:
            return f"value-at-step-{self.step}"
        return self.kind


def minimum_value() -> PerformanceMeasure:
    return PerformanceMeasure(MINIMUM_VALUE)


def value_at_step(step: int) -> PerformanceMeasure:
    return PerformanceMeasure(VALUE_AT_STEP, step)


def sum_of_values() -> PerformanceMeasure:
    return PerformanceMeasure(SUM_OF_VALUES)


def builtin_measures() -> tuple[PerformanceMeasure, ...]:
    return (minimum_value(), value_at_step(1), sum_of_values())


def performance(measure: PerformanceMeasure, values: Sequence[int]) -> Fraction:
    """Exact rational score of one value sequence under one measure."""
    vals = tuple(values)
    if not vals:
        raise ValueError("cannot score an empty value sequence")
    if measure.kind == MINIMUM_VALUE:
        return Fraction(min(vals))
    if measure.kind == SUM_OF_VALUES:
        return Fraction(sum(vals))
    assert measure.step is not None
    if measure.step > len(vals):
        raise ValueError(
            f"step {measure.step} beyond sequence length {len(vals)}"
        )
    return Fraction(vals[measure.step - 1])


def run(
    algorithm: SearchAlgorithm, f: FiniteFunction, m: int
) -> tuple[Trace, ValueSequence]:
    """Query the algorithm m times against f; returns trace and value sequence.

    Enforces the protocol: a proposed point must be in range and new, or
    a ProtocolViolationError is raised rather than silently repaired.
    """
    sig = f.signature
    if not 1 <= m <= sig.domain_size:
        raise ValueError(f"m must be in 1..{sig.domain_size}, got {m}")
    steps: list[Step] = []
    visited: set[int] = set()
    for _ in range(m):
        x = algorithm.next_point(sig, tuple(steps))
        if isinstance(x, bool) or not isinstance(x, int) or not 0 <= x < sig.domain_size:
            raise ProtocolViolationError(
                f"{algorithm.name} proposed out-of-range point {x!r}"
            )
        if x in visited:
            raise ProtocolViolationError(f"{algorithm.name} revisited point {x}")
        visited.add(x)
        steps.append((x, f.values[x]))
    trace = Trace(tuple(steps))
    return trace, trace.values


def performance_table(
    algorithm: SearchAlgorithm,
    functions: FunctionSet,
    m: int,
    measure: PerformanceMeasure,
) -> dict[Fraction, int]:
    """How many functions in the set score each value under the measure.

    Counts sum to the set size; keys are exact rationals.
    """
    table: dict[Fraction, int] = {}
    for f in functions:
        _, values = run(algorithm, f, m)
        score = performance(measure, values)
        table[score] = table.get(score, 0) + 1
    return table


def sequence_multiset(
    algorithm: SearchAlgorithm, functions: FunctionSet, m: int
) -> Counter[ValueSequence]:
    """The multiset of length-m value sequences the algorithm sees over the set.

    Every performance table is a function of this multiset, so equal
    multisets mean equal tables for every measure at once.
    """
    return Counter(run(algorithm, f, m)[1] for f in functions)


def count_algorithms(sig: SpaceSignature, m: int) -> int:
    """Number of deterministic non-repeating depth-m decision trees.

    The first query has domain_size choices; a node reached by a length-L
    observed prefix has already visited L points, leaving domain_size - L
    choices, and there are codomain_size**L such nodes.
    """
    n = sig.domain_size
    if not 1 <= m <= n:
        raise ValueError(f"m must be in 1..{n}, got {m}")
    total = n
    for level in range(1, m):
        total *= (n - level) ** (sig.codomain_size**level)
    return total


def enumerate_algorithms(
    sig: SpaceSignature, m: int, *, cap: int = ALGORITHM_ENUMERATION_CAP
) -> Iterator[DecisionTree]:
    """Every deterministic non-repeating depth-m algorithm, exactly once.

    Trees are emitted in a fixed order: nodes are filled breadth-first
    (shorter observed prefixes first, lexicographic within a length) and
    each node's next point runs over its unvisited indices in ascending
    order.  Names are tree0, tree1, ... in emission order.
    """
    total = count_algorithms(sig, m)
    if total > cap:
        raise CapacityError(f"{total} algorithms exceed the cap of {cap}")
    n, y = sig.domain_size, sig.codomain_size
    prefixes = [
        p
        for level in range(1, m)
        for p in itertools.product(range(y), repeat=level)
    ]
    counter = itertools.count()

    def rec(idx: int, choices: dict[tuple[int, ...], int]) -> Iterator[DecisionTree]:
        if idx == len(prefixes):
            yield DecisionTree(dict(choices), name=f"tree{next(counter)}")
            return
        prefix = prefixes[idx]
        visited = {choices[prefix[:k]] for k in range(len(prefix))}
        for point in range(n):
            if point not in visited:
                choices[prefix] = point
                yield from rec(idx + 1, choices)
                del choices[prefix]

    for first in range(n):
        yield from rec(0, {(): first})


@dataclass(frozen=True)
class NflReport:
    """Outcome of comparing value-sequence multisets across algorithms.

    witness holds the first algorithm index pair whose multisets differ,
    or None when all pairs agree; multisets are kept for display.
    """

    equal_for_all_pairs: bool
    witness: tuple[int, int] | None
    multisets: tuple[Counter[ValueSequence], ...]


def verify_nfl(
    functions: FunctionSet, m: int, algorithms: Sequence[SearchAlgorithm]
) -> NflReport:
    """Whether all given algorithms see the same value-sequence multiset.

    Equality for all pairs means every performance measure assigns every
    algorithm the same performance table over the set.  Comparing each
    multiset against the first finds the lexicographically first
    differing pair, if any.
    """
    if not algorithms:
        raise ValueError("need at least one algorithm")
    multisets = tuple(sequence_multiset(a, functions, m) for a in algorithms)
    witness = None
    for i in range(1, len(multisets)):
        if multisets[i] != multisets[0]:
            witness = (0, i)
            break
    return NflReport(
        equal_for_all_pairs=witness is None,
        witness=witness,
        multisets=multisets,
    )
