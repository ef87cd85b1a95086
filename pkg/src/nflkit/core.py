"""Finite function spaces, permutations, and value-histogram machinery.

Search spaces and cost-value spaces are finite sets identified with the
integer indices ``0..n-1``.  A function is a value array over the domain,
a permutation is a bijective index mapping, and a histogram counts how
many domain points are mapped to each value.  The histogram is the
complete invariant of the permutation action: two functions are
rearrangements of each other exactly when their histograms agree, and
the orbit of a function under all domain permutations is the set of all
distinct rearrangements of its value array.

Everything here is immutable after construction and every operation is a
pure function, so concurrent use from multiple workers is safe.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterable, Iterator, Sequence

#: Largest number of functions any exhaustive enumeration will attempt.
DEFAULT_SPACE_CAP = 1 << 24

#: Largest domain size for which a single orbit will be enumerated.
DEFAULT_ORBIT_DOMAIN_CAP = 12


class SignatureMismatchError(ValueError):
    """Operands were built over different space signatures."""


class CapacityError(RuntimeError):
    """An exhaustive enumeration would exceed its configured cap."""


@dataclass(frozen=True)
class SpaceSignature:
    """Sizes of the search space and the cost-value space."""

    domain_size: int
    codomain_size: int

    def __post_init__(self) -> None:
        if self.domain_size < 1:
            raise ValueError(f"domain_size must be >= 1, got {self.domain_size}")
        if self.codomain_size < 1:
            raise ValueError(f"codomain_size must be >= 1, got {self.codomain_size}")

    @property
    def function_count(self) -> int:
        """Number of total functions domain -> codomain."""
        return self.codomain_size ** self.domain_size


@dataclass(frozen=True)
class FiniteFunction:
    """A total function encoded as the tuple of its values, index by index."""

    signature: SpaceSignature
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(self.values))
        if len(self.values) != self.signature.domain_size:
            raise ValueError(
                f"expected {self.signature.domain_size} values, got {len(self.values)}"
            )
        for x, v in enumerate(self.values):
            if not isinstance(v, int) or not 0 <= v < self.signature.codomain_size:
                raise ValueError(
                    f"values[{x}] = {v!r} outside [0, {self.signature.codomain_size})"
                )

    @classmethod
    def from_sequence(cls, values: Sequence[int], codomain_size: int) -> FiniteFunction:
        return cls(SpaceSignature(len(values), codomain_size), tuple(values))

    def __call__(self, x: int) -> int:
        return self.values[x]


@dataclass(frozen=True)
class Permutation:
    """A bijection of ``0..n-1`` stored as the image tuple ``mapping``."""

    mapping: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "mapping", tuple(self.mapping))
        n = len(self.mapping)
        if sorted(self.mapping) != list(range(n)):
            raise ValueError(f"mapping {self.mapping!r} is not a bijection of 0..{n - 1}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(n)))

    @property
    def domain_size(self) -> int:
        return len(self.mapping)

    def __call__(self, x: int) -> int:
        return self.mapping[x]

    def inverse(self) -> Permutation:
        inv = [0] * len(self.mapping)
        for i, j in enumerate(self.mapping):
            inv[j] = i
        return Permutation(tuple(inv))


@dataclass(frozen=True)
class Histogram:
    """Per-value preimage sizes of a function; counts sum to the domain size."""

    signature: SpaceSignature
    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "counts", tuple(self.counts))
        if len(self.counts) != self.signature.codomain_size:
            raise ValueError(
                f"expected {self.signature.codomain_size} counts, got {len(self.counts)}"
            )
        if any(c < 0 for c in self.counts):
            raise ValueError(f"negative count in {self.counts!r}")
        if sum(self.counts) != self.signature.domain_size:
            raise ValueError(
                f"counts {self.counts!r} sum to {sum(self.counts)}, "
                f"expected {self.signature.domain_size}"
            )


@dataclass(frozen=True)
class FunctionSet:
    """A deduplicated set of functions over one signature.

    Members are kept sorted by value array, so iteration order is canonical
    and identical sets compare equal structurally.
    """

    signature: SpaceSignature
    members: tuple[FiniteFunction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "members", tuple(self.members))
        prev = None
        for f in self.members:
            if f.signature != self.signature:
                raise SignatureMismatchError(
                    f"member signature {f.signature} != set signature {self.signature}"
                )
            if prev is not None and f.values <= prev:
                raise ValueError("members must be strictly sorted by value array")
            prev = f.values

    @classmethod
    def from_iterable(
        cls, signature: SpaceSignature, functions: Iterable[FiniteFunction]
    ) -> FunctionSet:
        seen = set()
        for f in functions:
            if f.signature != signature:
                raise SignatureMismatchError(
                    f"member signature {f.signature} != set signature {signature}"
                )
            seen.add(f.values)
        members = tuple(FiniteFunction(signature, v) for v in sorted(seen))
        return cls(signature, members)

    @classmethod
    def from_values(
        cls, signature: SpaceSignature, value_arrays: Iterable[Sequence[int]]
    ) -> FunctionSet:
        return cls.from_iterable(
            signature, (FiniteFunction(signature, tuple(v)) for v in value_arrays)
        )

    @cached_property
    def _value_set(self) -> frozenset[tuple[int, ...]]:
        return frozenset(f.values for f in self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[FiniteFunction]:
        return iter(self.members)

    def __contains__(self, f: FiniteFunction) -> bool:
        return f.signature == self.signature and f.values in self._value_set

    def value_arrays(self) -> tuple[tuple[int, ...], ...]:
        return tuple(f.values for f in self.members)


def compose(f: FiniteFunction, p: Permutation) -> FiniteFunction:
    """Right action of a permutation on a function.

    The convention is ``result(x) = f(p(x))``, i.e. ``result.values[i] =
    f.values[p.mapping[i]]``.
    """
    if len(p.mapping) != f.signature.domain_size:
        raise SignatureMismatchError(
            f"permutation of size {len(p.mapping)} applied to function "
            f"with domain size {f.signature.domain_size}"
        )
    return FiniteFunction(f.signature, tuple(f.values[j] for j in p.mapping))


def compose_permutations(p: Permutation, q: Permutation) -> Permutation:
    """Composition ``p after q``: ``result.mapping[i] = p.mapping[q.mapping[i]]``."""
    if len(p.mapping) != len(q.mapping):
        raise SignatureMismatchError("permutation sizes differ")
    return Permutation(tuple(p.mapping[j] for j in q.mapping))


def histogram_of(f: FiniteFunction) -> Histogram:
    """Count, for each value, how many domain points map to it."""
    counts = [0] * f.signature.codomain_size
    for v in f.values:
        counts[v] += 1
    return Histogram(f.signature, tuple(counts))


def representative_function(h: Histogram) -> FiniteFunction:
    """The member of h's class whose value array is sorted ascending."""
    values: list[int] = []
    for y, c in enumerate(h.counts):
        values.extend([y] * c)
    return FiniteFunction(h.signature, tuple(values))


def find_permutation(f: FiniteFunction, g: FiniteFunction) -> Permutation | None:
    """Find p with ``compose(f, p) = g``, or None if the histograms differ.

    Such a p exists exactly when f and g have the same histogram.  The
    construction pairs the preimages value by value; within each preimage
    class, domain indices are matched in ascending order, which makes the
    returned permutation unique.
    """
    if f.signature != g.signature:
        raise SignatureMismatchError(f"{f.signature} != {g.signature}")
    if histogram_of(f) != histogram_of(g):
        return None
    positions: dict[int, list[int]] = defaultdict(list)
    for x, v in enumerate(f.values):
        positions[v].append(x)
    cursor = {v: 0 for v in positions}
    mapping = [0] * f.signature.domain_size
    for i, v in enumerate(g.values):
        mapping[i] = positions[v][cursor[v]]
        cursor[v] += 1
    return Permutation(tuple(mapping))


def iter_value_rearrangements(values: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Yield every distinct rearrangement of ``values`` exactly once.

    Starts from the ascending arrangement and steps through in
    next-permutation order, so the output is strictly increasing
    lexicographically.  The number of results is the multinomial
    coefficient of the value multiplicities, not ``n!``.
    """
    arr = sorted(values)
    n = len(arr)
    while True:
        yield tuple(arr)
        i = n - 2
        while i >= 0 and arr[i] >= arr[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while arr[j] <= arr[i]:
            j -= 1
        arr[i], arr[j] = arr[j], arr[i]
        arr[i + 1 :] = reversed(arr[i + 1 :])


def orbit(f: FiniteFunction, *, max_domain: int = DEFAULT_ORBIT_DOMAIN_CAP) -> FunctionSet:
    """All functions reachable from f by permuting the domain.

    Enumerates distinct rearrangements of the value array rather than all
    ``n!`` permutations; the orbit size is the multinomial coefficient of
    the histogram.
    """
    n = f.signature.domain_size
    if n > max_domain:
        raise CapacityError(f"orbit enumeration for domain size {n} exceeds cap {max_domain}")
    members = tuple(
        FiniteFunction(f.signature, v) for v in iter_value_rearrangements(f.values)
    )
    return FunctionSet(f.signature, members)


def enumerate_functions(
    sig: SpaceSignature, *, cap: int = DEFAULT_SPACE_CAP
) -> Iterator[FiniteFunction]:
    """Yield every function over ``sig`` once, lexicographic by value array."""
    if sig.function_count > cap:
        raise CapacityError(
            f"{sig.codomain_size}^{sig.domain_size} = {sig.function_count} "
            f"functions exceeds cap {cap}"
        )
    return (
        FiniteFunction(sig, values)
        for values in product(range(sig.codomain_size), repeat=sig.domain_size)
    )


def enumerate_histograms(sig: SpaceSignature) -> Iterator[Histogram]:
    """Yield every histogram over ``sig`` once.

    Stars-and-bars enumeration, first count descending; for sig (2,2) the
    order is [2,0], [1,1], [0,2].  The total is C(|X|+|Y|-1, |X|).
    """

    def rec(remaining: int, slots: int) -> Iterator[tuple[int, ...]]:
        if slots == 1:
            yield (remaining,)
            return
        for c in range(remaining, -1, -1):
            for rest in rec(remaining - c, slots - 1):
                yield (c,) + rest

    for counts in rec(sig.domain_size, sig.codomain_size):
        yield Histogram(sig, counts)
