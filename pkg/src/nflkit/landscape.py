"""Neighborhood structure on the search space and what it does to closure.

A neighborhood is a symmetric irreflexive relation on domain indices.
Any non-trivial one (some distinct pair neighbored, some not) fails to
be invariant under domain permutations, and find_noninvariant_permutation
constructs an explicit offender.  On top of the relation sit two
landscape measures, maximum steepness across an edge and local-minimum
count, and the constraint classes they define: all functions whose
measure stays below a bound.  Such a class stops being closed under
permutation as soon as the bound bites, and witness_not_cup builds the
certifying (function, permutation) pair.

Steepness compares values through a metric on value indices; the default
is plain absolute difference.  Local minima are strict: a point beats a
neighbor only with a strictly smaller value, and a point with no
neighbors counts as a minimum (the condition is vacuous).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .combinatorics import multinomial
from .core import (
    DEFAULT_SPACE_CAP,
    CapacityError,
    FiniteFunction,
    FunctionSet,
    Histogram,
    Permutation,
    SignatureMismatchError,
    SpaceSignature,
    compose,
    enumerate_functions,
    find_permutation,
    histogram_of,
    iter_value_rearrangements,
)

HYPERCUBE_BITS_CAP = 20
HYPERCUBE_DENSE_BITS_CAP = 12
PRODUCT_DOMAIN_CAP = 4096

STEEPNESS = "steepness"
MINIMA = "minima"


class WitnessUnavailableError(ValueError):
    """The constraint bound does not bite, so no violating pair exists."""


class Neighborhood:
    """Symmetric irreflexive relation on domain indices, stored densely.

    The diagonal is forced false: a point is never its own neighbor,
    which keeps strict local-minimum comparisons meaningful.
    """

    __slots__ = ("_rows",)

    def __init__(self, adjacency: Sequence[Sequence[bool]]) -> None:
        rows = tuple(tuple(bool(v) for v in row) for row in adjacency)
        if not rows:
            raise ValueError("adjacency matrix must be non-empty")
        n = len(rows)
        for i, row in enumerate(rows):
            if len(row) != n:
                raise ValueError(f"row {i} has length {len(row)}, expected {n}")
            if row[i]:
                raise ValueError(f"self-neighboring at index {i} is not allowed")
            for j in range(i):
                if row[j] != rows[j][i]:
                    raise ValueError(f"adjacency must be symmetric, differs at ({i},{j})")
        self._rows = rows

    @classmethod
    def from_edges(
        cls, domain_size: int, edges: Iterable[tuple[int, int]]
    ) -> Neighborhood:
        if domain_size < 1:
            raise ValueError(f"domain size must be positive, got {domain_size}")
        rows = [[False] * domain_size for _ in range(domain_size)]
        for i, j in edges:
            if not (0 <= i < domain_size and 0 <= j < domain_size):
                raise ValueError(f"edge ({i},{j}) out of range for size {domain_size}")
            if i == j:
                raise ValueError(f"self-loop ({i},{j}) is not allowed")
            rows[i][j] = rows[j][i] = True
        return cls(rows)

    @property
    def domain_size(self) -> int:
        return len(self._rows)

    def are_neighbors(self, i: int, j: int) -> bool:
        return self._rows[i][j]

    def neighbors(self, i: int) -> tuple[int, ...]:
        return tuple(j for j, v in enumerate(self._rows[i]) if v)

    def edge_list(self) -> list[tuple[int, int]]:
        """All edges as (i, j) with i < j, in ascending order."""
        n = self.domain_size
        return [
            (i, j) for i in range(n) for j in range(i + 1, n) if self.are_neighbors(i, j)
        ]


class HypercubeNeighborhood(Neighborhood):
    """Bit-string domain with Hamming-distance-one adjacency, matrix-free.

    Domain index i is read as a string of `bits` bits, so no adjacency
    matrix is stored and sizes up to 2**20 points stay cheap.
    """

    __slots__ = ("_bits",)

    def __init__(self, bits: int) -> None:
        if bits < 1:
            raise ValueError(f"bits must be positive, got {bits}")
        self._bits = bits

    @property
    def bits(self) -> int:
        return self._bits

    @property
    def domain_size(self) -> int:
        return 1 << self._bits

    def are_neighbors(self, i: int, j: int) -> bool:
        n = self.domain_size
        if not (0 <= i < n and 0 <= j < n):
            raise IndexError(f"index out of range for domain size {n}")
        v = i ^ j
        return v != 0 and v & (v - 1) == 0

    def neighbors(self, i: int) -> tuple[int, ...]:
        return tuple(sorted(i ^ (1 << b) for b in range(self._bits)))

    def edge_list(self) -> list[tuple[int, int]]:
        n = self.domain_size
        return [
            (i, i | (1 << b))
            for i in range(n)
            for b in range(self._bits)
            if not i & (1 << b)
        ]


def hypercube_neighborhood(bits: int, *, dense: bool = False) -> Neighborhood:
    """Hamming-distance-one neighborhood on 2**bits points.

    The default variant computes adjacency from the bit patterns and
    allows up to 20 bits; ask for dense=True (cap 12 bits) to get an
    explicit matrix.
    """
    if bits < 1:
        raise ValueError(f"bits must be positive, got {bits}")
    if dense:
        if bits > HYPERCUBE_DENSE_BITS_CAP:
            raise CapacityError(
                f"{bits} bits exceeds the dense cap of {HYPERCUBE_DENSE_BITS_CAP}"
            )
        return Neighborhood.from_edges(
            1 << bits, HypercubeNeighborhood(bits).edge_list()
        )
    if bits > HYPERCUBE_BITS_CAP:
        raise CapacityError(f"{bits} bits exceeds the cap of {HYPERCUBE_BITS_CAP}")
    return HypercubeNeighborhood(bits)


def product_neighborhood(
    component_sizes: Sequence[int],
    component_index: int,
    component_nb: Neighborhood,
) -> Neighborhood:
    """Neighborhood induced on a product domain by one of its factors.

    Product points are mixed-radix numbers over component_sizes with the
    last coordinate varying fastest; two points are neighbored iff their
    coordinates at component_index are neighbored in component_nb, with
    all other coordinates unconstrained.
    """
    sizes = tuple(component_sizes)
    if not sizes or any(s < 1 for s in sizes):
        raise ValueError(f"component sizes must be positive, got {sizes}")
    if not 0 <= component_index < len(sizes):
        raise ValueError(
            f"component index {component_index} out of range for {len(sizes)} factors"
        )
    if component_nb.domain_size != sizes[component_index]:
        raise ValueError(
            f"component neighborhood has size {component_nb.domain_size}, "
            f"factor {component_index} has size {sizes[component_index]}"
        )
    total = math.prod(sizes)
    if total > PRODUCT_DOMAIN_CAP:
        raise CapacityError(
            f"product domain of {total} points exceeds the cap of {PRODUCT_DOMAIN_CAP}"
        )

    # Stride of the chosen coordinate: product of the sizes to its right.
    stride = math.prod(sizes[component_index + 1 :])
    size_i = sizes[component_index]
    coords = [(point // stride) % size_i for point in range(total)]
    rows = [
        [component_nb.are_neighbors(coords[a], coords[b]) for b in range(total)]
        for a in range(total)
    ]
    return Neighborhood(rows)


class ValueMetric:
    """Symmetric distance on value indices: zero diagonal, positive elsewhere.

    The triangle inequality is deliberately not required; call
    check_triangle when you want it enforced.
    """

    __slots__ = ("_rows",)

    def __init__(self, distance: Sequence[Sequence[float]]) -> None:
        rows = tuple(tuple(float(v) for v in row) for row in distance)
        if not rows:
            raise ValueError("distance matrix must be non-empty")
        n = len(rows)
        for i, row in enumerate(rows):
            if len(row) != n:
                raise ValueError(f"row {i} has length {len(row)}, expected {n}")
            if row[i] != 0.0:
                raise ValueError(f"distance[{i}][{i}] must be 0, got {row[i]}")
            for j in range(i):
                if row[j] != rows[j][i]:
                    raise ValueError(f"distance must be symmetric, differs at ({i},{j})")
                if row[j] <= 0.0:
                    raise ValueError(
                        f"off-diagonal distance[{i}][{j}] must be positive, got {row[j]}"
                    )
        self._rows = rows

    @classmethod
    def index_distance(cls, codomain_size: int) -> ValueMetric:
        """The default metric: absolute difference of value indices."""
        if codomain_size < 1:
            raise ValueError(f"codomain size must be positive, got {codomain_size}")
        return cls(
            [
                [float(abs(i - j)) for j in range(codomain_size)]
                for i in range(codomain_size)
            ]
        )

    @property
    def codomain_size(self) -> int:
        return len(self._rows)

    def distance(self, i: int, j: int) -> float:
        return self._rows[i][j]

    def check_triangle(self) -> None:
        """Raise if some triple violates d(i,k) <= d(i,j) + d(j,k)."""
        n = self.codomain_size
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if self._rows[i][k] > self._rows[i][j] + self._rows[j][k] + 1e-12:
                        raise ValueError(
                            f"triangle inequality violated at ({i},{j},{k})"
                        )


@dataclass(frozen=True)
class ConstraintClass:
    """The set of functions whose landscape measure stays below a bound.

    kind "steepness" measures the largest metric jump across an edge and
    needs a metric; kind "minima" counts strict local minima and needs
    an integer bound.
    """

    signature: SpaceSignature
    neighborhood: Neighborhood
    kind: str
    bound: float | int
    metric: ValueMetric | None = None

    def __post_init__(self) -> None:
        if self.kind not in (STEEPNESS, MINIMA):
            raise ValueError(f"kind must be {STEEPNESS!r} or {MINIMA!r}, got {self.kind!r}")
        if self.neighborhood.domain_size != self.signature.domain_size:
            raise SignatureMismatchError(
                f"neighborhood size {self.neighborhood.domain_size} != "
                f"domain size {self.signature.domain_size}"
            )
        if self.kind == STEEPNESS:
            if self.metric is None:
                raise ValueError("steepness constraint needs a metric")
            if self.metric.codomain_size != self.signature.codomain_size:
                raise SignatureMismatchError(
                    f"metric size {self.metric.codomain_size} != "
                    f"codomain size {self.signature.codomain_size}"
                )
        else:
            if isinstance(self.bound, bool) or not isinstance(self.bound, int):
                raise ValueError(f"minima bound must be an integer, got {self.bound!r}")
            if self.bound < 0:
                raise ValueError(f"minima bound must be nonnegative, got {self.bound}")

    def measure(self, f: FiniteFunction) -> float | int:
        if self.kind == STEEPNESS:
            assert self.metric is not None
            return max_steepness(f, self.neighborhood, self.metric)
        return count_local_minima(f, self.neighborhood)

    def invariant_measure(self, f: FiniteFunction) -> float | int:
        """The measure's best value over f's whole rearrangement class.

        Range diameter for steepness, histogram-wide maximum minima count
        for minima; both depend on f only through its histogram.
        """
        if self.kind == STEEPNESS:
            assert self.metric is not None
            return range_diameter(f, self.metric)
        return max_minima_over_histogram(histogram_of(f), self.neighborhood)


def is_nontrivial(nb: Neighborhood) -> bool:
    """Whether some distinct pair is neighbored and some distinct pair is not."""
    n = nb.domain_size
    found_edge = found_gap = False
    for i in range(n):
        for j in range(i + 1, n):
            if nb.are_neighbors(i, j):
                found_edge = True
            else:
                found_gap = True
            if found_edge and found_gap:
                return True
    return False


def find_noninvariant_permutation(nb: Neighborhood) -> Permutation:
    """A domain permutation under which the neighborhood is not invariant.

    Sends the lowest non-neighbor pair onto the lowest neighbor pair
    (remaining points in ascending order), so checking the relation at
    that non-neighbor pair before and after the permutation disagrees.
    Any non-trivial neighborhood admits such a permutation.
    """
    if not is_nontrivial(nb):
        raise ValueError("neighborhood is trivial, every permutation preserves it")
    n = nb.domain_size
    gap = edge = None
    for i in range(n):
        for j in range(i + 1, n):
            if nb.are_neighbors(i, j):
                if edge is None:
                    edge = (i, j)
            elif gap is None:
                gap = (i, j)
        if gap is not None and edge is not None:
            break
    assert gap is not None and edge is not None
    mapping = [-1] * n
    mapping[gap[0]] = edge[0]
    mapping[gap[1]] = edge[1]
    targets = iter(x for x in range(n) if x not in edge)
    for i in range(n):
        if mapping[i] < 0:
            mapping[i] = next(targets)
    return Permutation(tuple(mapping))


def max_steepness(f: FiniteFunction, nb: Neighborhood, dm: ValueMetric) -> float:
    """Largest metric distance between values across a neighbor pair."""
    _check_landscape_sizes(f, nb=nb, dm=dm)
    best = 0.0
    for i, j in nb.edge_list():
        d = dm.distance(f.values[i], f.values[j])
        if d > best:
            best = d
    return best


def range_diameter(f: FiniteFunction, dm: ValueMetric) -> float:
    """Largest metric distance between values across any pair of points."""
    _check_landscape_sizes(f, dm=dm)
    present = sorted(set(f.values))
    best = 0.0
    for a in range(len(present)):
        for b in range(a + 1, len(present)):
            d = dm.distance(present[a], present[b])
            if d > best:
                best = d
    return best


def count_local_minima(f: FiniteFunction, nb: Neighborhood) -> int:
    """Points whose value is strictly below every neighbor's value.

    A point with no neighbors counts: the condition holds vacuously.
    """
    _check_landscape_sizes(f, nb=nb)
    count = 0
    for x in range(f.signature.domain_size):
        if all(f.values[x] < f.values[y] for y in nb.neighbors(x)):
            count += 1
    return count


def max_minima_over_histogram(
    h: Histogram, nb: Neighborhood, *, cap: int = DEFAULT_SPACE_CAP
) -> int:
    """Largest local-minima count any function with histogram h can have.

    Scans every rearrangement of the value multiset, which is valid
    because functions share a histogram exactly when one is a domain
    rearrangement of the other.  Cost is the multinomial coefficient of
    the counts, hence the cap.
    """
    if h.signature.domain_size != nb.domain_size:
        raise SignatureMismatchError(
            f"histogram domain {h.signature.domain_size} != "
            f"neighborhood size {nb.domain_size}"
        )
    size = multinomial(h)
    if size > cap:
        raise CapacityError(
            f"histogram class has {size} members, above the cap of {cap}"
        )
    base: list[int] = []
    for value, count in enumerate(h.counts):
        base.extend([value] * count)
    sig = h.signature
    best = 0
    for values in iter_value_rearrangements(base):
        n = count_local_minima(FiniteFunction(sig, values), nb)
        if n > best:
            best = n
    return best


def build_constraint_class(
    cc: ConstraintClass, *, cap: int = DEFAULT_SPACE_CAP
) -> FunctionSet:
    """All functions whose measure is strictly below the bound."""
    members = [
        f
        for f in enumerate_functions(cc.signature, cap=cap)
        if cc.measure(f) < cc.bound
    ]
    return FunctionSet.from_iterable(cc.signature, members)


def witness_not_cup(
    functions: FunctionSet, cc: ConstraintClass
) -> tuple[FiniteFunction, Permutation]:
    """A member g and permutation p with compose(g, p) violating the bound.

    Exists exactly when the bound bites, that is when some member's
    rearrangement class reaches the bound: for steepness, pick the
    member with the largest range diameter and shift its extremal value
    pair onto an edge; for minima, pick a member whose histogram allows
    the most minima and rearrange it into that worst arrangement.  Both
    compositions stay inside the rearrangement class, so a class built
    from the same constraint cannot contain them and is not closed under
    permutation.
    """
    if functions.signature != cc.signature:
        raise SignatureMismatchError(
            f"set signature {functions.signature} != constraint signature {cc.signature}"
        )
    if len(functions) == 0:
        raise WitnessUnavailableError("empty set has nothing to witness")
    if not is_nontrivial(cc.neighborhood):
        raise WitnessUnavailableError(
            "trivial neighborhood, constraint classes stay closed under permutation"
        )
    best = max(cc.invariant_measure(f) for f in functions)
    if best < cc.bound:
        raise WitnessUnavailableError(
            f"bound {cc.bound} does not bite: no rearrangement of any member "
            f"reaches a measure above {best}"
        )
    g = next(f for f in functions if cc.invariant_measure(f) == best)
    if cc.kind == STEEPNESS:
        p = _steepness_witness_permutation(g, cc)
    else:
        p = _minima_witness_permutation(g, cc)
    violated = compose(g, p)
    if cc.measure(violated) < cc.bound:
        raise WitnessUnavailableError(
            "constructed permutation does not violate the bound"
        )
    return g, p


def _steepness_witness_permutation(
    g: FiniteFunction, cc: ConstraintClass
) -> Permutation:
    # Put g's extremal value pair (positions a, b) onto the lowest edge (c, d):
    # p(c) = a and p(d) = b makes compose(g, p) jump the full diameter there.
    assert cc.metric is not None
    n = g.signature.domain_size
    diameter = range_diameter(g, cc.metric)
    extremal = None
    for a in range(n):
        for b in range(a + 1, n):
            if cc.metric.distance(g.values[a], g.values[b]) == diameter:
                extremal = (a, b)
                break
        if extremal:
            break
    assert extremal is not None
    edges = cc.neighborhood.edge_list()
    assert edges, "non-trivial neighborhood has at least one edge"
    c, d = edges[0]
    mapping = [-1] * n
    mapping[c] = extremal[0]
    mapping[d] = extremal[1]
    targets = iter(x for x in range(n) if x not in extremal)
    for i in range(n):
        if mapping[i] < 0:
            mapping[i] = next(targets)
    return Permutation(tuple(mapping))


def _minima_witness_permutation(
    g: FiniteFunction, cc: ConstraintClass
) -> Permutation:
    # Rearrange g into the first of its histogram's arrangements that
    # attains the class-wide maximum minima count.
    h = histogram_of(g)
    target = max_minima_over_histogram(h, cc.neighborhood)
    base: list[int] = []
    for value, count in enumerate(h.counts):
        base.extend([value] * count)
    for values in iter_value_rearrangements(base):
        w = FiniteFunction(g.signature, values)
        if count_local_minima(w, cc.neighborhood) == target:
            p = find_permutation(g, w)
            assert p is not None, "same histogram always admits a rearrangement"
            return p
    raise AssertionError("histogram maximum is attained by some arrangement")


def _check_landscape_sizes(
    f: FiniteFunction,
    *,
    nb: Neighborhood | None = None,
    dm: ValueMetric | None = None,
) -> None:
    if nb is not None and nb.domain_size != f.signature.domain_size:
        raise SignatureMismatchError(
            f"neighborhood size {nb.domain_size} != domain size "
            f"{f.signature.domain_size}"
        )
    if dm is not None and dm.codomain_size != f.signature.codomain_size:
        raise SignatureMismatchError(
            f"metric size {dm.codomain_size} != codomain size "
            f"{f.signature.codomain_size}"
        )
