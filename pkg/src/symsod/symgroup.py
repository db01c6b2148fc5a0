"""Symmetric-group bookkeeping: cycle types, Young cosets, induced modules.

Groups are handled at desk scale (degree <= 7, so at most 5040 elements) and
always as explicit element lists; exhaustive verification beats generality
here.  The centrepiece is :func:`induction_invariance_check`, a
decategorified Frobenius-reciprocity test: the dimension of the invariants
of a module induced from a Young subgroup, computed by direct orbit
counting, must equal the dimension of the subgroup invariants of the
original module, computed by the Burnside character average.  The two sides
are computed by deliberately different algorithms.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Any, Callable, Iterable, Sequence

from .partitions import Partition, partition_count


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1, ..., n} in one-line form: images[k-1] = image of k."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {self.images}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, k: int) -> int:
        return self.images[k - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition (self * other)(k) = self(other(k))."""
        if self.degree != other.degree:
            raise ValueError("cannot compose permutations of different degrees")
        return Permutation(tuple(self.images[j - 1] for j in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for k, img in enumerate(self.images, start=1):
            inv[img - 1] = k
        return Permutation(tuple(inv))

    def __repr__(self) -> str:
        return f"Permutation{self.images}"


def cycle_type(p: Permutation) -> Partition:
    """The multiset of cycle lengths of ``p`` as a partition of its degree."""
    seen = [False] * p.degree
    lengths = []
    for start in range(1, p.degree + 1):
        if seen[start - 1]:
            continue
        length = 0
        k = start
        while not seen[k - 1]:
            seen[k - 1] = True
            k = p(k)
            length += 1
        lengths.append(length)
    return Partition(tuple(sorted(lengths, reverse=True)))


def symmetric_group(n: int) -> list[Permutation]:
    """All of S_n in lexicographic one-line order (n <= 7 intended)."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return [Permutation(imgs) for imgs in itertools.permutations(range(1, n + 1))]


def conjugacy_class_count(n: int) -> int:
    """Number of conjugacy classes of S_n, i.e. the number of cycle types.

    Equals the partition number p(n); the exhaustive classification of all
    n! elements is kept in the verification suites as the independent check.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return partition_count(n)


@dataclass(frozen=True)
class YoungPair:
    """The block embedding S_{n-i} x S_i inside S_n.

    The first factor permutes {1, ..., n-i}, the second {n-i+1, ..., n}.
    """

    n: int
    i: int

    def __post_init__(self) -> None:
        if not (0 <= self.i <= self.n):
            raise ValueError(f"need 0 <= i <= n, got n={self.n}, i={self.i}")


def young_subgroup(y: YoungPair) -> list[Permutation]:
    """All elements of S_{n-i} x S_i as permutations of {1..n}."""
    n, i = y.n, y.i
    first = list(itertools.permutations(range(1, n - i + 1)))
    second = list(itertools.permutations(range(n - i + 1, n + 1)))
    return [Permutation(a + b) for a in first for b in second]


def young_coset_reps(y: YoungPair) -> list[Permutation]:
    """Lex-minimal representatives of the left cosets S_n / (S_{n-i} x S_i).

    A left coset is determined by where it sends the top block
    {n-i+1, ..., n}; for each i-subset T the lex-minimal one-line form places
    the complement of T in increasing order on positions 1..n-i and T in
    increasing order on the remaining positions.  There are C(n, i)
    representatives; the identity represents its own coset.  The list is
    sorted by one-line form.
    """
    n, i = y.n, y.i
    universe = range(1, n + 1)
    reps = []
    for subset in itertools.combinations(universe, i):
        chosen = set(subset)
        complement = tuple(k for k in universe if k not in chosen)
        reps.append(Permutation(complement + subset))
    reps.sort(key=lambda p: p.images)
    return reps


def _generating_subset(elements: Sequence[Permutation]) -> list[Permutation]:
    """A small generating subset of a (purported) subgroup given as a list."""
    if not elements:
        return []
    n = elements[0].degree
    identity = Permutation.identity(n)
    closure = {identity}
    gens: list[Permutation] = []
    for x in elements:
        if x in closure:
            continue
        gens.append(x)
        closure = _mulclose(gens, identity)
    return gens


def _mulclose(gens: Sequence[Permutation], identity: Permutation) -> set[Permutation]:
    closure = {identity}
    frontier = [identity]
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = g * x
                if y not in closure:
                    closure.add(y)
                    new.append(y)
        frontier = new
    return closure


def validate_subgroup(elements: Sequence[Permutation]) -> None:
    """Raise ValueError unless ``elements`` is exactly a subgroup of S_n.

    Checks that the set equals the group generated by a greedily chosen
    generating subset; this implies closure under composition and inverse
    without the quadratic all-pairs scan.
    """
    if not elements:
        raise ValueError("empty element list is not a subgroup")
    as_set = set(elements)
    if len(as_set) != len(elements):
        raise ValueError("subgroup element list contains duplicates")
    n = elements[0].degree
    if any(p.degree != n for p in elements):
        raise ValueError("subgroup elements have mixed degrees")
    identity = Permutation.identity(n)
    if identity not in as_set:
        raise ValueError("subgroup must contain the identity")
    gens = _generating_subset(elements)
    if _mulclose(gens, identity) != as_set:
        raise ValueError("element list is not closed under composition/inverse")


class PermModule:
    """A finite permutation module: a basis with a group acting on it.

    ``act(g, b)`` must define an action of the given group on the basis; the
    identity axiom is checked on the whole basis and the homomorphism axiom
    on a generating subset.
    """

    def __init__(
        self,
        group: Sequence[Permutation],
        basis: Sequence[Any],
        act: Callable[[Permutation, Any], Any],
    ):
        if not basis:
            raise ValueError("module basis must be non-empty")
        if not group:
            raise ValueError("module group must be non-empty")
        self.group = list(group)
        self.basis = list(basis)
        self.act = act
        self._validate()

    def _validate(self) -> None:
        identity = Permutation.identity(self.group[0].degree)
        basis_set = set(self.basis)
        for b in self.basis:
            if self.act(identity, b) != b:
                raise ValueError(f"identity does not fix basis point {b!r}")
        gens = _generating_subset(self.group)
        for g in gens:
            image = [self.act(g, b) for b in self.basis]
            if set(image) != basis_set:
                raise ValueError(f"{g!r} does not permute the basis")
        for g in gens:
            for h in gens:
                gh = g * h
                for b in self.basis:
                    if self.act(gh, b) != self.act(g, self.act(h, b)):
                        raise ValueError("action is not a homomorphism on generators")

    def fixed_points(self, g: Permutation) -> int:
        return sum(1 for b in self.basis if self.act(g, b) == b)

    def orbit_count(self, generators: Iterable[Permutation]) -> int:
        """Number of orbits on the basis under the group generated by ``generators``."""
        gens = list(generators)
        remaining = set(self.basis)
        orbits = 0
        while remaining:
            seed = remaining.pop()
            frontier = [seed]
            while frontier:
                x = frontier.pop()
                for g in gens:
                    y = self.act(g, x)
                    if y in remaining:
                        remaining.remove(y)
                        frontier.append(y)
            orbits += 1
        return orbits


def trivial_module(group: Sequence[Permutation]) -> PermModule:
    return PermModule(group, ["*"], lambda g, b: b)


def natural_module(group: Sequence[Permutation], n: int) -> PermModule:
    return PermModule(group, list(range(1, n + 1)), lambda g, b: g(b))


def regular_module(group: Sequence[Permutation]) -> PermModule:
    return PermModule(group, list(group), lambda g, b: g * b)


def random_orbit_module(
    group: Sequence[Permutation], n: int, rng, max_points: int = 12
) -> PermModule:
    """A random union of orbits of the group acting on small tuples over {1..n}.

    Orbits of coordinatewise actions on k-tuples (k <= 3) are accumulated
    while they fit under ``max_points``; singleton-block orbits always fit,
    so the result is never empty.
    """

    def tuple_act(g: Permutation, t: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(g(x) for x in t)

    points: set[tuple[int, ...]] = set()
    for _ in range(8):
        k = rng.randint(1, 3)
        seed = tuple(rng.randint(1, n) for _ in range(k))
        orbit = {tuple_act(g, seed) for g in group}
        if points | orbit == points:
            continue
        if len(points | orbit) <= max_points:
            points |= orbit
    if not points:
        seed = (rng.randint(1, n),)
        points = {tuple_act(g, seed) for g in group}
    return PermModule(group, sorted(points), tuple_act)


def invariant_dimension(m: PermModule, subgroup: Sequence[Permutation]) -> int:
    """Dimension of the subgroup invariants of the linearized module.

    Burnside average: (1/|H|) * sum of fixed-point counts over H.  The
    subgroup is validated (closure under composition and inverse) first.
    """
    validate_subgroup(subgroup)
    total = sum(m.fixed_points(h) for h in subgroup)
    dim, remainder = divmod(total, len(subgroup))
    if remainder:
        raise ValueError("fixed-point average is not an integer; not a group action?")
    return dim


@dataclass(frozen=True)
class InductionReport:
    """Outcome of the induced-invariants vs. subgroup-invariants comparison."""

    ok: bool
    pair: YoungPair
    induced_invariant_dim: int
    subgroup_invariant_dim: int
    induced_basis_size: int

    def __bool__(self) -> bool:
        return self.ok


def _coset_index_table(y: YoungPair, reps: Sequence[Permutation]) -> dict[frozenset, int]:
    n, i = y.n, y.i
    top = range(n - i + 1, n + 1)
    return {frozenset(r(k) for k in top): j for j, r in enumerate(reps)}


def induction_invariance_check(y: YoungPair, m: PermModule) -> InductionReport:
    """Frobenius reciprocity for the trivial character, made executable.

    The module ``m`` over H = S_{n-i} x S_i is induced up to G = S_n on the
    basis {(coset j, b)}: for g in G and each summand index k, the elements
    h in H and rep index j with ``g * g_k = g_j * h`` carry (k, b) to
    (j, h.b).  The dimension of the G-invariants of the induced module is
    computed by orbit counting under generators of G and compared with the
    Burnside-average dimension of the H-invariants of ``m``.
    """
    n = y.n
    h_elements = young_subgroup(y)
    if set(m.group) != set(h_elements):
        raise ValueError("module is not defined over the Young subgroup of the given pair")

    reps = young_coset_reps(y)
    rep_index = _coset_index_table(y, reps)
    top = tuple(range(n - y.i + 1, n + 1))

    def induced_act(g: Permutation, point: tuple[int, Any]) -> tuple[int, Any]:
        k, b = point
        x = g * reps[k]  # g * g_k = g_j * h
        j = rep_index[frozenset(x(t) for t in top)]
        h = reps[j].inverse() * x
        return (j, m.act(h, b))

    induced_basis = [(j, b) for j in range(len(reps)) for b in m.basis]

    # generators of S_n: a transposition and an n-cycle (n-dependent edge cases)
    if n == 1:
        gens = [Permutation.identity(1)]
    else:
        gens = [Permutation((2, 1) + tuple(range(3, n + 1)))]
        if n > 2:
            gens.append(Permutation(tuple(range(2, n + 1)) + (1,)))

    induced = PermModule(symmetric_group(n), induced_basis, induced_act)
    induced_dim = induced.orbit_count(gens)
    subgroup_dim = invariant_dimension(m, h_elements)
    return InductionReport(
        ok=induced_dim == subgroup_dim,
        pair=y,
        induced_invariant_dim=induced_dim,
        subgroup_invariant_dim=subgroup_dim,
        induced_basis_size=len(induced_basis),
    )
