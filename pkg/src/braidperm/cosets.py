"""Braid reps induced on left cosets of a subgroup of a symmetric group.

Given a subgroup H of the symmetric group on N points and a rep of degree
N, each generator image acts on the left cosets gH by left multiplication;
indexing the cosets yields a new rep whose degree is the subgroup index.
The canonical representative of a coset is its lexicographically least
element in one-line form (so the subgroup itself is represented by the
identity), which makes the indexing deterministic without any stabilizer
machinery.  The subgroup is enumerated by closure, so orders are bounded by
an explicit resource limit.

The index-k(k-1)/2 subgroup fixing the partition {1,2} | {3..k} gets a
dedicated combinatorial implementation: its cosets correspond to 2-element
subsets of {1..k} and the action is just the relabeling action on subsets,
which scales past what coset enumeration allows.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .perm import Permutation
from .reps import BraidRep, canonical_rep

DEFAULT_LIMIT = 10**5


def close_subgroup(generators: Sequence[Permutation], limit: int) -> tuple[Permutation, ...]:
    """All products of the generators, by breadth-first closure."""
    if not generators:
        raise ValueError("need at least one subgroup generator")
    degree = generators[0].degree
    if any(g.degree != degree for g in generators):
        raise ValueError("subgroup generators must share one degree")
    identity = Permutation.identity(degree)
    elements = {identity}
    frontier = [identity]
    while frontier:
        nxt: list[Permutation] = []
        for h in frontier:
            for g in generators:
                prod = g * h
                if prod not in elements:
                    if len(elements) >= limit:
                        raise ValueError(f"subgroup order exceeds the limit {limit}")
                    elements.add(prod)
                    nxt.append(prod)
        frontier = nxt
    return tuple(sorted(elements, key=lambda p: p.images))


@dataclass(frozen=True)
class CosetSpace:
    """An indexed left-coset decomposition of the symmetric group on
    ``degree`` points by the subgroup generated by ``subgroup_generators``."""

    degree: int
    subgroup_generators: tuple[Permutation, ...]
    subgroup_elements: tuple[Permutation, ...]
    representatives: tuple[Permutation, ...]

    @property
    def subgroup_order(self) -> int:
        return len(self.subgroup_elements)

    @property
    def index(self) -> int:
        return len(self.representatives)

    def canonical(self, g: Permutation) -> Permutation:
        """Lexicographically least element of the coset g*H."""
        return min((g * h for h in self.subgroup_elements), key=lambda p: p.images)


def coset_space(
    degree: int,
    subgroup_generators: Iterable[Permutation],
    limit: int = DEFAULT_LIMIT,
) -> CosetSpace:
    """Enumerate the left cosets of the generated subgroup.

    Representatives are found by breadth-first products with the adjacent
    transpositions, canonicalizing at every step; the count is checked
    against the exact index degree!/|H|.
    """
    if degree < 1:
        raise ValueError("degree must be positive")
    gens = tuple(subgroup_generators)
    if any(g.degree != degree for g in gens):
        raise ValueError("subgroup generators must have the ambient degree")
    elements = close_subgroup(gens, limit) if gens else (Permutation.identity(degree),)
    order = len(elements)
    if math.factorial(degree) % order:
        raise AssertionError("subgroup order does not divide the group order")
    index = math.factorial(degree) // order
    if index > limit:
        raise ValueError(f"coset index {index} exceeds the limit {limit}")
    space = CosetSpace(degree, gens, elements, ())
    start = space.canonical(Permutation.identity(degree))
    seen = {start}
    frontier = [start]
    sn_gens = [Permutation.transposition(degree, i, i + 1) for i in range(1, degree)]
    while frontier:
        nxt: list[Permutation] = []
        for rep in frontier:
            for s in sn_gens:
                neighbor = space.canonical(s * rep)
                if neighbor not in seen:
                    seen.add(neighbor)
                    nxt.append(neighbor)
        frontier = nxt
    if len(seen) != index:
        raise AssertionError(
            f"enumerated {len(seen)} cosets but the index is {index}"
        )  # pragma: no cover
    representatives = tuple(sorted(seen, key=lambda p: p.images))
    return CosetSpace(degree, gens, elements, representatives)


def derived_hom(rep: BraidRep, space: CosetSpace) -> BraidRep:
    """The rep induced on coset indices by left multiplication."""
    if rep.degree != space.degree:
        raise ValueError(
            f"rep degree {rep.degree} does not match the ambient degree {space.degree}"
        )
    position = {r.images: i for i, r in enumerate(space.representatives, start=1)}
    gens: list[Permutation] = []
    for g in rep.gens:
        images = [0] * space.index
        for idx, r in enumerate(space.representatives, start=1):
            images[idx - 1] = position[space.canonical(g * r).images]
        gens.append(Permutation(tuple(images)))
    return BraidRep(rep.strands, tuple(gens))


def two_subset_pairs(k: int) -> list[tuple[int, int]]:
    """The 2-element subsets of {1..k} in lexicographic order."""
    return list(combinations(range(1, k + 1), 2))


def two_subset_action(k: int) -> BraidRep:
    """Degree k(k-1)/2 rep acting on 2-subsets of {1..k}: generator i applies
    the transposition (i, i+1) to each subset."""
    if k < 3:
        raise ValueError("need at least 3 strands")
    pairs = two_subset_pairs(k)
    position = {pair: idx for idx, pair in enumerate(pairs, start=1)}

    def swap(x: int, i: int) -> int:
        if x == i:
            return i + 1
        if x == i + 1:
            return i
        return x

    gens: list[Permutation] = []
    for i in range(1, k):
        images = [0] * len(pairs)
        for idx, (a, b) in enumerate(pairs, start=1):
            sa, sb = swap(a, i), swap(b, i)
            images[idx - 1] = position[(min(sa, sb), max(sa, sb))]
        gens.append(Permutation(tuple(images)))
    return BraidRep(k, tuple(gens))


def pair_stabilizer_generators(k: int) -> tuple[Permutation, ...]:
    """Generators of the subgroup of S_k preserving {1,2} and {3..k}."""
    if k < 4:
        raise ValueError("need k >= 4 for a non-degenerate pair stabilizer")
    gens = [Permutation.transposition(k, 1, 2)]
    gens.extend(Permutation.transposition(k, i, i + 1) for i in range(3, k))
    return tuple(gens)


def two_subset_via_cosets(k: int, limit: int = DEFAULT_LIMIT) -> BraidRep:
    """The same action built through the generic coset machinery."""
    space = coset_space(k, pair_stabilizer_generators(k), limit)
    return derived_hom(canonical_rep(k), space)
