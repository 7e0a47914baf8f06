"""Structural statistics and derived sub-representations of braid reps.

The two headline statistics of a rep are the size of the first generator's
support and the size of the overlap between the supports of the first two
generators; both are invariant under conjugating the whole rep.  A rep is
"good" when either distant generators have pairwise disjoint supports
(type 1) or all generator supports coincide (type 2).

When a set of equal-length cycles of the first (or last) generator image is
permuted among itself by conjugation with the later (or earlier) generator
images, those generators induce a rep on two fewer strands acting on the
cycle list (a retraction/coretraction), and restricting the same generators
to the union of the cycle supports gives the corresponding reduction.
"""

from __future__ import annotations

from dataclasses import dataclass

from .perm import Permutation
from .reps import BraidRep


def supp_stat(rep: BraidRep) -> int:
    """Size of the support of the first generator image."""
    return len(rep.gens[0].support())


def intersect_stat(rep: BraidRep) -> int:
    """Size of the overlap of the supports of the first two generator images."""
    if rep.strands < 3:
        raise ValueError("the overlap statistic needs at least 3 strands")
    return len(rep.gens[0].support() & rep.gens[1].support())


@dataclass(frozen=True)
class GoodnessVerdict:
    """Both goodness clauses evaluated, with a witness for each failure.

    ``type1_witness`` is a pair (i, j), |i-j| > 1, whose supports overlap;
    ``type2_witness`` is a pair (i, j) with unequal supports.  When both
    clauses hold (degenerate small-strand shapes) the verdict reports type 2.
    """

    is_type1: bool
    is_type2: bool
    type1_witness: tuple[int, int] | None
    type2_witness: tuple[int, int] | None

    @property
    def kind(self) -> str:
        if self.is_type2:
            return "type2"
        if self.is_type1:
            return "type1"
        return "not_good"


def goodness(rep: BraidRep) -> GoodnessVerdict:
    supports = [g.support() for g in rep.gens]
    type1_witness = None
    for i in range(len(supports)):
        for j in range(i + 2, len(supports)):
            if supports[i] & supports[j]:
                type1_witness = (i + 1, j + 1)
                break
        if type1_witness:
            break
    type2_witness = None
    for j in range(1, len(supports)):
        if supports[j] != supports[0]:
            type2_witness = (1, j + 1)
            break
    return GoodnessVerdict(
        is_type1=type1_witness is None,
        is_type2=type2_witness is None,
        type1_witness=type1_witness,
        type2_witness=type2_witness,
    )


def orbit(rep: BraidRep, x: int) -> frozenset[int]:
    """Closure of {x} under all generator images and their inverses."""
    if not 1 <= x <= rep.degree:
        raise ValueError(f"point {x} outside 1..{rep.degree}")
    forward = [g.images for g in rep.gens]
    backward = [g.inverse().images for g in rep.gens]
    seen = {x}
    stack = [x]
    while stack:
        y = stack.pop()
        for table in forward:
            z = table[y - 1]
            if z not in seen:
                seen.add(z)
                stack.append(z)
        for table in backward:
            z = table[y - 1]
            if z not in seen:
                seen.add(z)
                stack.append(z)
    return frozenset(seen)


def is_transitive(rep: BraidRep) -> bool:
    return len(orbit(rep, 1)) == rep.degree


def is_cyclic(rep: BraidRep) -> bool:
    """For a rep satisfying the braid relations: cyclic image iff all
    generator images coincide."""
    first = rep.gens[0]
    return all(g == first for g in rep.gens[1:])


def r_components(p: Permutation) -> dict[int, tuple[tuple[int, ...], ...]]:
    """Cycles of p grouped by length."""
    return p.r_components()


def analysis_report(rep: BraidRep) -> dict:
    """JSON-ready summary of the headline statistics."""
    verdict = goodness(rep)
    return {
        "supp": supp_stat(rep),
        "intersect": intersect_stat(rep) if rep.strands >= 3 else None,
        "goodness": verdict.kind,
        "transitive": is_transitive(rep),
        "cyclic": is_cyclic(rep),
        "cycle_type_gen1": list(rep.gens[0].cycle_type()),
    }


# -- retractions and reductions ----------------------------------------------


@dataclass(frozen=True)
class RSubcomponent:
    """An ordered set of equal-length cycles taken from the cycle
    decomposition of the first ("head") or last ("tail") generator image."""

    side: str
    cycles: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.side not in ("head", "tail"):
            raise ValueError(f"side must be 'head' or 'tail', got {self.side!r}")
        if not self.cycles:
            raise ValueError("need at least one cycle")
        lengths = {len(c) for c in self.cycles}
        if len(lengths) != 1:
            raise ValueError(f"cycles have mixed lengths {sorted(lengths)}")

    @property
    def r(self) -> int:
        return len(self.cycles[0])


def full_r_subcomponent(rep: BraidRep, side: str, r: int) -> RSubcomponent:
    """All r-cycles of the reference generator, ordered by minimum point."""
    ref = rep.gens[0] if side == "head" else rep.gens[-1]
    cycles = r_components(ref).get(r, ())
    if not cycles:
        raise ValueError(f"the {side} generator has no cycles of length {r}")
    return RSubcomponent(side, cycles)


def _relevant_indices(strands: int, side: str) -> range:
    # head: generators 3..k-1 stay disjoint from generator 1; tail dually.
    if side == "head":
        return range(3, strands)
    if side == "tail":
        return range(1, strands - 2)
    raise ValueError(f"side must be 'head' or 'tail', got {side!r}")


def retraction(rep: BraidRep, sub: RSubcomponent) -> BraidRep:
    """The rep on strands-2 strands induced on sub's cycle list.

    Cycle positions are numbered by minimum support point in increasing
    order; generator i maps position a to the position of the conjugated
    cycle (the image of cycle D under g is g^-1 D g).
    """
    k = rep.strands
    if k < 4:
        raise ValueError("retraction needs at least 4 strands")
    reference = rep.gens[0] if sub.side == "head" else rep.gens[-1]
    reference_cycles = set(reference.cycles())
    for cycle in sub.cycles:
        rotated = min(
            (cycle[i:] + cycle[:i] for i in range(len(cycle))),
            key=lambda c: c[0],
        )
        if rotated not in reference_cycles:
            raise ValueError(f"cycle {cycle} is not a cycle of the reference generator")
    ordered = tuple(sorted(sub.cycles, key=min))
    position = {frozenset(c): idx for idx, c in enumerate(ordered, start=1)}
    t = len(ordered)
    induced: list[Permutation] = []
    for gen_index in _relevant_indices(k, sub.side):
        g_inv = rep.generator(gen_index).inverse()
        images = [0] * t
        for idx, cycle in enumerate(ordered, start=1):
            target = frozenset(g_inv(x) for x in cycle)
            if target not in position:
                raise ValueError(
                    f"generator {gen_index} maps cycle {cycle} outside the subcomponent"
                )
            images[idx - 1] = position[target]
        induced.append(Permutation(tuple(images)))
    return BraidRep(k - 2, tuple(induced))


def reduction(rep: BraidRep, sigma_set: frozenset[int] | set[int], side: str) -> BraidRep:
    """Restrict the relevant generators to an invariant point set, reindexed
    densely: the points of the set map to 1..len(set) in increasing order."""
    points = sorted(sigma_set)
    if not points or points[0] < 1 or points[-1] > rep.degree:
        raise ValueError("point set must be a non-empty subset of the domain")
    if side == "full":
        indices: range = range(1, rep.strands)
        new_strands = rep.strands
    else:
        indices = _relevant_indices(rep.strands, side)
        new_strands = rep.strands - 2
    if new_strands < 2:
        raise ValueError("reduction needs at least 2 result strands")
    dense = {x: i for i, x in enumerate(points, start=1)}
    restricted: list[Permutation] = []
    for gen_index in indices:
        g = rep.generator(gen_index)
        for x in points:
            if g(x) not in dense:
                raise ValueError(
                    f"point set is not invariant: generator {gen_index} moves {x} out"
                )
        restricted.append(Permutation(tuple(dense[g(x)] for x in points)))
    return BraidRep(new_strands, tuple(restricted))


def near_canonical_gap_ok(rep: BraidRep) -> bool:
    """Check the gap-filling constraint on almost-canonical reps.

    Hypothesis: degree k, every generator except the (k-2)-th maps to the
    adjacent transposition (i, i+1).  Distinct fixed transpositions already
    rule out a cyclic rep, and then the remaining image must be (k-2, k-1)
    or (k-2, k); returns whether it is.
    """
    k = rep.strands
    if rep.degree != k or k < 4:
        raise ValueError("expects a non-degenerate rep of degree equal to its strands")
    for i in range(1, k):
        if i == k - 2:
            continue
        if rep.generator(i) != Permutation.transposition(k, i, i + 1):
            raise ValueError(f"generator {i} is not the adjacent transposition")
    gap = rep.generator(k - 2)
    return gap in (
        Permutation.transposition(k, k - 2, k - 1),
        Permutation.transposition(k, k - 2, k),
    )
