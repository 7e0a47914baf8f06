"""Conjugacy between braid reps and the block-model normal form.

``find_conjugator(a, b)`` searches for a permutation theta with
theta^-1 * a_i * theta = b_i for every generator pair, by constraint
propagation: assigning theta(x) = y forces theta(b_i(x)) = a_i(y) for every
generator, so one seed assignment determines theta on the whole orbit of x.
Backtracking over seeds makes the search complete: it returns None only
when no conjugator exists.  Candidate targets are pruned by matching, per
generator, the cycle length through each point.

``normalize_model`` conjugates any valid block-model rep onto the canonical
table whose rows are (p, 0, ..., 0).  The conjugator is a product of one
window spec per l-block group, whose offsets are fixed by two recurrences:
the first walks once around the interleaving cycle of the first generator
starting from the square of the base point (where the free choice is pinned
to 0), and the second propagates block-group by block-group through the
remaining generators.  The residue p falls out of the first walk and
classifies the model up to conjugacy when 2*l times the annihilator order
of p differs from m/l for every p.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .blocks import BlockPermSpec
from .perm import Permutation
from .reps import (
    BraidRep,
    ModelParams,
    block_model_rep,
    canonical_model_params,
    interleaving_rep,
)


def _point_profiles(gens: list[Permutation]) -> list[tuple[int, ...]]:
    """profiles[x-1] = tuple over generators of the cycle length through x."""
    degree = gens[0].degree
    per_gen: list[list[int]] = []
    for g in gens:
        lengths = [1] * degree
        for cycle in g.cycles():
            for x in cycle:
                lengths[x - 1] = len(cycle)
        per_gen.append(lengths)
    return [tuple(lengths[x] for lengths in per_gen) for x in range(degree)]


def find_conjugator(a: BraidRep, b: BraidRep) -> Permutation | None:
    """A theta with a conjugated by theta equal to b generator-wise, or None.

    The search is complete; a None return proves the reps are not conjugate.
    """
    if a.strands != b.strands or a.degree != b.degree:
        raise ValueError("reps differ in strands or degree")
    n = a.degree
    a_fwd = [g.images for g in a.gens]
    b_fwd = [g.images for g in b.gens]
    profiles_a = _point_profiles(list(a.gens))
    profiles_b = _point_profiles(list(b.gens))

    fwd = [0] * (n + 1)  # theta(x), 0 = unassigned
    bwd = [0] * (n + 1)

    def propagate(x0: int, y0: int, trail: list[int]) -> bool:
        queue = [(x0, y0)]
        if bwd[y0] or fwd[x0]:
            return False
        fwd[x0] = y0
        bwd[y0] = x0
        trail.append(x0)
        while queue:
            x, y = queue.pop()
            for ga, gb in zip(a_fwd, b_fwd):
                x2, y2 = gb[x - 1], ga[y - 1]
                current = fwd[x2]
                if current:
                    if current != y2:
                        return False
                    continue
                if bwd[y2]:
                    return False
                fwd[x2] = y2
                bwd[y2] = x2
                trail.append(x2)
                queue.append((x2, y2))
        return True

    def unwind(trail: list[int]) -> None:
        for x in trail:
            bwd[fwd[x]] = 0
            fwd[x] = 0

    def solve() -> bool:
        x = next((i for i in range(1, n + 1) if not fwd[i]), 0)
        if not x:
            return True
        for y in range(1, n + 1):
            if bwd[y] or profiles_a[y - 1] != profiles_b[x - 1]:
                continue
            trail: list[int] = []
            if propagate(x, y, trail) and solve():
                return True
            unwind(trail)
        return False

    if not solve():
        return None
    theta = Permutation(tuple(fwd[1:]))
    assert all(ga.conjugate(theta) == gb for ga, gb in zip(a.gens, b.gens))
    return theta


@dataclass(frozen=True)
class NormalForm:
    """Outcome of normalizing a block model: the residue p and a conjugator
    carrying the input rep onto the canonical table (p, 0, ..., 0) rows."""

    m: int
    l: int
    strands: int
    p: int
    conjugator: Permutation

    def canonical_params(self) -> ModelParams:
        return canonical_model_params(self.m, self.l, self.strands, self.p)

    def to_json_dict(self) -> dict:
        return {
            "m": self.m,
            "l": self.l,
            "k": self.strands,
            "p": self.p,
            "conjugator": [list(c) for c in self.conjugator.cycles()],
        }


def normalize_model(params: ModelParams) -> NormalForm:
    """Normalize a valid offset table to the canonical one-residue form."""
    violation = params.condition_violation()
    if violation is not None:
        raise ValueError(f"table is not a homomorphism (violation at {violation})")
    m, l, k = params.m, params.l, params.strands
    modulus = params.modulus
    degree = m * k

    # Offsets of the conjugator, one per block group index 1..k*l.
    interleave = interleaving_rep(l, k)

    def cycle_step(i: int, block: int) -> int:
        # Image of a window block index under the i-th interleaving generator.
        return interleave.generator(i)(block)

    def row_offset(i: int, block: int) -> int:
        return params.t_table[i - 1][block - ((i - 1) * l + 1)]

    s = [0] * (k * l + 1)
    assigned = [False] * (k * l + 1)

    # First walk: around the interleaving cycle of generator 1, pinning the
    # free value at the square of the base point to 0.
    c1 = 1
    c1 = cycle_step(1, c1)  # image of 1
    first_image = c1
    c2 = cycle_step(1, c1)  # square of 1
    s[c2] = 0
    assigned[c2] = True
    prev = c2
    for _ in range(2 * l - 1):
        nxt = cycle_step(1, prev)
        s[nxt] = (s[prev] + row_offset(1, nxt)) % modulus
        assigned[nxt] = True
        prev = nxt
    p = (s[first_image] + row_offset(1, c2)) % modulus

    # Second walk: each later generator determines the next block group from
    # the previous one.
    for q in range(2, k):
        for block in range(q * l + 1, (q + 1) * l + 1):
            previous = next(
                bb for bb in range((q - 1) * l + 1, q * l + 1) if cycle_step(q, bb) == block
            )
            s[block] = (s[previous] + row_offset(q, block)) % modulus
            assigned[block] = True
    assert all(assigned[1:])

    conjugator = Permutation.identity(degree)
    for i in range(1, k + 1):
        start = (i - 1) * l + 1
        sigma = tuple(start + (pos + 1) % l for pos in range(l))
        offsets = tuple(s[start + pos] for pos in range(l))
        spec = BlockPermSpec(start, l, modulus, sigma, offsets)
        conjugator = conjugator * spec.expand(degree)

    normal = NormalForm(m, l, k, p, conjugator)
    target = block_model_rep(normal.canonical_params())
    source = block_model_rep(params)
    if source.conjugated_by(conjugator) != target:
        raise AssertionError("normalization round-trip failed")  # pragma: no cover
    return normal


def minimal_annihilator(p: int, modulus: int) -> int:
    """Least l in 1..modulus with l*p divisible by modulus."""
    if modulus < 1 or not 0 <= p < modulus:
        raise ValueError(f"need 0 <= p < modulus, got p={p}, modulus={modulus}")
    for l in range(1, modulus + 1):
        if (l * p) % modulus == 0:
            return l
    raise AssertionError("unreachable")  # pragma: no cover


@dataclass(frozen=True)
class ClassCountResult:
    """Either an exact class count or the residue where the counting
    hypothesis 2*l*annihilator(p) != m/l fails (no count is asserted then)."""

    count: int | None
    failing_p: int | None

    @property
    def ok(self) -> bool:
        return self.count is not None


def class_count(m: int, l: int) -> ClassCountResult:
    """Number of pairwise non-conjugate block models with these m, l: one per
    residue plus the interleaving model, provided the hypothesis holds."""
    if l < 1 or m % l != 0:
        raise ValueError(f"l={l} must divide m={m}")
    if not l < m:
        raise ValueError(f"need l < m, got l={l}, m={m}")
    modulus = m // l
    for p in range(modulus):
        if 2 * l * minimal_annihilator(p, modulus) == modulus:
            return ClassCountResult(count=None, failing_p=p)
    return ClassCountResult(count=modulus + 1, failing_p=None)
