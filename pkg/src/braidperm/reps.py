"""Candidate braid-group homomorphisms into symmetric groups.

A ``BraidRep`` holds the images of the k-1 standard generators of the braid
group on k strands as permutations of equal degree.  Nothing forces those
images to satisfy the braid relations at construction time;
``verify_braid_relations`` checks both relation families

    g_i g_{i+1} g_i = g_{i+1} g_i g_{i+1}        (adjacent)
    g_i g_j = g_j g_i          for |i - j| >= 2  (distant)

exhaustively and reports every violation.

The model constructors:

- ``canonical_rep(k)``: generator i maps to the transposition (i, i+1).
- ``interleaving_rep(m, k)``: degree m*k; generator i is the 2m-cycle that
  interleaves blocks i and i+1, i.e. the expansion of the window spec with
  inner permutation (i, i+1) and offsets 1, 0.
- ``block_model_rep(params)``: degree m*k; generator i is the product of all
  block cycles outside a 2l-block window with a window spec whose inner
  permutation is the degree-2l interleaving pattern and whose offsets come
  from the i-th row of the offset table.  The table must satisfy a modular
  condition (`ModelParams.condition_violation`) which is necessary and
  sufficient for the result to be a homomorphism; the checked constructor
  refuses invalid tables, the unchecked one exists for brute-force searches.
- ``model_2k(which, k)``: the three classical degree-2k models; the second
  and third are block models with modulus 2, the first is built from its
  4-cycle formula directly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .blocks import BlockPermSpec, block_cycle
from .perm import Permutation


@dataclass(frozen=True)
class BraidRep:
    """Generator images of a candidate homomorphism from the braid group on
    ``strands`` strands; ``gens[i]`` is the image of the (i+1)-th generator."""

    strands: int
    gens: tuple[Permutation, ...]

    def __post_init__(self) -> None:
        if self.strands < 2:
            raise ValueError("need at least 2 strands")
        if len(self.gens) != self.strands - 1:
            raise ValueError(
                f"expected {self.strands - 1} generator images, got {len(self.gens)}"
            )
        degrees = {g.degree for g in self.gens}
        if len(degrees) != 1:
            raise ValueError(f"generator degrees differ: {sorted(degrees)}")

    @property
    def degree(self) -> int:
        return self.gens[0].degree

    def generator(self, i: int) -> Permutation:
        """Image of the i-th braid generator, 1-based, 1 <= i <= strands-1."""
        if not 1 <= i <= self.strands - 1:
            raise ValueError(f"generator index {i} out of range 1..{self.strands - 1}")
        return self.gens[i - 1]

    def conjugated_by(self, theta: Permutation) -> "BraidRep":
        return BraidRep(self.strands, tuple(g.conjugate(theta) for g in self.gens))

    def to_json_dict(self) -> dict:
        return {
            "strands": self.strands,
            "degree": self.degree,
            "generators": [[list(c) for c in g.cycles()] for g in self.gens],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "BraidRep":
        expected = {"strands", "degree", "generators"}
        if set(data) != expected:
            raise ValueError(f"expected keys {sorted(expected)}; got {sorted(data)}")
        gens = tuple(
            Permutation.from_cycles(cycles, data["degree"]) for cycles in data["generators"]
        )
        return cls(data["strands"], gens)


@dataclass(frozen=True)
class RelationReport:
    """Outcome of checking the braid relations; failures are data, not errors.

    Each failure is a triple (kind, i, j) with kind "braid" for a violated
    adjacent relation and "commute" for a violated distant one.
    """

    failures: tuple[tuple[str, int, int], ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def compose_images(f: tuple[int, ...], g: tuple[int, ...]) -> tuple[int, ...]:
    """Raw-image composition, right factor first; hot path for searches."""
    return tuple(f[y - 1] for y in g)


def braid_triple_holds(f: tuple[int, ...], g: tuple[int, ...]) -> bool:
    fg = compose_images(f, g)
    gf = compose_images(g, f)
    return compose_images(fg, f) == compose_images(gf, g)


def commute_holds(f: tuple[int, ...], g: tuple[int, ...]) -> bool:
    return compose_images(f, g) == compose_images(g, f)


def verify_braid_relations(rep: BraidRep) -> RelationReport:
    """Check both relation families exhaustively."""
    gens = [g.images for g in rep.gens]
    failures: list[tuple[str, int, int]] = []
    for i in range(len(gens) - 1):
        if not braid_triple_holds(gens[i], gens[i + 1]):
            failures.append(("braid", i + 1, i + 2))
    for i in range(len(gens)):
        for j in range(i + 2, len(gens)):
            if not commute_holds(gens[i], gens[j]):
                failures.append(("commute", i + 1, j + 1))
    return RelationReport(tuple(failures))


def word_image(rep: BraidRep, word: list[int]) -> Permutation:
    """Image of a word in signed generator indices; the empty word maps to
    the identity, a negative index to the inverse of that generator."""
    result = Permutation.identity(rep.degree)
    for letter in word:
        if letter == 0 or not 1 <= abs(letter) <= rep.strands - 1:
            raise ValueError(f"generator index {letter} out of range")
        g = rep.gens[abs(letter) - 1]
        result = result * (g if letter > 0 else g.inverse())
    return result


def disjoint_product(a: BraidRep, b: BraidRep) -> BraidRep:
    """Combine two reps of equal strand count on disjoint point sets."""
    if a.strands != b.strands:
        raise ValueError(f"strand mismatch: {a.strands} vs {b.strands}")
    shift = a.degree
    gens = tuple(
        Permutation(ga.images + tuple(x + shift for x in gb.images))
        for ga, gb in zip(a.gens, b.gens)
    )
    return BraidRep(a.strands, gens)


# -- model constructors ------------------------------------------------------


def canonical_rep(k: int) -> BraidRep:
    """The canonical quotient onto the symmetric group: generator i -> (i, i+1)."""
    gens = tuple(Permutation.transposition(k, i, i + 1) for i in range(1, k))
    return BraidRep(k, gens)


def interleaving_spec(m: int, i: int) -> BlockPermSpec:
    """Window spec of the i-th interleaving generator: blocks i, i+1 with
    inner permutation (i, i+1) and offsets 1, 0 (reduced mod m)."""
    return BlockPermSpec(i, 2, m, (i + 1, i), (1 % m, 0))


def interleaving_rep(m: int, k: int) -> BraidRep:
    """Degree m*k; generator i is the 2m-cycle interleaving blocks i and i+1.

    At m = 1 this is exactly ``canonical_rep(k)``.
    """
    if m < 1 or k < 2:
        raise ValueError("need m >= 1 and k >= 2")
    degree = m * k
    gens = tuple(interleaving_spec(m, i).expand(degree) for i in range(1, k))
    return BraidRep(k, gens)


@dataclass(frozen=True)
class ModelParams:
    """Parameters of a block-model homomorphism of degree m*strands.

    ``l`` divides ``m``; the block modulus is m//l.  ``t_table`` holds one row
    per generator, row i giving the 2l window offsets for generator i+1 in
    increasing absolute block-index order, each in {0..m//l - 1}.  When
    l == m the modulus is 1, every offset is 0 and the model degenerates to
    ``interleaving_rep(m, k)``.
    """

    m: int
    l: int
    strands: int
    t_table: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.m < 1 or self.l < 1 or self.m % self.l != 0:
            raise ValueError(f"l={self.l} must divide m={self.m}")
        if self.strands < 2:
            raise ValueError("need at least 2 strands")
        if len(self.t_table) != self.strands - 1:
            raise ValueError(
                f"expected {self.strands - 1} offset rows, got {len(self.t_table)}"
            )
        modulus = self.m // self.l
        for row in self.t_table:
            if len(row) != 2 * self.l:
                raise ValueError(f"each row needs {2 * self.l} offsets, got {len(row)}")
            if any(not 0 <= t < modulus for t in row):
                raise ValueError(f"row {row} has offsets outside 0..{modulus - 1}")

    @property
    def modulus(self) -> int:
        return self.m // self.l

    def condition_violation(self) -> tuple[int, int] | None:
        """First (i, j) violating the homomorphism condition on the table:
        for every i < strands-1 and j in {0..l-1},

            row_i[(1+j) % l] + row_i[l + (1+j) % l]
                = row_{i+1}[l + j] + row_{i+1}[(1+j) % l]   (mod m//l).

        Returns None when the table defines a homomorphism.
        """
        l, n = self.l, self.modulus
        for i in range(len(self.t_table) - 1):
            row, nxt = self.t_table[i], self.t_table[i + 1]
            for j in range(l):
                wrapped = (1 + j) % l
                if (row[wrapped] + row[l + wrapped]) % n != (nxt[l + j] + nxt[wrapped]) % n:
                    return (i + 1, j)
        return None

    def to_json_dict(self) -> dict:
        return {
            "m": self.m,
            "l": self.l,
            "k": self.strands,
            "t": [list(row) for row in self.t_table],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "ModelParams":
        expected = {"m", "l", "k", "t"}
        if set(data) != expected:
            raise ValueError(f"expected keys {sorted(expected)}; got {sorted(data)}")
        return cls(data["m"], data["l"], data["k"], tuple(tuple(row) for row in data["t"]))


def model_window_spec(params: ModelParams, i: int) -> BlockPermSpec:
    """The window spec of generator i: 2l blocks starting at (i-1)l+1, inner
    permutation the degree-2l interleaving pattern of those block indices."""
    l = params.l
    start = (i - 1) * l + 1
    sigma = [0] * (2 * l)
    for j in range(l):
        sigma[j] = i * l + 1 + j                      # lower half -> upper half
        sigma[l + j] = start + (j + 1) % l            # upper half -> shifted lower
    return BlockPermSpec(start, 2 * l, params.modulus, tuple(sigma), params.t_table[i - 1])


def model_generator_images(params: ModelParams, i: int) -> tuple[int, ...]:
    """Raw images of generator i: window spec times all outside block cycles."""
    m, l, k = params.m, params.l, params.strands
    modulus = params.modulus
    degree = m * k
    images = list(range(1, degree + 1))
    window_lo = (i - 1) * l + 1
    window_hi = (i + 1) * l
    if modulus > 1:
        for block in range(1, k * l + 1):
            if window_lo <= block <= window_hi:
                continue
            base = modulus * (block - 1)
            for q in range(modulus):
                images[base + q] = base + 1 + (q + 1) % modulus
    spec = model_window_spec(params, i)
    for block in spec.window:
        target = spec.sigma_of(block)
        shift = spec.offset_of(target)
        src = modulus * (block - 1)
        dst = modulus * (target - 1)
        for q in range(modulus):
            images[src + q] = dst + 1 + (q + shift) % modulus
    return tuple(images)


def block_model_rep_unchecked(params: ModelParams) -> BraidRep:
    """Build the rep without validating the homomorphism condition; intended
    only for searches that cross-validate the condition by brute force."""
    gens = tuple(
        Permutation(model_generator_images(params, i)) for i in range(1, params.strands)
    )
    return BraidRep(params.strands, gens)


def block_model_rep(params: ModelParams) -> BraidRep:
    """Build the block-model rep, refusing tables that are not homomorphisms."""
    violation = params.condition_violation()
    if violation is not None:
        raise ValueError(
            f"offset table violates the homomorphism condition at row pair "
            f"i={violation[0]}, residue j={violation[1]}"
        )
    return block_model_rep_unchecked(params)


def model_2k(which: int, k: int) -> BraidRep:
    """The three classical degree-2k models, numbered 1..3."""
    if which == 1:
        gens = tuple(
            Permutation.from_cycles([(2 * i - 1, 2 * i + 2, 2 * i, 2 * i + 1)], 2 * k)
            for i in range(1, k)
        )
        return BraidRep(k, gens)
    if which == 2:
        rows = tuple((0, 0) for _ in range(k - 1))
    elif which == 3:
        rows = tuple((0, 1) for _ in range(k - 1))
    else:
        raise ValueError(f"which must be 1, 2 or 3, got {which}")
    return block_model_rep(ModelParams(2, 1, k, rows))


def canonical_model_params(m: int, l: int, k: int, p: int) -> ModelParams:
    """The normal-form table: every row is (p, 0, ..., 0)."""
    modulus = m // l
    if not 0 <= p < modulus:
        raise ValueError(f"p={p} outside 0..{modulus - 1}")
    row = (p,) + (0,) * (2 * l - 1)
    return ModelParams(m, l, k, tuple(row for _ in range(k - 1)))
