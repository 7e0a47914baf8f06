"""Block cycles and block-respecting permutations with a closed-form algebra.

The ground set {1, ..., n} is partitioned into consecutive blocks of size m
(the modulus); block i covers the points m*(i-1)+1 .. m*i, and we write
point(i, q) = m*(i-1) + 1 + q for the q-th point of block i, q in {0..m-1}.

A ``BlockPermSpec`` describes a permutation acting on a window of r
consecutive blocks {j, ..., j+r-1}: it permutes the blocks by an inner
permutation ``sigma`` of the window indices and rotates each block
cyclically by a per-block offset, sending

    point(i, q)  ->  point(sigma(i), (q + offset[sigma(i)]) mod m)

and fixing every point outside the window.  These maps are closed under
composition, inversion and conjugation, with offset formulas implemented
below, and the spec's expansion conjugates each window block cycle onto the
block cycle selected by sigma.  When the inner permutation is a single
r-cycle the full cycle structure of the expansion has a closed form: with
s the sum of the offsets and l minimal such that l*s = 0 (mod m), the
expansion consists of exactly m/l cycles of length l*r.

Offsets are keyed by ABSOLUTE block index.  Positional offset lists found
in the literature map onto the window in increasing index order; the
constructors here take them in that positional order.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .perm import Permutation


def block_point(modulus: int, block: int, q: int) -> int:
    """The q-th point of the given block, q in {0..modulus-1}."""
    return modulus * (block - 1) + 1 + q


def block_cycle(modulus: int, block: int, degree: int | None = None) -> Permutation:
    """The m-cycle rotating one block: point(i, q) -> point(i, (q+1) mod m)."""
    if modulus < 1 or block < 1:
        raise ValueError("modulus and block index must be positive")
    min_degree = modulus * block
    if degree is None:
        degree = min_degree
    if degree < min_degree:
        raise ValueError(f"degree {degree} too small for block {block} at modulus {modulus}")
    points = tuple(block_point(modulus, block, q) for q in range(modulus))
    return Permutation.from_cycles([points] if modulus > 1 else [], degree)


@dataclass(frozen=True)
class BlockPermSpec:
    """Symbolic form of a window-of-blocks permutation.

    ``sigma[pos]`` is the absolute image of the block index window_start+pos;
    ``offsets[pos]`` is the rotation offset attached to that absolute index.
    """

    window_start: int
    window_len: int
    modulus: int
    sigma: tuple[int, ...]
    offsets: tuple[int, ...]

    def __post_init__(self) -> None:
        j, r, m = self.window_start, self.window_len, self.modulus
        if j < 1 or r < 1 or m < 1:
            raise ValueError("window_start, window_len and modulus must be positive")
        window = list(range(j, j + r))
        if sorted(self.sigma) != window:
            raise ValueError(f"sigma {self.sigma} is not a permutation of {window}")
        if len(self.offsets) != r:
            raise ValueError(f"expected {r} offsets, got {len(self.offsets)}")
        if any(not 0 <= t < m for t in self.offsets):
            raise ValueError(f"offsets {self.offsets} not all in 0..{m - 1}")

    # -- window accessors (absolute block indices) ---------------------------

    @property
    def window(self) -> range:
        return range(self.window_start, self.window_start + self.window_len)

    def sigma_of(self, block: int) -> int:
        return self.sigma[block - self.window_start]

    def sigma_inverse_of(self, block: int) -> int:
        return self.window_start + self.sigma.index(block)

    def offset_of(self, block: int) -> int:
        return self.offsets[block - self.window_start]

    @property
    def min_degree(self) -> int:
        return self.modulus * (self.window_start + self.window_len - 1)

    @classmethod
    def identity(cls, window_start: int, window_len: int, modulus: int) -> "BlockPermSpec":
        window = tuple(range(window_start, window_start + window_len))
        return cls(window_start, window_len, modulus, window, (0,) * window_len)

    # -- expansion ----------------------------------------------------------

    def expand(self, degree: int) -> Permutation:
        """The described permutation of {1..degree}; points off the window are fixed."""
        if degree < self.min_degree:
            raise ValueError(f"degree {degree} below minimum {self.min_degree}")
        m = self.modulus
        images = list(range(1, degree + 1))
        for block in self.window:
            target = self.sigma_of(block)
            shift = self.offset_of(target)
            src = m * (block - 1)
            dst = m * (target - 1)
            for q in range(m):
                images[src + q] = dst + 1 + (q + shift) % m
        return Permutation(tuple(images))

    def predicted_cycle_type(self) -> tuple[int, ...]:
        """Cycle type of the expansion, from the offset sum; needs a single-cycle sigma."""
        r = self.window_len
        if not self._sigma_is_full_cycle():
            raise ValueError("inner permutation is not a single cycle on the window")
        m = self.modulus
        s = sum(self.offsets) % m
        l = m // gcd(s, m) if s else 1
        length = l * r
        if length < 2:
            return ()
        return (length,) * (m // l)

    def _sigma_is_full_cycle(self) -> bool:
        block = self.window_start
        for _ in range(self.window_len - 1):
            block = self.sigma_of(block)
            if block == self.window_start:
                return False
        return self.sigma_of(block) == self.window_start

    # -- closed-form algebra --------------------------------------------------

    def _check_compatible(self, other: "BlockPermSpec") -> None:
        if (self.window_start, self.window_len, self.modulus) != (
            other.window_start,
            other.window_len,
            other.modulus,
        ):
            raise ValueError("window/modulus mismatch between specs")

    def __mul__(self, other: "BlockPermSpec") -> "BlockPermSpec":
        """Symbolic product; expand(a * b) = expand(a) * expand(b) (b first)."""
        self._check_compatible(other)
        sigma = tuple(self.sigma_of(other.sigma_of(i)) for i in self.window)
        m = self.modulus
        offsets = tuple(
            (other.offset_of(self.sigma_inverse_of(i)) + self.offset_of(i)) % m
            for i in self.window
        )
        return BlockPermSpec(self.window_start, self.window_len, m, sigma, offsets)

    def inverse(self) -> "BlockPermSpec":
        inv_sigma = tuple(self.sigma_inverse_of(i) for i in self.window)
        m = self.modulus
        offsets = tuple((-self.offset_of(self.sigma_of(i))) % m for i in self.window)
        return BlockPermSpec(self.window_start, self.window_len, m, inv_sigma, offsets)

    def conjugate(self, by: "BlockPermSpec") -> "BlockPermSpec":
        """Symbolic by^-1 * self * by, matching Permutation.conjugate on expansions."""
        self._check_compatible(by)
        m = self.modulus
        sigma = tuple(
            by.sigma_inverse_of(self.sigma_of(by.sigma_of(i))) for i in self.window
        )
        offsets = tuple(
            (
                by.offset_of(self.sigma_inverse_of(by.sigma_of(i)))
                + self.offset_of(by.sigma_of(i))
                - by.offset_of(by.sigma_of(i))
            )
            % m
            for i in self.window
        )
        return BlockPermSpec(self.window_start, self.window_len, m, sigma, offsets)

    # -- serialization --------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "window_start": self.window_start,
            "window_len": self.window_len,
            "modulus": self.modulus,
            "sigma": list(self.sigma),
            "offsets": list(self.offsets),
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "BlockPermSpec":
        expected = {"window_start", "window_len", "modulus", "sigma", "offsets"}
        if set(data) != expected:
            raise ValueError(f"expected keys {sorted(expected)}; got {sorted(data)}")
        return cls(
            data["window_start"],
            data["window_len"],
            data["modulus"],
            tuple(data["sigma"]),
            tuple(data["offsets"]),
        )
