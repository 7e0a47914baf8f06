"""Exact arithmetic on permutations of the point set {1, ..., n}.

Conventions used throughout the package:

- Points are 1-based.  A permutation of degree n acts on {1, ..., n}.
- Permutations act on the left, and products compose right-to-left:
  (f * g)(x) = f(g(x)), so the right factor is applied first.
- Conjugation is a^b = b^-1 * a * b.  Under the product convention above
  this relabels the cycle (x1, ..., xr) of a into (b^-1(x1), ..., b^-1(xr)).
- Cycle notation lists cycles sorted by their minimum point, each cycle
  starting at its minimum point.  Fixed points are never printed; the
  identity prints as "()".

Internally a permutation stores the tuple ``images`` where ``images[x - 1]``
is the image of the point x.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1, .., n}, stored as the tuple of images of 1..n."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.images)
        if n < 1:
            raise ValueError("degree must be at least 1")
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError(f"images {self.images} are not a bijection of 1..{n}")

    # -- constructors ------------------------------------------------------

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(tuple(range(1, degree + 1)))

    @classmethod
    def transposition(cls, degree: int, a: int, b: int) -> "Permutation":
        return cls.from_cycles([(a, b)], degree)

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> "Permutation":
        """Build a permutation from disjoint cycles; unlisted points are fixed."""
        images = list(range(1, degree + 1))
        seen: set[int] = set()
        for cycle in cycles:
            for x in cycle:
                if not 1 <= x <= degree:
                    raise ValueError(f"point {x} exceeds degree {degree}")
                if x in seen:
                    raise ValueError(f"repeated point {x} in cycle list")
                seen.add(x)
            for pos, x in enumerate(cycle):
                images[x - 1] = cycle[(pos + 1) % len(cycle)]
        return cls(tuple(images))

    # -- basic structure ---------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def is_identity(self) -> bool:
        return all(y == x + 1 for x, y in enumerate(self.images))

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Compose: (self * other)(x) = self(other(x)), right factor first."""
        if self.degree != other.degree:
            raise ValueError(
                f"degree mismatch: {self.degree} vs {other.degree}"
            )
        f = self.images
        return Permutation(tuple(f[y - 1] for y in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for x, y in enumerate(self.images, start=1):
            inv[y - 1] = x
        return Permutation(tuple(inv))

    def __pow__(self, exponent: int) -> "Permutation":
        result = Permutation.identity(self.degree)
        base = self if exponent >= 0 else self.inverse()
        for _ in range(abs(exponent)):
            result = base * result
        return result

    def conjugate(self, by: "Permutation") -> "Permutation":
        """Return by^-1 * self * by; the cycle type is preserved."""
        if self.degree != by.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {by.degree}")
        binv = by.inverse().images
        f = self.images
        g = by.images
        return Permutation(tuple(binv[f[g[x] - 1] - 1] for x in range(self.degree)))

    def with_degree(self, degree: int) -> "Permutation":
        """Embed into a larger degree, fixing the new points."""
        if degree < self.degree:
            raise ValueError(f"cannot shrink degree {self.degree} to {degree}")
        return Permutation(self.images + tuple(range(self.degree + 1, degree + 1)))

    # -- supports and cycles -----------------------------------------------

    def support(self) -> frozenset[int]:
        return frozenset(x for x, y in enumerate(self.images, start=1) if y != x)

    def fix(self) -> frozenset[int]:
        return frozenset(x for x, y in enumerate(self.images, start=1) if y == x)

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Disjoint cycles of length >= 2, sorted by minimum point."""
        seen = [False] * self.degree
        out: list[tuple[int, ...]] = []
        for start in range(1, self.degree + 1):
            if seen[start - 1]:
                continue
            cycle = [start]
            seen[start - 1] = True
            x = self.images[start - 1]
            while x != start:
                cycle.append(x)
                seen[x - 1] = True
                x = self.images[x - 1]
            if len(cycle) > 1:
                out.append(tuple(cycle))
        return tuple(out)

    def cycle_type(self) -> tuple[int, ...]:
        """Multiset of cycle lengths >= 2, non-increasing."""
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def r_components(self) -> dict[int, tuple[tuple[int, ...], ...]]:
        """Group the cycles by their length."""
        by_length: dict[int, list[tuple[int, ...]]] = {}
        for cycle in self.cycles():
            by_length.setdefault(len(cycle), []).append(cycle)
        return {r: tuple(cs) for r, cs in sorted(by_length.items())}

    # -- serialization -----------------------------------------------------

    def to_json_dict(self) -> dict:
        return {"degree": self.degree, "cycles": [list(c) for c in self.cycles()]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "Permutation":
        if set(data) != {"degree", "cycles"}:
            raise ValueError(f"expected keys degree, cycles; got {sorted(data)}")
        return cls.from_cycles(data["cycles"], data["degree"])

    def __str__(self) -> str:
        return format_cycles(self)


def is_braid_like(g: Permutation, h: Permutation) -> bool:
    """True iff g*h*g = h*g*h."""
    if g.degree != h.degree:
        raise ValueError(f"degree mismatch: {g.degree} vs {h.degree}")
    return g * h * g == h * g * h


def commutes(g: Permutation, h: Permutation) -> bool:
    return g * h == h * g


def format_cycles(p: Permutation) -> str:
    """Cycle notation without fixed points; identity formats as "()"."""
    cycles = p.cycles()
    if not cycles:
        return "()"
    return "".join("(" + ",".join(str(x) for x in c) + ")" for c in cycles)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse whitespace-tolerant cycle notation with an explicit degree."""
    remainder = _CYCLE_RE.sub("", text)
    if remainder.strip():
        raise ValueError(f"malformed cycle text near {remainder.strip()[:20]!r}")
    cycles: list[list[int]] = []
    for body in _CYCLE_RE.findall(text):
        if not body.strip():
            continue
        try:
            points = [int(tok) for tok in body.split(",")]
        except ValueError as exc:
            raise ValueError(f"malformed cycle body {body!r}") from exc
        cycles.append(points)
    return Permutation.from_cycles(cycles, degree)


def random_permutation(degree: int, rng: random.Random) -> Permutation:
    images = list(range(1, degree + 1))
    rng.shuffle(images)
    return Permutation(tuple(images))


def all_permutations(degree: int) -> Iterable[Permutation]:
    """Every element of the symmetric group on {1..degree}, in lex order."""
    import itertools

    for images in itertools.permutations(range(1, degree + 1)):
        yield Permutation(images)
