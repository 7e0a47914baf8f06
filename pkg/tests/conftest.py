"""Shared oracle helpers and strategies for the test suite.

The mapping-based helpers below are deliberately independent of the package
code paths: they re-derive products and conjugations pointwise on dicts so
that closed-form results can be checked against brute expansion.
"""

from __future__ import annotations

from hypothesis import strategies as st

from braidperm import Permutation


def as_map(p: Permutation) -> dict[int, int]:
    return {x: p(x) for x in range(1, p.degree + 1)}


def map_compose(f: dict[int, int], g: dict[int, int]) -> dict[int, int]:
    """Pointwise (f after g)(x) = f(g(x))."""
    return {x: f[g[x]] for x in f}


def map_inverse(f: dict[int, int]) -> dict[int, int]:
    return {y: x for x, y in f.items()}


def map_conjugate(a: dict[int, int], b: dict[int, int]) -> dict[int, int]:
    """Pointwise b^-1 o a o b."""
    return map_compose(map_inverse(b), map_compose(a, b))


def from_map(f: dict[int, int]) -> Permutation:
    return Permutation(tuple(f[x] for x in sorted(f)))


def permutations_of_degree(n: int) -> st.SearchStrategy[Permutation]:
    return st.permutations(list(range(1, n + 1))).map(lambda xs: Permutation(tuple(xs)))


def permutation_pairs(max_degree: int = 30) -> st.SearchStrategy[tuple[Permutation, Permutation]]:
    return st.integers(1, max_degree).flatmap(
        lambda n: st.tuples(permutations_of_degree(n), permutations_of_degree(n))
    )
