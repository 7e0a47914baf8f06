"""The window-of-blocks algebra: expansion, cycle-structure law, closed forms."""

import itertools

import pytest

from conftest import as_map, from_map, map_compose, map_conjugate, map_inverse

from braidperm import BlockPermSpec, Permutation, block_cycle, format_cycles, parse_cycles


def all_window_specs(m: int, r: int, start: int = 1):
    window = list(range(start, start + r))
    for sigma in itertools.permutations(window):
        for offsets in itertools.product(range(m), repeat=r):
            yield BlockPermSpec(start, r, m, sigma, offsets)


def full_cycles(window: list[int]):
    for sigma in itertools.permutations(window):
        spec_like = {i: s for i, s in zip(window, sigma)}
        seen, x = 1, window[0]
        while spec_like[x] != window[0]:
            x = spec_like[x]
            seen += 1
        if seen == len(window):
            yield sigma


class TestBlockCycle:
    def test_examples(self):
        assert format_cycles(block_cycle(3, 2, 6)) == "(4,5,6)"
        assert format_cycles(block_cycle(6, 4, 24)) == "(19,20,21,22,23,24)"

    def test_modulus_one_is_identity(self):
        assert block_cycle(1, 5).is_identity()

    def test_degree_too_small(self):
        with pytest.raises(ValueError, match="too small"):
            block_cycle(3, 2, 5)


class TestExpand:
    def test_zero_sum_example(self):
        spec = BlockPermSpec(1, 2, 3, (2, 1), (1, 2))
        assert format_cycles(spec.expand(6)) == "(1,6)(2,4)(3,5)"

    def test_full_cycle_example(self):
        spec = BlockPermSpec(1, 2, 3, (2, 1), (1, 0))
        assert format_cycles(spec.expand(6)) == "(1,4,2,5,3,6)"

    def test_modulus_one_recovers_sigma(self):
        # Singleton blocks: the expansion is the inner permutation itself.
        spec = BlockPermSpec(1, 3, 1, (2, 3, 1), (0, 0, 0))
        assert spec.expand(3) == Permutation((2, 3, 1))

    def test_larger_degree_embeds(self):
        spec = BlockPermSpec(1, 2, 3, (2, 1), (1, 0))
        assert spec.expand(9) == spec.expand(6).with_degree(9)

    def test_degree_too_small(self):
        spec = BlockPermSpec(2, 2, 3, (3, 2), (0, 0))
        with pytest.raises(ValueError, match="below minimum"):
            spec.expand(8)

    def test_window_not_at_origin(self):
        spec = BlockPermSpec(2, 2, 3, (3, 2), (1, 0))
        expanded = spec.expand(9)
        assert expanded.fix() == {1, 2, 3}
        assert expanded.cycle_type() == (6,)


class TestPredictedCycleType:
    def test_printed_examples(self):
        assert BlockPermSpec(1, 4, 6, (3, 4, 2, 1), (2, 1, 0, 5)).predicted_cycle_type() == (12, 12)
        assert BlockPermSpec(1, 2, 3, (2, 1), (1, 2)).predicted_cycle_type() == (2, 2, 2)
        assert BlockPermSpec(1, 2, 3, (2, 1), (1, 0)).predicted_cycle_type() == (6,)

    def test_rejects_non_cycle_inner_permutation(self):
        spec = BlockPermSpec.identity(1, 2, 3)
        with pytest.raises(ValueError, match="single cycle"):
            spec.predicted_cycle_type()

    def test_matches_expansion_exhaustively(self):
        # Structure law checked against brute expansion for every window
        # shape up to m=5, r=4 (the acceptance suite pushes m to 6).
        for m in range(1, 6):
            for r in range(2, 5):
                window = list(range(1, r + 1))
                for sigma in full_cycles(window):
                    for offsets in itertools.product(range(m), repeat=r):
                        spec = BlockPermSpec(1, r, m, sigma, offsets)
                        assert spec.predicted_cycle_type() == spec.expand(m * r).cycle_type()

    def test_single_block_window(self):
        # Window of one block: pure rotation, structure still exact.
        for m in range(1, 7):
            for t in range(m):
                spec = BlockPermSpec(1, 1, m, (1,), (t,))
                assert spec.predicted_cycle_type() == spec.expand(m).cycle_type()


class TestClosedForms:
    def test_compose_example(self):
        a = BlockPermSpec(1, 2, 3, (2, 1), (1, 0))
        b = BlockPermSpec(1, 2, 3, (2, 1), (1, 2))
        prod = a * b
        assert prod.sigma == (1, 2)
        assert prod.offsets == (0, 1)
        assert format_cycles(prod.expand(6)) == "(4,5,6)"

    def test_compose_identity(self):
        a = BlockPermSpec(1, 2, 3, (2, 1), (1, 2))
        assert a * BlockPermSpec.identity(1, 2, 3) == a

    def test_square_of_interleaver(self):
        a = BlockPermSpec(1, 2, 2, (2, 1), (0, 1))
        sq = a * a
        assert sq.sigma == (1, 2)
        assert sq.offsets == (1, 1)
        assert sq.expand(4) == parse_cycles("(1,2)(3,4)", 4)

    def test_inverse_examples(self):
        a = BlockPermSpec(1, 2, 3, (2, 1), (1, 0))
        assert a.inverse().offsets == (0, 2)
        ident = BlockPermSpec.identity(1, 2, 4)
        assert ident.inverse() == ident
        involution = BlockPermSpec(1, 2, 3, (2, 1), (1, 2))
        assert involution.inverse() == involution

    def test_conjugate_by_identity(self):
        a = BlockPermSpec(1, 2, 3, (2, 1), (1, 0))
        assert a.conjugate(BlockPermSpec.identity(1, 2, 3)) == a

    def test_conjugate_example_against_pointwise(self):
        target = BlockPermSpec(1, 2, 3, (2, 1), (1, 0))
        by = BlockPermSpec(1, 2, 3, (2, 1), (1, 2))
        result = target.conjugate(by)
        assert result.sigma == (2, 1)
        oracle = from_map(
            map_conjugate(as_map(target.expand(6)), as_map(by.expand(6)))
        )
        assert result.expand(6) == oracle

    def test_conjugate_by_commuting_rotations(self):
        target = BlockPermSpec(1, 2, 3, (2, 1), (1, 0))
        by = BlockPermSpec(1, 2, 3, (1, 2), (1, 1))  # both blocks rotated: commutes
        assert target.conjugate(by) == target

    def test_window_mismatch(self):
        a = BlockPermSpec(1, 2, 3, (2, 1), (1, 0))
        b = BlockPermSpec(2, 2, 3, (3, 2), (1, 0))
        with pytest.raises(ValueError, match="mismatch"):
            a * b

    def test_algebra_matches_expansion_exhaustively(self):
        # Symbolic product, inverse and conjugation agree with pointwise
        # arithmetic for every spec pair on a shared window, m <= 4, r <= 3.
        for m in range(1, 5):
            for r in range(1, 4):
                degree = m * r
                specs = [(s, s.expand(degree)) for s in all_window_specs(m, r)]
                for spec, expanded in specs:
                    assert spec.inverse().expand(degree) == expanded.inverse()
                for (a, ea), (b, eb) in itertools.product(specs, repeat=2):
                    assert (a * b).expand(degree) == ea * eb
                    assert a.conjugate(b).expand(degree) == ea.conjugate(eb)

    def test_algebra_on_shifted_window(self):
        for (a, b) in itertools.product(all_window_specs(2, 2, start=3), repeat=2):
            degree = 8
            assert (a * b).expand(degree) == a.expand(degree) * b.expand(degree)
            assert a.conjugate(b).expand(degree) == a.expand(degree).conjugate(b.expand(degree))


class TestBlockActionLaw:
    def test_expansion_conjugates_blocks(self):
        # Conjugating the block cycle at i by the inverse expansion yields
        # the block cycle at sigma(i), for every window spec.
        for m in range(1, 4):
            for r in range(1, 4):
                degree = m * r
                for spec in all_window_specs(m, r):
                    inv = spec.expand(degree).inverse()
                    for i in spec.window:
                        assert block_cycle(m, i, degree).conjugate(inv) == block_cycle(
                            m, spec.sigma_of(i), degree
                        )

    def test_every_law_solution_factors(self):
        # Exhaustive converse at m=2,3 with r=2: any permutation conjugating
        # each block cycle onto its swapped sibling is the expansion of a
        # window spec, recovered from the images of the block base points.
        for m in (2, 3):
            degree = 2 * m
            a1, a2 = block_cycle(m, 1, degree), block_cycle(m, 2, degree)
            for images in itertools.permutations(range(1, degree + 1)):
                p = Permutation(images)
                inv = p.inverse()
                if a1.conjugate(inv) != a2 or a2.conjugate(inv) != a1:
                    continue
                t2 = (p(1) - m - 1) % m          # image of point(1, 0) in block 2
                t1 = (p(m + 1) - 1) % m          # image of point(2, 0) in block 1
                spec = BlockPermSpec(1, 2, m, (2, 1), (t1, t2))
                assert spec.expand(degree) == p


class TestJson:
    def test_round_trip(self):
        spec = BlockPermSpec(2, 3, 4, (4, 2, 3), (1, 0, 3))
        assert BlockPermSpec.from_json_dict(spec.to_json_dict()) == spec

    def test_unknown_keys_rejected(self):
        data = BlockPermSpec.identity(1, 2, 2).to_json_dict()
        data["extra"] = True
        with pytest.raises(ValueError, match="expected keys"):
            BlockPermSpec.from_json_dict(data)

    def test_invalid_spec_rejected(self):
        with pytest.raises(ValueError, match="not a permutation"):
            BlockPermSpec(1, 2, 3, (1, 1), (0, 0))
        with pytest.raises(ValueError, match="offsets"):
            BlockPermSpec(1, 2, 3, (2, 1), (3, 0))
