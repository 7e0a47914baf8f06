"""Model constructors, braid-relation verification, words and serialization."""

import itertools

import pytest

from braidperm import (
    BlockPermSpec,
    BraidRep,
    ModelParams,
    Permutation,
    block_model_rep,
    block_model_rep_unchecked,
    canonical_rep,
    disjoint_product,
    interleaving_rep,
    is_braid_like,
    model_2k,
    model_window_spec,
    parse_cycles,
    verify_braid_relations,
    word_image,
)


def all_tables(m: int, l: int, k: int):
    modulus = m // l
    width = 2 * l
    for flat in itertools.product(range(modulus), repeat=width * (k - 1)):
        yield tuple(flat[i * width : (i + 1) * width] for i in range(k - 1))


class TestCanonical:
    def test_small(self):
        rep = canonical_rep(3)
        assert rep.gens == (parse_cycles("(1,2)", 3), parse_cycles("(2,3)", 3))
        assert canonical_rep(2).gens == (parse_cycles("(1,2)", 2),)

    def test_relations(self):
        assert verify_braid_relations(canonical_rep(7)).ok


class TestInterleaving:
    def test_first_generator_m3(self):
        assert interleaving_rep(3, 7).generator(1) == parse_cycles("(1,4,2,5,3,6)", 21)

    def test_first_generator_m2(self):
        assert interleaving_rep(2, 7).generator(1) == parse_cycles("(1,3,2,4)", 14)

    def test_m1_is_canonical(self):
        assert interleaving_rep(1, 5) == canonical_rep(5)

    def test_generators_are_2m_cycles(self):
        rep = interleaving_rep(4, 5)
        for g in rep.gens:
            assert g.cycle_type() == (8,)

    def test_relations_hold_across_range(self):
        for m in range(1, 7):
            for k in range(2, 11):
                assert verify_braid_relations(interleaving_rep(m, k)).ok, (m, k)


class TestBlockModel:
    def test_2k_models_match_formulas(self):
        k = 7
        rep2 = model_2k(2, k)
        for i in range(1, k):
            cycles = [(2 * j - 1, 2 * j) for j in range(1, k + 1) if j not in (i, i + 1)]
            cycles += [(2 * i - 1, 2 * i + 1), (2 * i, 2 * i + 2)]
            assert rep2.generator(i) == Permutation.from_cycles(cycles, 2 * k)
        rep3 = model_2k(3, k)
        for i in range(1, k):
            cycles = [(2 * j - 1, 2 * j) for j in range(1, k + 1) if j not in (i, i + 1)]
            cycles += [(2 * i - 1, 2 * i + 2, 2 * i, 2 * i + 1)]
            assert rep3.generator(i) == Permutation.from_cycles(cycles, 2 * k)

    def test_first_2k_model_generator(self):
        assert model_2k(1, 7).generator(3) == parse_cycles("(5,8,6,7)", 14)

    def test_which_out_of_range(self):
        with pytest.raises(ValueError):
            model_2k(4, 5)

    def test_invalid_table_rejected_with_location(self):
        params = ModelParams(3, 1, 4, ((1, 0), (0, 0), (0, 0)))
        assert params.condition_violation() == (1, 0)
        with pytest.raises(ValueError, match="i=1"):
            block_model_rep(params)

    def test_degenerate_l_equals_m(self):
        params = ModelParams(3, 3, 5, tuple((0,) * 6 for _ in range(4)))
        assert block_model_rep(params) == interleaving_rep(3, 5)

    def test_condition_is_exactly_the_relation_test(self):
        # Brute force over every offset table for modulus 2 and 3 at small
        # strand counts: the relations hold iff the modular condition does.
        for m in (2, 3):
            for k in (3, 4, 5):
                if m ** (2 * (k - 1)) > 7000:
                    continue
                for rows in all_tables(m, 1, k):
                    params = ModelParams(m, 1, k, rows)
                    ok = verify_braid_relations(block_model_rep_unchecked(params)).ok
                    assert ok == (params.condition_violation() is None), (m, k, rows)

    def test_braid_likeness_strips_to_window_parts(self):
        # Adjacent generators are braid-like iff their window parts are,
        # over all tables valid or not.
        m, l, k = 3, 1, 4
        degree = m * k
        for rows in all_tables(m, l, k):
            params = ModelParams(m, l, k, rows)
            rep = block_model_rep_unchecked(params)
            windows = [model_window_spec(params, i).expand(degree) for i in range(1, k)]
            for i in range(k - 2):
                assert is_braid_like(rep.gens[i], rep.gens[i + 1]) == is_braid_like(
                    windows[i], windows[i + 1]
                )

    def test_square_restriction_criterion(self):
        # Window parts of adjacent generators are braid-like iff their
        # squares agree on the shared middle blocks; exhaustive for l <= 2
        # and modulus <= 3.
        for l in (1, 2):
            for modulus in (2, 3):
                degree = modulus * 3 * l
                middle = [
                    x
                    for b in range(l + 1, 2 * l + 1)
                    for x in range(modulus * (b - 1) + 1, modulus * b + 1)
                ]
                for t1 in itertools.product(range(modulus), repeat=2 * l):
                    params1 = ModelParams(modulus * l, l, 3, (t1, (0,) * 2 * l))
                    c1 = model_window_spec(params1, 1).expand(degree)
                    for t2 in itertools.product(range(modulus), repeat=2 * l):
                        params2 = ModelParams(modulus * l, l, 3, ((0,) * 2 * l, t2))
                        c2 = model_window_spec(params2, 2).expand(degree)
                        squares_agree = all(
                            (c1 * c1)(x) == (c2 * c2)(x) for x in middle
                        )
                        assert is_braid_like(c1, c2) == squares_agree, (l, modulus, t1, t2)


class TestVerification:
    def test_swapped_generators_fail_with_commute_report(self):
        rep = canonical_rep(5)
        gens = list(rep.gens)
        gens[1], gens[3] = gens[3], gens[1]
        report = verify_braid_relations(BraidRep(5, tuple(gens)))
        assert not report.ok
        assert ("commute", 1, 4) in report.failures

    def test_phi_family_member_passes(self):
        params = ModelParams(3, 1, 5, ((1, 2), (2, 1), (0, 0)))
        assert params.condition_violation() is None
        assert verify_braid_relations(block_model_rep(params)).ok


class TestWordImage:
    def test_empty_word(self):
        rep = canonical_rep(4)
        assert word_image(rep, []).is_identity()

    def test_cancelling_word(self):
        rep = interleaving_rep(2, 4)
        assert word_image(rep, [1, -1]).is_identity()

    def test_full_shift_word(self):
        rep = canonical_rep(4)
        alpha = word_image(rep, [1, 2, 3])
        assert alpha == parse_cycles("(1,2,3,4)", 4)

    def test_shift_property_across_models(self):
        reps = [
            canonical_rep(5),
            interleaving_rep(2, 6),
            interleaving_rep(3, 5),
            model_2k(2, 6),
            model_2k(3, 5),
            block_model_rep(ModelParams(3, 1, 5, ((1, 2), (0, 0), (2, 1)))),
        ]
        for rep in reps:
            assert verify_braid_relations(rep).ok
            alpha = word_image(rep, list(range(1, rep.strands)))
            for i in range(1, rep.strands - 1):
                shifted = alpha * rep.generator(i) * alpha.inverse()
                assert shifted == rep.generator(i + 1), (rep.strands, i)

    def test_index_out_of_range(self):
        with pytest.raises(ValueError, match="out of range"):
            word_image(canonical_rep(4), [4])


class TestRepPlumbing:
    def test_json_round_trip(self):
        rep = model_2k(3, 5)
        assert BraidRep.from_json_dict(rep.to_json_dict()) == rep

    def test_json_unknown_keys_rejected(self):
        data = canonical_rep(3).to_json_dict()
        data["note"] = "x"
        with pytest.raises(ValueError, match="expected keys"):
            BraidRep.from_json_dict(data)

    def test_model_params_json_round_trip(self):
        params = ModelParams(4, 2, 4, ((0, 1, 1, 0), (1, 0, 0, 1), (0, 0, 1, 1)))
        assert ModelParams.from_json_dict(params.to_json_dict()) == params

    def test_shape_validation(self):
        with pytest.raises(ValueError, match="divide"):
            ModelParams(3, 2, 4, ((0, 0),) * 3)
        with pytest.raises(ValueError, match="rows"):
            ModelParams(2, 1, 4, ((0, 0),) * 2)
        with pytest.raises(ValueError, match="degrees differ"):
            BraidRep(3, (Permutation.identity(3), Permutation.identity(4)))

    def test_disjoint_product(self):
        rep = disjoint_product(canonical_rep(4), interleaving_rep(2, 4))
        assert rep.degree == 12
        assert verify_braid_relations(rep).ok
        assert rep.generator(1) == parse_cycles("(1,2)(5,7,6,8)", 12)
