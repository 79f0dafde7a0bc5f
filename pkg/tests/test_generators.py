"""Seeded ensembles: hypotheses hold by construction, streams replay exactly."""

import numpy as np
import pytest

from absval import (
    EnsembleSpec,
    Seed,
    adjoint,
    commutes,
    condition_estimate,
    frobenius,
    gen_anti_symmetric,
    gen_commuting_family_one_nonnormal,
    gen_commuting_normal_family,
    gen_fuglede_pair,
    gen_general,
    gen_negative_cross_pair,
    gen_ordered_psd_pair,
    gen_sa_pair_normal_product,
    gen_sandwich_pair,
    gen_unitary,
    is_anti_symmetric,
    is_normal,
    is_positive,
    is_self_adjoint,
    loewner_leq,
    sample,
)


class TestSeedStreams:
    def test_identical_tuples_identical_bits(self):
        a = gen_general(3, Seed(42, "x", 7))
        b = gen_general(3, Seed(42, "x", 7))
        assert a.tobytes() == b.tobytes()

    def test_distinct_tags_and_trials_differ(self):
        base = gen_general(3, Seed(42, "x", 7))
        assert gen_general(3, Seed(42, "y", 7)).tobytes() != base.tobytes()
        assert gen_general(3, Seed(42, "x", 8)).tobytes() != base.tobytes()
        assert gen_general(3, Seed(43, "x", 7)).tobytes() != base.tobytes()

    def test_replay_master_reproduces_stream(self):
        seed = Seed(123456789, "C-TRI:3", 41)
        replayed = Seed(seed.replay_master, "C-TRI:3", 0)
        a, b = gen_general(3, seed), gen_general(3, replayed)
        assert a.tobytes() == b.tobytes()

    def test_replay_master_is_identity_at_trial_zero(self):
        assert Seed(77, "t", 0).replay_master == 77


class TestUnitary:
    def test_unitarity_residual(self):
        for n in (1, 2, 5, 8):
            for seed in range(20):
                u = gen_unitary(n, Seed(seed, f"u:{n}"))
                assert frobenius(adjoint(u) @ u - np.eye(n)) <= 1e-10 * n

    def test_scalar_case_has_unit_modulus(self):
        u = gen_unitary(1, 5)
        assert abs(abs(u[0, 0]) - 1.0) <= 1e-12


class TestCommutingNormalFamily:
    def test_pairwise_commuting_and_normal(self):
        for seed in range(50):
            fam = gen_commuting_normal_family(4, 3, seed)
            for m in fam:
                res = is_normal(m)
                assert res.holds and res.residual <= 1e-9
            for i in range(3):
                for j in range(i + 1, 3):
                    res = commutes(fam[i], fam[j])
                    assert res.holds and res.residual <= 1e-10

    def test_real_diagonal_gives_self_adjoint(self):
        fam = gen_commuting_normal_family(3, 2, 7, real_diagonal=True)
        assert all(is_self_adjoint(m) for m in fam)

    def test_invertible_flag_bounds_condition(self):
        for seed in range(20):
            (a,) = gen_commuting_normal_family(4, 1, seed, invertible=True)
            assert condition_estimate(a) <= 11.0  # annulus 0.1..1 plus rounding


class TestOneNonNormalFamily:
    def test_structure(self):
        for seed in range(40):
            fam = gen_commuting_family_one_nonnormal(4, 3, seed)
            non_normal = [m for m in fam if not is_normal(m)]
            assert len(non_normal) == 1
            # the non-normal member is robustly non-normal, not borderline
            assert is_normal(non_normal[0]).residual > 1e-3
            for i in range(len(fam)):
                for j in range(i + 1, len(fam)):
                    assert commutes(fam[i], fam[j]).residual <= 1e-10

    def test_needs_dimension_two(self):
        with pytest.raises(ValueError):
            gen_commuting_family_one_nonnormal(1, 3, 0)


class TestSelfAdjointPairNormalProduct:
    def test_hypotheses_hold(self):
        for seed in range(60):
            a, b = gen_sa_pair_normal_product(seed)
            assert a.shape == (2, 2)
            assert is_self_adjoint(a).residual <= 1e-12
            assert is_self_adjoint(b).residual <= 1e-12
            assert is_normal(a @ b).residual <= 1e-10

    def test_product_is_not_self_adjoint_nor_commuting(self):
        for seed in range(60):
            a, b = gen_sa_pair_normal_product(seed)
            prod = a @ b
            assert frobenius(prod - adjoint(prod)) > 1e-4
            assert not commutes(a, b)


class TestNegativeCrossPair:
    def test_cross_term_nonpositive_and_commuting(self):
        for seed in range(50):
            a, b = gen_negative_cross_pair(3, seed)
            assert is_normal(a)
            assert commutes(a, b).residual <= 1e-12
            cross = adjoint(a) @ b + adjoint(b) @ a
            assert loewner_leq(cross, np.zeros_like(cross)).holds


class TestOrderedPsdPair:
    @pytest.mark.parametrize("commuting", [False, True])
    def test_order_and_positivity(self, commuting):
        for seed in range(50):
            a, b = gen_ordered_psd_pair(3, seed, commuting)
            assert is_positive(b)
            assert loewner_leq(b, a).holds
            if commuting:
                assert commutes(a, b).residual <= 1e-10

    def test_noncommuting_pairs_usually_do_not_commute(self):
        hits = sum(
            bool(commutes(*gen_ordered_psd_pair(3, seed, False))) for seed in range(20)
        )
        assert hits == 0


class TestSandwichPair:
    def test_sandwich_holds(self):
        for seed in range(50):
            t, s = gen_sandwich_pair(3, seed)
            assert is_self_adjoint(t) and is_self_adjoint(s)
            assert is_positive(s)
            assert loewner_leq(-s, t).holds
            assert loewner_leq(t, s).holds


class TestFugledePair:
    def test_both_truth_values_appear(self):
        verdicts = set()
        for seed in range(40):
            a, b = gen_fuglede_pair(3, seed)
            assert is_normal(a)
            verdicts.add(bool(commutes(a, b)))
        assert verdicts == {True, False}


class TestHypothesisSoundness:
    """Every ensemble satisfies its claim's hypothesis, not just usually."""

    def test_all_claim_ensembles_pass_their_hypotheses(self):
        from absval import TolerancePolicy, catalog

        pol = TolerancePolicy(rel=1e-9, abs=1e-12)
        for cid, claim in catalog().items():
            if claim.expect != "ALWAYS_HOLDS":
                continue
            for n in (2, 3, 4, 8):
                for trial in range(40):
                    mats = sample(claim.ensemble, n, Seed(99, f"{cid}:{n}", trial))
                    ok, flags, _ = claim.hypothesis(mats, pol)
                    assert ok, (cid, n, trial, flags)


class TestGeneralAndSpecs:
    def test_zero_scale_gives_zero_matrix(self):
        assert frobenius(gen_general(3, 1, scale=0.0)) == 0.0

    def test_finite_entries(self):
        assert np.all(np.isfinite(gen_general(2, 9)))

    def test_anti_symmetric_kind(self):
        assert is_anti_symmetric(gen_anti_symmetric(4, 3))

    def test_ensemble_spec_validation(self):
        with pytest.raises(ValueError):
            EnsembleSpec(kind="nonsense")
        with pytest.raises(ValueError):
            EnsembleSpec(kind="general", k=0)
        with pytest.raises(ValueError):
            EnsembleSpec(kind="general", dim=0)

    def test_sample_respects_pinned_dimension(self):
        spec = EnsembleSpec(kind="sa_pair_normal_product", dim=2)
        a, b = sample(spec, 8, Seed(3, "pin"))
        assert a.shape == b.shape == (2, 2)

    def test_sample_unitary_kind(self):
        (u,) = sample(EnsembleSpec(kind="unitary"), 3, Seed(1, "u"))
        assert frobenius(adjoint(u) @ u - np.eye(3)) <= 1e-10 * 3

    def test_sample_is_deterministic(self):
        spec = EnsembleSpec(kind="commuting_normal_family", k=2)
        first = sample(spec, 3, Seed(5, "det", 2))
        second = sample(spec, 3, Seed(5, "det", 2))
        assert all(x.tobytes() == y.tobytes() for x, y in zip(first, second))
