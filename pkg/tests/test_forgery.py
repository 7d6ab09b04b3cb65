"""Forgery procedure, audit oracle, claim report, and the brute-force census."""

import random

import pytest

from paircommit import (
    COMMITS_TO_0,
    COMMITS_TO_1,
    Commitment,
    INVALID,
    NotInvertible,
    accepting_census,
    audit,
    binding_key_from_exponent,
    binding_keygen,
    claim_report,
    commit,
    forge,
    gen_prime,
    hiding_key_from_exponent,
    is_in_subgroup_q,
    key_fingerprint,
    setup_curve,
    setup_transparent,
    verify,
)


@pytest.fixture
def binding35(t35):
    return binding_key_from_exponent(t35, 3)


class TestForge:
    def test_worked_example(self, binding35, t35):
        ck, _ = binding35
        rec = forge(ck, 5, 7, beta1=2)
        assert rec.k_a == 3 and rec.ell == 4
        assert rec.k_a * 7 - rec.ell * 5 == 1
        assert rec.alpha1 == 21
        # (2*21 - 1) = 41 = 6 mod 35, 6^-1 = 6, so alpha2 = 2*6 = 12
        assert 2 * 21 - 1 - 6 == 35 and 6 * 6 % 35 == 1
        assert rec.alpha2 == 12
        assert rec.beta2 == 144 % 35 == 4
        assert rec.c.c == t35.g ** 26   # 21 + 15*12 mod 35
        assert rec.pi.pi == t35.g ** 27  # 2 + 15*4 mod 35
        assert verify(ck, rec.c, rec.pi)

    def test_exponent_system_satisfied(self, binding35, rng):
        """The three congruences the construction solves, checked directly."""
        ck, _ = binding35
        for _ in range(30):
            rec = forge(ck, 5, 7, rng=rng)
            n = 35
            assert rec.alpha1 * (rec.alpha1 - 1) % n == 0
            assert (2 * rec.alpha1 * rec.alpha2 - rec.alpha2) % n == rec.beta1 % n
            assert rec.alpha2 ** 2 % n == rec.beta2

    def test_alpha1_never_a_bit(self, binding35, rng):
        ck, _ = binding35
        for _ in range(30):
            rec = forge(ck, 5, 7, rng=rng)
            assert rec.alpha1 % 35 not in (0, 1)

    def test_g_alpha1_outside_gq(self, binding35, t35):
        ck, _ = binding35
        rec = forge(ck, 5, 7, beta1=2)
        g_alpha1 = t35.g ** rec.alpha1
        # (g^a1)^q = g^q exactly, and g^q is not the identity
        assert g_alpha1 ** 7 == t35.g ** 7
        assert not (t35.g ** 7).is_identity()
        assert not is_in_subgroup_q(g_alpha1, 7)

    def test_zero_beta1_degenerate_case(self, binding35, t35):
        ck, _ = binding35
        rec = forge(ck, 5, 7, beta1=0)
        assert rec.alpha2 == 0 and rec.beta2 == 0
        assert rec.c.c == t35.g ** rec.alpha1
        assert rec.pi.pi.is_identity()
        assert verify(ck, rec.c, rec.pi)

    def test_beta1_out_of_range(self, binding35):
        ck, _ = binding35
        with pytest.raises(ValueError):
            forge(ck, 5, 7, beta1=35)

    def test_needs_beta1_or_rng(self, binding35):
        ck, _ = binding35
        with pytest.raises(ValueError):
            forge(ck, 5, 7)

    def test_wrong_factorization_rejected(self, binding35):
        ck, _ = binding35
        with pytest.raises(ValueError):
            forge(ck, 3, 7, beta1=2)
        with pytest.raises(ValueError):
            forge(ck, 7, 5, beta1=2)

    def test_hiding_key_needs_flag(self, t35, rng):
        ck, _ = hiding_key_from_exponent(t35, 3)
        with pytest.raises(ValueError):
            forge(ck, 5, 7, beta1=2)
        rec = forge(ck, 5, 7, beta1=2, allow_hiding=True)
        assert verify(ck, rec.c, rec.pi)

    @pytest.mark.parametrize("backend", ["transparent", "curve"])
    def test_always_accepts_random_contexts(self, backend, rng):
        """Every forgery passes verification on fresh desk-scale contexts."""
        for _ in range(25):
            p, q = _random_prime_pair(rng, backend)
            ctx = (setup_transparent(p, q) if backend == "transparent"
                   else setup_curve(p, q, rng))
            ck, _ = binding_keygen(ctx, rng)
            rec = forge(ck, p, q, rng=rng)
            assert verify(ck, rec.c, rec.pi)
            assert rec.alpha1 % ctx.n not in (0, 1)


class TestAudit:
    def test_worked_examples(self, binding35, t35):
        ck, _ = binding35
        fp = key_fingerprint(ck)
        v = audit(7, ck, Commitment(t35.g ** 15, fp))
        assert v.label == COMMITS_TO_0 and v.c_in_gq  # 15*7 = 0 mod 35
        v = audit(7, ck, Commitment(t35.g, fp))
        assert v.label == COMMITS_TO_1 and v.c_over_g_in_gq
        v = audit(7, ck, Commitment(t35.g ** 2, fp))
        assert v.label == INVALID  # 2*7 = 14, 1*7 = 7, neither 0 mod 35
        assert not v.c_in_gq and not v.c_over_g_in_gq

    def test_trichotomy_exhaustive(self, binding35, t35):
        ck, _ = binding35
        fp = key_fingerprint(ck)
        labels = [audit(7, ck, Commitment(t35.g ** e, fp)).label for e in range(35)]
        assert {COMMITS_TO_0, COMMITS_TO_1, INVALID} == set(labels)
        for e, label in enumerate(labels):
            expected = (COMMITS_TO_0 if e * 7 % 35 == 0
                        else COMMITS_TO_1 if (e - 1) * 7 % 35 == 0
                        else INVALID)
            assert label == expected

    def test_matches_honest_commitments(self, binding35, rng):
        ck, _ = binding35
        for _ in range(40):
            m, r = rng.randrange(2), rng.randrange(35)
            v = audit(7, ck, commit(ck, m, r))
            assert v.label == (COMMITS_TO_0 if m == 0 else COMMITS_TO_1)

    def test_curve_backend_agrees(self, c35, rng):
        ck, _ = binding_key_from_exponent(c35, 3)
        for m in (0, 1):
            v = audit(7, ck, commit(ck, m, rng.randrange(35)))
            assert v.label == (COMMITS_TO_0 if m == 0 else COMMITS_TO_1)


class TestClaimReport:
    def test_worked_forgery_report(self, binding35):
        ck, _ = binding35
        rec = forge(ck, 5, 7, beta1=2)
        report = claim_report(rec, ck, 5, 7)
        assert report.verification_passes
        assert not report.alpha1_is_bit      # 21 is not 0 or 1
        assert not report.g_alpha1_in_gq     # 21*7 = 7 != 0 mod 35
        # the audit's independent probes for c = g^26:
        # 26*7 = 7 != 0 and 25*7 = 0 (mod 35), so the verdict is CommitsTo1
        assert 26 * 7 % 35 == 7 and 25 * 7 % 35 == 0
        assert report.verdict.label == COMMITS_TO_1
        assert not report.verdict.c_in_gq
        assert report.verdict.c_over_g_in_gq

    def test_zero_beta1_report_well_formed(self, binding35):
        ck, _ = binding35
        rec = forge(ck, 5, 7, beta1=0)
        report = claim_report(rec, ck, 5, 7)
        assert report.verification_passes
        assert not report.alpha1_is_bit
        assert report.verdict.label in (COMMITS_TO_0, COMMITS_TO_1, INVALID)

    def test_report_lines(self, binding35):
        ck, _ = binding35
        report = claim_report(forge(ck, 5, 7, beta1=2), ck, 5, 7)
        lines = report.lines()
        assert "verification_passes=true" in lines
        assert "alpha1_is_bit=false" in lines
        assert "g_alpha1_in_gq=false" in lines
        assert "audit_verdict=CommitsTo1" in lines


class TestCensus:
    def test_worked_example_n15(self, t15):
        """Exhaustive 15x15 brute force at (3,5), h = g^3."""
        ck, _ = binding_key_from_exponent(t15, 1)
        assert ck.h.value == 3
        result = accepting_census(t15, ck)
        accepting = result.accepting_exponents()
        assert accepting == {e for e in range(15) if e % 3 in (0, 1)}
        assert len(accepting) == 10
        assert result.accepting_pairs == 30
        for row in result.rows:
            assert row.accepting_pi_count == (3 if row.c_exp % 3 in (0, 1) else 0)
        assert result.accepting_c_by_verdict[INVALID] == 0
        assert result.accepting_c_by_verdict[COMMITS_TO_0] == 5
        assert result.accepting_c_by_verdict[COMMITS_TO_1] == 5

    def test_worked_example_n6(self):
        """At (2,3) with h = g^2 every element has an accepting proof."""
        ctx = setup_transparent(2, 3)
        ck, _ = binding_key_from_exponent(ctx, 1)
        assert ck.h.value == 2
        result = accepting_census(ctx, ck)
        assert result.accepting_exponents() == set(range(6))
        assert result.accepting_c_by_verdict[INVALID] == 0

    def test_accepting_pairs_reverify(self, t15):
        """Self-consistency: every pair the census marks accepting re-verifies."""
        from paircommit import Commitment, WIProof
        ck, _ = binding_key_from_exponent(t15, 1)
        fp = key_fingerprint(ck)
        result = accepting_census(t15, ck)
        verified = 0
        for row in result.rows:
            c = Commitment(t15.g ** row.c_exp, fp)
            for pi_exp in range(15):
                expected = row.c_exp * (row.c_exp - 1) % 15 == 3 * pi_exp % 15
                ok = verify(ck, c, WIProof(t15.g ** pi_exp, fp))
                assert ok == expected
                verified += ok
        assert verified == result.accepting_pairs

    def test_consistency_with_audit(self, t35, t15, rng):
        """Accepting-c set equals the audit's non-Invalid set."""
        contexts = [t15, t35, setup_transparent(7, 11), setup_transparent(13, 17)]
        for ctx in contexts:
            ck, _ = binding_keygen(ctx, rng)
            result = accepting_census(ctx, ck)
            assert result.accepting_exponents() == result.non_invalid_exponents()

    def test_forged_c_is_inside_accepting_set(self, t35, rng):
        """The forged commitment lands in the accepting set the census finds."""
        ck, _ = binding_key_from_exponent(t35, 3)
        rec = forge(ck, 5, 7, beta1=2)
        result = accepting_census(t35, ck)
        assert rec.c.c.value in result.accepting_exponents()

    def test_curve_backend_rejected(self, c35):
        ck, _ = binding_key_from_exponent(c35, 3)
        with pytest.raises(ValueError):
            accepting_census(c35, ck)

    def test_too_large_rejected(self, rng):
        p = gen_prime(7, rng)
        q = 4099  # prime, pushes n over 2^12
        ctx = setup_transparent(p, q)
        ck, _ = binding_keygen(ctx, rng)
        with pytest.raises(ValueError):
            accepting_census(ctx, ck)


def _random_prime_pair(rng, backend):
    hi = 10 if backend == "curve" else 12
    while True:
        p = gen_prime(rng.randrange(3, hi), rng)
        q = gen_prime(rng.randrange(3, hi), rng)
        if p == q:
            continue
        p, q = min(p, q), max(p, q)
        if backend == "curve" and p == 2:
            continue
        return p, q
