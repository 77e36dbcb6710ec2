"""
Saxl Module Tests.

Tests the S-vector search against the published case tables, decomposition steps,
the staircase reducer, family inductions, staircase-like partitions, dominance
statistics, reports and campaigns.
"""

import csv
import io

import numpy as np
import pytest

from src.certificates import CertificateChecker, Rule, RulePolicy, load_certificate
from src.partitions import (
    EMPTY,
    ArmLegProfile,
    Partition,
    SelectVector,
    arm_leg_profile,
    caret,
    chopped_square,
    enumerate_partitions,
    from_profile,
    parse_partition,
    rectangle,
    sigma,
    staircase,
    staircase_size,
    tau,
)
from src.saxl import (
    ARM,
    BRUTE_FORCED,
    CERTIFIED,
    FAILED,
    HARD_CASES_M10,
    FamilyBuilder,
    StaircaseReducer,
    VerificationReport,
    campaign_size,
    certificate_filename,
    certificate_path,
    classify_strip,
    decompose,
    dominance_stats,
    dominance_table,
    dominates_partition,
    envelope,
    family_targets,
    find_select_vector,
    hard_case_m10,
    is_conjugate_upward,
    is_graphical,
    iter_decompositions,
    iter_select_vectors,
    lemma_tau_three_certificate,
    max_length,
    pigeonhole_witness,
    random_durfee_partition,
    reduce_durfee_k,
    reduction_bound,
    search_order,
    staircase_decomposition,
    staircase_like,
    verify_family,
    verify_generalized_saxl,
    weight_threshold,
)
from src.utils.config import config
from src.utils.errors import CertificateError, ParameterRangeError, ReductionError, SizeMismatchError

P = Partition.of


def _arm(*a: int) -> ArmLegProfile:
    return ArmLegProfile(len(a), tuple(a), (0,) * len(a))


class TestSelectVectors:
    """Test the S-vector search and its tie-breaking."""

    def test_worked_example(self):
        """(2,2,3) is an S-vector of (14,11,8,3) for target 15 with upsilon (7,5,3)."""
        profile = arm_leg_profile(P(14, 11, 8, 3))
        assert profile.a == (3, 3, 5)
        found = list(iter_select_vectors(profile, 15, max_length(3)))
        assert SelectVector((2, 2, 3)) in found
        assert SelectVector((2, 2, 3)).upsilon == P(7, 5, 3)
        # longest columns are maximized first
        assert found[0] == SelectVector((0, 0, 5))

    def test_zero_target(self):
        """Target 0 selects nothing."""
        x = find_select_vector(_arm(2, 1, 1), 0)
        assert x.x == (0, 0, 0)
        assert x.upsilon == EMPTY

    def test_no_solution(self):
        """Targets beyond the arm weight have no S-vector."""
        assert find_select_vector(_arm(1, 1, 1), 7) is None
        assert find_select_vector(_arm(0, 2, 0), 3) is None
        assert list(iter_select_vectors(_arm(1, 1), -1)) == []

    def test_every_candidate_is_valid(self):
        """Counts stay within the profile and hit the target."""
        profile = _arm(3, 2, 4)
        for x in iter_select_vectors(profile, 11):
            assert x.target == 11
            assert x.fits(profile)

    def test_search_order(self):
        """Named lengths first, the rest longest first."""
        assert search_order(4) == [4, 3, 2, 1]
        assert search_order(4, (2, 3)) == [2, 3, 4, 1]
        with pytest.raises(ValueError):
            search_order(3, (2, 2))

    def test_predicates(self):
        """Length and dominance filters."""
        assert max_length(2)(P(3, 3))
        assert not max_length(2)(P(3, 2, 1))
        assert dominates_partition(tau(5, 2))(P(5, 4))
        assert not dominates_partition(tau(5, 2))(P(3, 3, 3))

    @pytest.mark.parametrize(
        "m,a,expected",
        [
            (14, (1, 1, 9), (0, 0, 9)),
            (13, (1, 1, 9), (1, 0, 8)),
            (12, (1, 1, 8), (0, 1, 7)),
            (12, (1, 7, 3), (0, 7, 3)),
            (12, (1, 6, 4), (1, 5, 4)),
            (12, (11, 3, 2), (11, 3, 2)),
        ],
    )
    def test_first_case_table(self, m, a, expected):
        """Rows of the a1, a2, a3 > 0 case table for target 2m - 1."""
        x = find_select_vector(_arm(*a), 2 * m - 1)
        assert x.x == expected

    @pytest.mark.parametrize(
        "b2,b3,order,expected,upsilon",
        [
            (1, 9, None, (0, 1, 7), (8, 8, 7)),
            (4, 7, (2, 3), (0, 4, 5), (9, 9, 5)),
            (7, 5, None, (0, 4, 5), (9, 9, 5)),
            (10, 3, (2, 3), (0, 10, 1), (11, 11, 1)),
            (13, 1, None, (0, 10, 1), (11, 11, 1)),
        ],
    )
    def test_leg_weight_29_table(self, b2, b3, order, expected, upsilon):
        """m = 12, B = 29, target 23: the printed S-vectors under the stated orders."""
        x = find_select_vector(_arm(0, b2, b3), 23, max_length(4), order=order)
        assert x.x == expected
        assert x.upsilon == Partition(upsilon)

    def test_leg_weight_29_default_order_differs(self):
        """Without the order hint the (4,7) row takes the longest columns first."""
        assert find_select_vector(_arm(0, 4, 7), 23, max_length(4)).x == (0, 1, 7)

    @pytest.mark.parametrize(
        "m,a,expected",
        [
            (12, (0, 0, 2, 6), (0, 0, 1, 5)),
            (12, (0, 0, 3, 6), (0, 0, 1, 5)),
            (13, (0, 0, 3, 7), (0, 0, 3, 4)),
        ],
    )
    def test_four_column_table(self, m, a, expected):
        """Rows of the Durfee-4 table with a1 = a2 = 0."""
        assert find_select_vector(_arm(*a), 2 * m - 1).x == expected

    def test_four_column_table_gap(self):
        """With a3 <= 2 and 2m - 1 = 4s + 1 no selection of 3- and 4-columns works."""
        assert find_select_vector(_arm(0, 0, 2, 7), 25) is None


class TestDecomposition:
    """Test decomposition steps against the staircase."""

    def test_third_durfee_column(self):
        """(27,27,3,2^24) at m = 14 is 2-decomposable for (13,13,1) using a Durfee column."""
        mu = parse_partition("[27,27,3,2^24]")
        profile = arm_leg_profile(mu)
        assert profile.a == (0, 24, 0)
        assert profile.with_durfee_columns().a == (0, 24, 1)
        steps = [s for s in iter_decompositions(mu, 14) if s.side == ARM and s.i == 2]
        assert steps[0].upsilon == P(13, 13, 1)
        assert steps[0].leaf_rule == "SigmaTwo"
        assert steps[0].remainder == parse_partition("[14,14,2,2^24]")

    def test_four_decomposable(self):
        """A2 >= 4m - 6 at m = 14 gives (25,25) dominating tau_14^4."""
        mu = from_profile(3, (0, 25, 0), (0, 23, 0))
        assert mu.size == staircase_size(14)
        steps = [s for s in iter_decompositions(mu, 14) if s.i == 4 and s.upsilon == P(25, 25)]
        assert steps
        assert steps[0].leaf_rule == "Dominance"
        assert steps[0].remainder == parse_partition("[3,3,3,2^23]")

    def test_steps_reconstruct(self, policy):
        """upsilon + remainder gives back mu (or mu') and the remainder has the smaller size."""
        for mu in enumerate_partitions(staircase_size(7), durfee=3):
            for step in iter_decompositions(mu, 7, policy):
                shape = mu if step.side == ARM else mu.conjugate()
                assert step.upsilon + step.remainder == shape
                assert step.remainder.size == staircase_size(step.reduced_m)

    def test_classify_strip(self, policy):
        """SigmaTwo, TauThree and Dominance conditions."""
        assert classify_strip(10, 2, P(7, 7, 5), policy) == "SigmaTwo"
        assert classify_strip(10, 3, P(9, 9, 9), policy) == "TauThree"
        assert classify_strip(14, 4, P(25, 25), policy) == "Dominance"
        assert classify_strip(10, 3, P(9, 9, 8, 1), policy) is None

    def test_size_checked(self):
        """mu must have size |rho_m|."""
        with pytest.raises(SizeMismatchError):
            decompose(P(5), 3)

    @pytest.mark.parametrize("m", range(2, 11))
    def test_tau_three(self, m, policy, oracle):
        """s copies of ((3,3,3),(3,3,3)) plus a small base conclude (tau_m^3, ((m-1)^3))."""
        cert = lemma_tau_three_certificate(m, policy, oracle)
        assert cert.alpha == tau(m, 3)
        assert cert.beta == rectangle(3, m - 1)
        assert CertificateChecker(policy, oracle=oracle).verify(cert).ok


class TestReducer:
    """Test (rho_m, mu) certificates."""

    def test_all_durfee_three_at_m5(self, small_policy, oracle):
        """Every mu in S(5,3) certifies and checks."""
        reducer = StaircaseReducer(small_policy, oracle)
        checker = CertificateChecker(small_policy, oracle=oracle)
        for mu in enumerate_partitions(15, durfee=3):
            cert = reducer.certify(5, mu)
            assert (cert.alpha, cert.beta) == (staircase(5), mu)
            assert checker.verify(cert).ok

    def test_sigma_two_step(self, small_policy, oracle):
        """(6,3,3,1,1,1) = (5,2,2) + (1^6) over rho_5 = sigma_5^2 + rho_3."""
        cert = StaircaseReducer(small_policy, oracle).certify(5, P(6, 3, 3, 1, 1, 1))
        assert cert.rule is Rule.SEMIGROUP
        sub, leaf = cert.children
        assert (sub.alpha, sub.beta) == (staircase(3), Partition((1,) * 6))
        assert leaf.rule is Rule.SIGMA_TWO
        assert (leaf.alpha, leaf.beta) == (sigma(5, 2), P(5, 2, 2))

    def test_direct_dominance(self, policy, oracle):
        """(10,9,9) dominates rho_7."""
        cert = StaircaseReducer(policy, oracle).certify(7, P(10, 9, 9))
        assert cert.rule is Rule.DOMINANCE

    def test_conjugate_dominance(self, policy, oracle):
        """(1^28) is closed by transposing a dominance leaf."""
        cert = StaircaseReducer(policy, oracle).certify(7, Partition((1,) * 28))
        assert cert.rule is Rule.TRANSPOSE
        assert cert.children[0].rule is Rule.DOMINANCE
        assert cert.children[0].beta == P(28)

    @pytest.mark.slow
    def test_oracle_fallback_below_cap(self, small_policy, oracle):
        """Targets with no step are closed by the oracle within the brute-force cap."""
        mu = P(7, 7, 3, 3, 2, 2, 2, 2)
        assert list(iter_decompositions(mu, 7, small_policy)) == []
        cert = StaircaseReducer(small_policy, oracle).certify(7, mu)
        assert cert.rule is Rule.BRUTE_FORCE

    def test_stuck_target(self, oracle):
        """Without dominance, steps or oracle room the reducer reports the stuck pair."""
        narrow = RulePolicy(
            brute_force_size_cap=10, axiom_allowlist=frozenset(), audit_cap=5, leaf_size=10,
        )
        with pytest.raises(ReductionError) as info:
            StaircaseReducer(narrow, oracle).certify(5, P(6, 3, 3, 1, 1, 1))
        assert info.value.m == 5

    def test_durfee_check(self, small_policy):
        """reduce_durfee_k refuses a mu of the wrong Durfee size."""
        with pytest.raises(ValueError):
            reduce_durfee_k(5, P(9, 3, 3), k=2, policy=small_policy)
        assert reduce_durfee_k(5, P(9, 3, 3), k=3, policy=small_policy).rule is Rule.DOMINANCE

    def test_size_mismatch(self, small_policy):
        """mu must have size |rho_m|."""
        with pytest.raises(SizeMismatchError):
            StaircaseReducer(small_policy).certify(5, P(3, 3))

    def test_rho10_chopped_square_split(self, policy, oracle):
        """mu - (10,10) = nu uses (eta_6, nu) from the manifest and two (rho_4, (5,5)) leaves."""
        cert = hard_case_m10(P(25, 20, 10), policy)
        assert (cert.alpha, cert.beta) == (staircase(10), P(25, 20, 10))
        eta_leaf = cert.children[0].children[0]
        assert eta_leaf.alpha == chopped_square(6)
        assert eta_leaf.source == "manifest"
        assert CertificateChecker(policy, oracle=oracle).verify(cert).ok

    @pytest.mark.parametrize("text", ["[15,4,4,2^16]", "[10,10,9,2^13]"])
    def test_rho10_conjugate_side(self, policy, oracle, text):
        """Targets whose conjugate takes the chopped-square split are closed through Transpose."""
        mu = parse_partition(text)
        assert hard_case_m10(mu, policy) is None
        assert hard_case_m10(mu.conjugate(), policy) is not None
        cert = StaircaseReducer(policy, oracle).certify(10, mu)
        assert (cert.alpha, cert.beta) == (staircase(10), mu)
        assert cert.rule is Rule.TRANSPOSE
        assert CertificateChecker(policy, oracle=oracle).verify(cert).ok

    @pytest.mark.slow
    def test_rho10_conjugate_explicit_case(self, policy, oracle):
        """(12,12,5,3^8,2) is the conjugate of an explicit case."""
        mu = parse_partition("[12,12,5,3^8,2]")
        assert mu.conjugate() in HARD_CASES_M10
        cert = StaircaseReducer(policy, oracle).certify(10, mu)
        assert cert.rule is Rule.TRANSPOSE
        assert CertificateChecker(policy, oracle=oracle).verify(cert).ok

    def test_rho10_not_applicable(self, policy):
        """Partitions outside both constructions get nothing."""
        assert hard_case_m10(staircase(10), policy) is None

    def test_rho10_explicit_cases(self):
        """mu_i = (7,7,7) + upsilon_i for the four listed partitions."""
        assert len(HARD_CASES_M10) == 4
        for mu, upsilon in HARD_CASES_M10.items():
            assert mu.size == 55
            assert upsilon.size == 34
            assert upsilon + P(7, 7, 7) == mu

    @pytest.mark.slow
    def test_rho10_first_explicit_case(self, policy, oracle):
        """(11,11,10,3^7,2) closes with (sigma_10^4, upsilon_1) and (rho_6, (7,7,7))."""
        mu = parse_partition("[11,11,10,3^7,2]")
        cert = StaircaseReducer(policy, oracle).hard_case_m10(mu)
        assert cert.rule is Rule.SEMIGROUP
        sub, strip = cert.children
        assert (sub.alpha, sub.beta) == (staircase(6), P(7, 7, 7))
        assert strip.alpha == sigma(10, 4)
        assert strip.source == "manifest"
        assert CertificateChecker(policy, oracle=oracle).verify(cert).ok


class TestFamilies:
    """Test hook and double-hook inductions."""

    @pytest.mark.parametrize("m", range(1, 8))
    def test_staircase_hooks(self, m, policy, oracle):
        """Every hook of |rho_m| certifies."""
        builder = FamilyBuilder(policy, oracle)
        checker = CertificateChecker(policy, oracle=oracle)
        for nu in enumerate_partitions(staircase_size(m), durfee=1):
            cert = builder.staircase_hook(m, nu)
            assert (cert.alpha, cert.beta) == (staircase(m), nu)
            assert checker.verify(cert).ok

    def test_hook_trichotomy(self):
        """Hooks of |rho_m| have a1 >= m or b1 >= m once m >= 3."""
        for m in range(3, 11):
            for nu in enumerate_partitions(staircase_size(m), durfee=1):
                profile = arm_leg_profile(nu)
                assert profile.a[0] >= m or profile.b[0] >= m

    def test_staircase_hook_uses_row_strip(self, policy, oracle):
        """(rho_4, (7,1,1,1)) peels the row (4) against ((1^4), (4))."""
        cert = FamilyBuilder(policy, oracle).staircase_hook(4, P(7, 1, 1, 1))
        assert cert.rule is Rule.SEMIGROUP
        assert (cert.children[1].alpha, cert.children[1].beta) == (Partition((1,) * 4), P(4))

    @pytest.mark.parametrize("k", range(1, 6))
    def test_chopped_hooks(self, k, policy, oracle):
        """Every hook of k^2 - 1 certifies against eta_k."""
        builder = FamilyBuilder(policy, oracle)
        checker = CertificateChecker(policy, oracle=oracle)
        for nu in enumerate_partitions(k * k - 1, durfee=1):
            cert = builder.chopped_hook(k, nu)
            assert cert.alpha == chopped_square(k)
            assert checker.verify(cert).ok

    @pytest.mark.parametrize("k", [1, 2])
    def test_caret_hooks(self, k, policy, oracle):
        """Every hook of 3k^2 certifies against gamma_k."""
        builder = FamilyBuilder(policy, oracle)
        for nu in enumerate_partitions(3 * k * k, durfee=1):
            assert builder.caret_hook(k, nu).alpha == caret(k)

    @pytest.mark.slow
    @pytest.mark.parametrize("k", [3, 4])
    def test_caret_hooks_large(self, k, policy, oracle):
        """gamma_3 by the oracle, gamma_4 by the induction."""
        builder = FamilyBuilder(policy, oracle)
        checker = CertificateChecker(policy, oracle=oracle)
        for nu in enumerate_partitions(3 * k * k, durfee=1):
            assert checker.verify(builder.caret_hook(k, nu)).ok

    @pytest.mark.parametrize("k", [3, 4])
    def test_chopped_double_failures_are_zeros(self, k, policy, oracle):
        """A double hook either certifies or really has a zero coefficient."""
        builder = FamilyBuilder(policy, oracle)
        checker = CertificateChecker(policy, oracle=oracle)
        eta = chopped_square(k)
        for nu in enumerate_partitions(k * k - 1, durfee=2):
            try:
                cert = builder.chopped_double(k, nu)
            except CertificateError:
                assert oracle.kronecker(eta, eta, nu) == 0
                continue
            assert checker.verify(cert).ok

    def test_caret_double_small(self, policy, oracle):
        """gamma_2 double hooks are oracle leaves or genuine zeros."""
        builder = FamilyBuilder(policy, oracle)
        gamma = caret(2)
        for nu in enumerate_partitions(12, durfee=2):
            try:
                assert builder.caret_double(2, nu).rule is Rule.BRUTE_FORCE
            except CertificateError:
                assert oracle.kronecker(gamma, gamma, nu) == 0

    @pytest.mark.parametrize("j", [2, 3, 4, 5])
    def test_four_columns(self, j, policy, oracle):
        """((4^j), (2j, 2j))."""
        cert = FamilyBuilder(policy, oracle).four_columns(j)
        assert (cert.alpha, cert.beta) == (rectangle(j, 4), P(2 * j, 2 * j))
        assert CertificateChecker(policy, oracle=oracle).verify(cert).ok

    def test_four_columns_range(self, policy):
        """j >= 2."""
        with pytest.raises(ParameterRangeError):
            FamilyBuilder(policy).four_columns(1)

    @pytest.mark.parametrize("k", [3, 5, 7])
    def test_odd_square_columns(self, k, policy, oracle):
        """((k^4), (2k, 2k)) for odd k."""
        cert = FamilyBuilder(policy, oracle).odd_square_columns(k)
        assert (cert.alpha, cert.beta) == (rectangle(4, k), P(2 * k, 2 * k))
        assert CertificateChecker(policy, oracle=oracle).verify(cert).ok

    def test_wrong_family_member(self, policy):
        """Targets must have the family's size and Durfee size."""
        builder = FamilyBuilder(policy)
        with pytest.raises(SizeMismatchError):
            builder.staircase_hook(3, P(5))
        with pytest.raises(ValueError):
            builder.chopped_hook(3, P(4, 4))


class TestStaircaseLike:
    """Test the envelope and the generalized check."""

    def test_decomposition(self):
        """n = m(m+1)/2 + k with 0 <= k <= m."""
        assert staircase_decomposition(7) == (3, 1)
        assert staircase_decomposition(18) == (5, 3)
        assert staircase_decomposition(10) == (4, 0)

    def test_envelopes(self):
        """The widened envelopes for odd m and odd k."""
        assert envelope(7) == (staircase(2), staircase(4))
        assert envelope(18) == (staircase(5), staircase(7))
        assert envelope(12) == (staircase(4), staircase(5))

    def test_worked_examples(self):
        """(4,1,1,1) at 7 and (5,4,4,4,1) at 18."""
        assert P(4, 1, 1, 1) in staircase_like(7)
        assert P(5, 4, 4, 4, 1) in staircase_like(18)

    @pytest.mark.parametrize("m", range(1, 7))
    def test_staircases_are_staircase_like(self, m):
        """rho_m is in its own list."""
        assert staircase(m) in staircase_like(staircase_size(m))

    def test_members_are_self_conjugate(self):
        """Every member is self-conjugate and sits in the envelope."""
        for n in range(3, 19):
            lower, upper = envelope(n)
            for lam in staircase_like(n):
                assert lam.is_self_conjugate()
                assert upper.contains(lam) and lam.contains(lower)

    def test_range(self):
        """n >= 1."""
        with pytest.raises(ParameterRangeError):
            staircase_like(0)

    def test_generalized_check_small(self, oracle):
        """Full tensor squares for n = 3..12, sizes 4 and 9 skipped."""
        report = verify_generalized_saxl(12, oracle=oracle)
        assert report.succeeded
        assert len(report) > 0
        assert not any(r.target == str(P(2, 2)) for r in report.records)

    @pytest.mark.slow
    def test_generalized_check_to_18(self, oracle):
        """Desk-scale run up to n = 18."""
        assert verify_generalized_saxl(18, n_min=13, oracle=oracle).succeeded


class TestStatistics:
    """Test dominance counts and the reduction bounds."""

    def test_rho3(self):
        """Six partitions below rho_3 (itself included), eleven comparable."""
        stats = dominance_stats(staircase(3))
        assert stats.partitions == 11
        assert stats.below == 6
        assert stats.above == 6
        assert stats.comparable == 11

    @pytest.mark.parametrize("m", range(3, 8))
    def test_comparable_identity(self, m):
        """|C(rho_m)| = 2|Lambda(rho_m)| - 1."""
        stats = dominance_stats(staircase(m))
        assert stats.comparable == 2 * stats.below - 1

    def test_table(self):
        """Comparable counts beat 2^m and their share of P(n) shrinks."""
        frame = dominance_table(8, m_min=3)
        assert list(frame["m"]) == list(range(3, 9))
        assert all(frame["comparable"] > frame["two_power"])
        ratios = list(frame["comparable_ratio"])[:5]
        assert all(a > b for a, b in zip(ratios, ratios[1:]))

    def test_integer_reference(self):
        """An integer picks the staircase when triangular."""
        assert dominance_stats(6).reference == "[3,2,1]"
        assert dominance_stats(7).reference == "[7]"

    def test_graphical(self):
        """Prefix-sum definitions."""
        assert is_graphical(P(1, 1))
        assert not is_graphical(P(2))
        assert not is_graphical(P(2, 1))
        assert is_conjugate_upward(P(1, 1))
        assert not is_conjugate_upward(P(2))

    def test_bounds(self):
        """4k^2 + 4k - 2 and the k = 3, 4 thresholds."""
        assert reduction_bound(1) == 6
        assert reduction_bound(3) == 46
        assert weight_threshold(14, 3) == 50
        assert weight_threshold(11, 4) == 60
        with pytest.raises(ParameterRangeError):
            weight_threshold(10, 5)

    @pytest.mark.parametrize("k", [3, 4, 5])
    def test_pigeonhole(self, k):
        """Random mu in S(m, k), m = 4k^2 + 4k - 1, always has a long arm or leg class."""
        m = 4 * k * k + 4 * k - 1
        rng = np.random.default_rng(k)
        for _ in range(200):
            mu = random_durfee_partition(m, k, rng)
            assert mu.size == staircase_size(m)
            assert mu.durfee() == k
            assert pigeonhole_witness(mu, m) is not None

    def test_random_partition_range(self):
        """S(m, k) must be nonempty."""
        with pytest.raises(ParameterRangeError):
            random_durfee_partition(2, 3)


class TestReports:
    """Test report rows, CSV and the summary line."""

    def test_counts_and_summary(self):
        """One row per target; failures decide success."""
        report = VerificationReport("triple_hooks", 4, 5, report_timings=False)
        report.add(P(3, 3, 3, 1), CERTIFIED, "certs/x.kcert.json", millis=12)
        report.add(P(4, 3, 3), BRUTE_FORCED)
        assert report.succeeded
        report.add(P(4, 4, 2), FAILED, detail="zero")
        assert not report.succeeded
        assert report.failed_targets == ["[4,4,2]"]
        assert report.summary_line() == (
            "family=triple_hooks range=4..5 targets=3 certified=1 brute_forced=1 failed=1"
        )

    def test_csv(self, tmp_path):
        """target,status,certificate_path,millis; timings zeroed when disabled."""
        report = VerificationReport("staircase_hooks", 1, 2, report_timings=False)
        report.add(P(2, 1), CERTIFIED, "certs/a.kcert.json", millis=99)
        rows = list(csv.reader(io.StringIO(report.to_csv())))
        assert rows == [
            ["target", "status", "certificate_path", "millis"],
            ["[2,1]", "certified", "certs/a.kcert.json", "0"],
        ]
        path = tmp_path / "out" / "report.csv"
        report.to_csv(path)
        assert path.read_text(encoding="utf-8").startswith("target,status")

    def test_unknown_status(self):
        """Statuses form a closed set."""
        with pytest.raises(ValueError):
            VerificationReport("x", 1, 1).add(P(1), "maybe")


class TestCampaigns:
    """Test family campaigns end to end."""

    def test_filenames(self, tmp_path):
        """Filesystem-safe names under certs/<family>/<m>/."""
        assert certificate_filename(P(3, 3, 2)) == "3-3-2.kcert.json"
        assert certificate_filename(EMPTY) == "empty.kcert.json"
        path = certificate_path(tmp_path, "triple_hooks", 5, P(9, 3, 3))
        assert path == tmp_path / "triple_hooks" / "5" / "9-3-3.kcert.json"

    def test_targets_and_size(self):
        """Targets are the family's Durfee class, counted without enumeration."""
        assert family_targets("staircase_hooks", 3) == list(enumerate_partitions(6, durfee=1))
        assert campaign_size("staircase_hooks", 1, 4) == 1 + 3 + 6 + 10
        assert campaign_size("triple_hooks", 4, 5) == len(family_targets("triple_hooks", 4)) + len(
            family_targets("triple_hooks", 5)
        )

    def test_bad_arguments(self):
        """Unknown families and empty ranges are rejected."""
        with pytest.raises(ValueError):
            verify_family("pentagon_hooks", 1, 2)
        with pytest.raises(ValueError):
            verify_family("staircase_hooks", 5, 4)

    def test_staircase_hooks_with_certificates(self, tmp_path, policy):
        """Every hook up to m = 5 is certified and written."""
        report = verify_family(
            "staircase_hooks", 1, 5, policy=policy, threads=1, certs_dir=tmp_path, report_timings=False
        )
        assert report.succeeded
        assert len(report) == campaign_size("staircase_hooks", 1, 5)
        checker = CertificateChecker(policy)
        for record in report.records:
            assert record.certificate_path
            cert = load_certificate(record.certificate_path)
            assert str(cert.beta) == record.target
            assert checker.verify(cert).ok

    def test_triple_hooks(self, small_policy):
        """S(4,3) and S(5,3) through the reducer."""
        report = verify_family("triple_hooks", 4, 5, policy=small_policy, threads=1, report_timings=False)
        assert report.succeeded
        assert report.counts()[CERTIFIED] > 0

    @pytest.mark.slow
    def test_triple_hooks_rho10(self, policy):
        """Every target of S(10,3) gets a checked certificate."""
        report = verify_family("triple_hooks", 10, 10, policy=policy, threads=1, report_timings=False)
        assert len(report.records) == 87252
        assert report.failed_targets == []

    def test_deterministic_across_workers(self, small_policy, monkeypatch):
        """Reports do not depend on the worker count."""
        monkeypatch.setattr(config, "BACKEND", "threading")
        one = verify_family("chopped_hooks", 1, 4, policy=small_policy, threads=1, report_timings=False)
        two = verify_family("chopped_hooks", 1, 4, policy=small_policy, threads=2, report_timings=False)
        assert one.to_csv() == two.to_csv()


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
