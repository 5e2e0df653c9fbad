import numpy as np
import pytest

from supadd.detection import square_root_measurement
from supadd.ensembles import build_nn12_code, build_simplex_code, gram
from supadd.errors import InvalidInput, LinearDependence, NoRoot
from supadd.fastcode import (
    block_gain,
    find_kappa_star,
    nn12_coefficients,
    nn12_error_probability,
    nn12_mutual_information,
    nn12_profile,
    pair_block_information,
    simplex_profile,
)
from supadd.information import c1_binary, mutual_information
from supadd.psdlinalg import sqrt_psd


def brute_root(n, kappa):
    return sqrt_psd(gram(build_nn12_code(n), kappa))


def expand_row(profile):
    """First root row rebuilt from the (u, v) profile: one u then three v
    per coefficient index."""
    m = profile.u.shape[0]
    row = np.empty(4 * m)
    for k in range(m):
        row[4 * k] = profile.u[k]
        row[4 * k + 1 : 4 * k + 4] = profile.v[k]
    return row


class TestCoefficients:
    def test_base_values(self):
        table = nn12_coefficients(4, 0.37)
        k2 = 0.37**2
        np.testing.assert_allclose(table.a, [1.0, 1.0], atol=1e-15)
        np.testing.assert_allclose(table.b, [k2, -k2], atol=1e-15)
        np.testing.assert_allclose(table.c, [1.0, 1.0], atol=1e-15)
        np.testing.assert_allclose(table.d, [1.0, -1.0], atol=1e-15)

    def test_one_step_unroll(self):
        kappa = 0.5
        k2 = kappa**2
        table = nn12_coefficients(5, kappa)
        assert abs(table.a[0] - (1.0 + k2 * 1.0)) < 1e-15  # 1.25
        assert abs(table.a[2] - 0.75) < 1e-15
        assert table.a.shape == (4,)

    def test_small_n_rejected(self):
        with pytest.raises(InvalidInput):
            nn12_coefficients(3, 0.5)


class TestProfile:
    def test_three_letter_base_case(self):
        profile = nn12_profile(3, 0.5)
        np.testing.assert_allclose(profile.alpha, [np.sqrt(1.75)], atol=1e-12)
        np.testing.assert_allclose(profile.beta, [np.sqrt(0.75)], atol=1e-12)
        assert abs(profile.u[0] - 0.980238) < 1e-6
        assert abs(profile.v[0] - 0.1142126) < 1e-7

    def test_orthogonal_degenerate(self):
        profile = nn12_profile(3, 0.0)
        np.testing.assert_allclose(profile.u, [1.0], atol=1e-15)
        np.testing.assert_allclose(profile.v, [0.0], atol=1e-15)

    @pytest.mark.parametrize("n", [3, 4, 5, 6, 7])
    @pytest.mark.parametrize("kappa", [0.1, 0.5, 0.9])
    def test_row_normalization(self, n, kappa):
        profile = nn12_profile(n, kappa)
        total = np.sum(profile.u**2 + 3.0 * profile.v**2)
        assert abs(total - 1.0) < 1e-10

    @pytest.mark.parametrize("n", [3, 4, 5, 6, 7])
    def test_spectrum_matches_gram_eigenvalues(self, n):
        # alpha_k^2 once and beta_k^2 three times enumerate the Gram spectrum
        for kappa in (0.2, 0.6, 0.95):
            profile = nn12_profile(n, kappa)
            assert np.all(profile.alpha >= 0.0)
            assert np.all(profile.beta >= 0.0)
            claimed = np.sort(
                np.concatenate([profile.alpha**2, np.repeat(profile.beta**2, 3)])
            )
            actual = np.linalg.eigvalsh(gram(build_nn12_code(n), kappa))
            np.testing.assert_allclose(claimed, actual, atol=1e-10)

    @pytest.mark.parametrize("n", [3, 4, 5, 6, 7, 8])
    def test_matches_brute_force_row(self, n):
        kappa = 0.7
        root = brute_root(n, kappa)
        profile = nn12_profile(n, kappa)
        np.testing.assert_allclose(expand_row(profile), root[0], atol=1e-9)

    @pytest.mark.parametrize("n", [3, 5, 7])
    def test_root_diagonal_constant(self, n):
        root = brute_root(n, 0.6)
        diag = np.diag(root)
        assert np.abs(diag - diag[0]).max() < 1e-10
        assert abs(diag[0] - nn12_profile(n, 0.6).u[0]) < 1e-10

    def test_full_overlap_rejected(self):
        with pytest.raises(LinearDependence):
            nn12_profile(4, 1.0)


class TestInformationAndError:
    def test_reference_values(self):
        assert abs(nn12_mutual_information(3, 0.5) - 1.699661) < 1e-5
        assert abs(nn12_error_probability(3, 0.5) - 0.039134) < 1e-5

    def test_orthogonal_limits(self):
        assert abs(nn12_mutual_information(3, 0.0) - 2.0) < 1e-12
        assert nn12_error_probability(5, 0.0) < 1e-12

    @pytest.mark.parametrize("n", [3, 4, 5, 6, 7])
    @pytest.mark.parametrize("kappa", [0.1, 0.3, 0.5, 0.7, 0.9])
    def test_oracle_equivalence(self, n, kappa):
        code = build_nn12_code(n)
        _, channel = square_root_measurement(gram(code, kappa))
        brute = mutual_information(code.priors, channel).mutual_information_bits
        assert abs(nn12_mutual_information(n, kappa) - brute) < 1e-9
        brute_err = 1.0 - float(np.sum(code.priors * np.diag(channel)))
        assert abs(nn12_error_probability(n, kappa) - brute_err) < 1e-9

    def test_error_grows_with_block_length(self):
        errors = [nn12_error_probability(n, 0.5) for n in range(3, 14)]
        assert np.all(np.diff(errors) > 0)

    def test_information_within_rate_bound(self):
        for n in (3, 6, 9):
            for kappa in (0.2, 0.5, 0.8):
                bits = nn12_mutual_information(n, kappa)
                assert 0.0 <= bits <= n - 1


class TestSimplexProfile:
    def test_orthogonal(self):
        profile = simplex_profile(3, 0.0)
        assert abs(profile.u - 1.0) < 1e-15
        assert abs(profile.v) < 1e-15
        assert abs(profile.info_bits - 3.0) < 1e-12
        assert profile.error_probability < 1e-15

    @pytest.mark.parametrize("kappa", [0.2, 0.5, 0.8])
    def test_rank_two_equals_three_letter_code(self, kappa):
        simplex = simplex_profile(2, kappa)
        assert abs(simplex.info_bits - nn12_mutual_information(3, kappa)) < 1e-12
        assert abs(simplex.error_probability - nn12_error_probability(3, kappa)) < 1e-12

    @pytest.mark.parametrize("r", [2, 3])
    @pytest.mark.parametrize("kappa", [0.3, 0.6, 0.9])
    def test_matches_brute_force(self, r, kappa):
        code = build_simplex_code(r)
        _, channel = square_root_measurement(gram(code, kappa))
        brute = mutual_information(code.priors, channel).mutual_information_bits
        profile = simplex_profile(r, kappa)
        assert abs(profile.info_bits - brute) < 1e-9
        brute_err = 1.0 - float(np.sum(code.priors * np.diag(channel)))
        assert abs(profile.error_probability - brute_err) < 1e-9

    def test_outcome_distribution_normalized(self):
        profile = simplex_profile(4, 0.7)
        m = 2**4
        assert abs(profile.u**2 + (m - 1) * profile.v**2 - 1.0) < 1e-10

    def test_long_code_beats_short_at_strong_overlap(self):
        per7 = simplex_profile(3, 0.9).info_bits / 7.0
        per_short = nn12_mutual_information(7, 0.9) / 7.0
        assert per7 > per_short


class TestGainAndCrossing:
    def test_pair_block_reference(self):
        kappa = 0.5
        p2 = 0.5 * (1.0 - np.sqrt(1.0 - kappa**4))
        h2 = -p2 * np.log2(p2) - (1 - p2) * np.log2(1 - p2)
        assert abs(pair_block_information(kappa) - (1.0 - h2)) < 1e-12

    def test_two_letter_gain_never_positive(self):
        for kappa in np.linspace(0.01, 0.99, 99):
            assert block_gain(2, kappa) <= 1e-15

    def test_crossings_decrease_with_block_length(self):
        stars = [find_kappa_star(n) for n in range(3, 14)]
        assert np.all(np.diff(stars) < 0)

    def test_crossing_brackets_sign_change(self):
        star = find_kappa_star(5, tol=1e-8)
        assert block_gain(5, star - 1e-4) < 0 < block_gain(5, star + 1e-4)

    def test_crossing_tracks_guide(self):
        for n in range(3, 14):
            guide = (2.0 / n) ** (2.0 / 3.0)
            assert abs(find_kappa_star(n) - guide) < 0.1

    def test_no_crossing_for_pair_code(self):
        with pytest.raises(NoRoot):
            find_kappa_star(2)

    def test_bad_block_length(self):
        with pytest.raises(InvalidInput):
            find_kappa_star(1)
