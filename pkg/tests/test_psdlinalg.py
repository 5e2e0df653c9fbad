import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from supadd.errors import InvalidInput, NotPSD
from supadd.psdlinalg import eig_sym, hadamard, is_positive_definite, sqrt_psd


def random_symmetric(rng, dim):
    m = rng.normal(size=(dim, dim))
    return (m + m.T) / 2.0


class TestEigSym:
    def test_identity(self):
        dec = eig_sym(np.eye(3))
        np.testing.assert_allclose(dec.values, [1.0, 1.0, 1.0], atol=1e-12)

    def test_two_dim_overlap_matrix(self):
        k2 = 0.25
        dec = eig_sym(np.array([[1.0, k2], [k2, 1.0]]))
        np.testing.assert_allclose(dec.values, [0.75, 1.25], atol=1e-12)

    def test_distance_two_gram(self):
        # unit diagonal, all off-diagonal 0.25: triple 1 - k^2 and single 1 + 3k^2
        g = np.full((4, 4), 0.25)
        np.fill_diagonal(g, 1.0)
        dec = eig_sym(g)
        np.testing.assert_allclose(dec.values, [0.75, 0.75, 0.75, 1.75], atol=1e-12)

    def test_values_ascending_and_reconstruction(self):
        rng = np.random.default_rng(3)
        m = random_symmetric(rng, 6)
        dec = eig_sym(m)
        assert np.all(np.diff(dec.values) >= -1e-14)
        recon = dec.vectors @ np.diag(dec.values) @ dec.vectors.T
        assert np.abs(recon - m).max() <= 1e-10 * max(1.0, np.abs(m).max())
        assert np.abs(dec.vectors.T @ dec.vectors - np.eye(6)).max() <= 1e-10

    def test_nonfinite_rejected(self):
        bad = np.array([[1.0, np.nan], [np.nan, 1.0]])
        with pytest.raises(InvalidInput):
            eig_sym(bad)

    def test_nonsymmetric_rejected(self):
        with pytest.raises(InvalidInput):
            eig_sym(np.array([[1.0, 2.0], [0.0, 1.0]]))

    @settings(max_examples=40, deadline=None)
    @given(st.integers(min_value=1, max_value=8), st.integers(min_value=0, max_value=2**31 - 1))
    def test_eigenvalue_sum_equals_trace(self, dim, seed):
        m = random_symmetric(np.random.default_rng(seed), dim)
        dec = eig_sym(m)
        trace = np.trace(m)
        assert abs(dec.values.sum() - trace) <= 1e-10 * max(1.0, abs(trace))


class TestSqrtPsd:
    def test_identity(self):
        np.testing.assert_allclose(sqrt_psd(np.eye(4)), np.eye(4), atol=1e-12)

    def test_two_dim_closed_form(self):
        k2 = 0.25
        s = sqrt_psd(np.array([[1.0, k2], [k2, 1.0]]))
        diag = (np.sqrt(1.25) + np.sqrt(0.75)) / 2.0
        off = (np.sqrt(1.25) - np.sqrt(0.75)) / 2.0
        np.testing.assert_allclose(s, [[diag, off], [off, diag]], atol=1e-12)

    def test_distance_two_gram_closed_form(self):
        # sqrt of the 4x4 distance-2 Gram: diagonal (alpha+3 beta)/4, off (alpha-beta)/4
        g = np.full((4, 4), 0.25)
        np.fill_diagonal(g, 1.0)
        s = sqrt_psd(g)
        alpha, beta = np.sqrt(1.75), np.sqrt(0.75)
        expected = np.full((4, 4), (alpha - beta) / 4.0)
        np.fill_diagonal(expected, (alpha + 3.0 * beta) / 4.0)
        np.testing.assert_allclose(s, expected, atol=1e-12)

    def test_not_psd_raises(self):
        with pytest.raises(NotPSD):
            sqrt_psd(np.array([[1.0, 0.0], [0.0, -1.0]]))

    def test_clamping_near_singular(self):
        m = np.array([[1.0, 1.0], [1.0, 1.0]]) + np.diag([0.0, -1e-12])
        s = sqrt_psd(m)
        assert np.all(np.linalg.eigvalsh(s) >= -1e-12)

    @settings(max_examples=40, deadline=None)
    @given(st.integers(min_value=1, max_value=8), st.integers(min_value=0, max_value=2**31 - 1))
    def test_square_reconstructs(self, dim, seed):
        a = np.random.default_rng(seed).normal(size=(dim, dim))
        m = a @ a.T
        s = sqrt_psd(m)
        assert np.abs(s @ s - m).max() <= 1e-8 * max(1.0, np.abs(m).max())
        assert np.abs(s - s.T).max() == 0.0


class TestHadamard:
    def test_order_one(self):
        np.testing.assert_array_equal(hadamard(1), [[1]])

    def test_order_two(self):
        np.testing.assert_array_equal(hadamard(2), [[1, 1], [1, -1]])

    def test_order_four_doubling(self):
        h2 = hadamard(2)
        expected = np.block([[h2, h2], [h2, -h2]])
        np.testing.assert_array_equal(hadamard(4), expected)

    @pytest.mark.parametrize("order", [1, 2, 4, 8, 16, 32])
    def test_orthogonality_exact(self, order):
        h = hadamard(order)
        np.testing.assert_array_equal(h @ h.T, order * np.eye(order, dtype=np.int64))

    @pytest.mark.parametrize("order", [0, 3, 6, 12, -4])
    def test_non_power_of_two_rejected(self, order):
        with pytest.raises(InvalidInput):
            hadamard(order)


class TestIsPositiveDefinite:
    def test_identity(self):
        assert is_positive_definite(np.eye(2), tol=1e-12)

    def test_singular(self):
        assert not is_positive_definite(np.ones((2, 2)), tol=1e-12)

    def test_sqrt_of_distance_two_gram(self):
        g = np.full((4, 4), 0.25)
        np.fill_diagonal(g, 1.0)
        assert is_positive_definite(sqrt_psd(g), tol=1e-12)
