"""Smoke tests for the structmat python module against numpy/scipy."""

import math

import numpy as np
import pytest
import scipy.linalg
import scipy.stats

import structmat


def test_version():
    assert structmat.__version__ == "1.0.0"


def test_dft_matches_numpy():
    rng = np.random.default_rng(7)
    for n in (1, 2, 3, 8, 12, 17, 64):
        v = rng.normal(size=n) + 1j * rng.normal(size=n)
        got = np.array(structmat.dft([complex(x) for x in v]))
        want = n * np.fft.ifft(v)  # omega = exp(+2 pi i / n), unnormalized
        assert np.allclose(got, want, atol=1e-9 * max(1.0, np.abs(want).max()))
        back = np.array(structmat.idft([complex(x) for x in got]))
        assert np.allclose(back, v, atol=1e-10)


def test_dft_real_entry_points():
    x = [1.0, 2.0, -1.0, 0.5]
    assert np.allclose(structmat.dft_real(x), 4 * np.fft.ifft(x), atol=1e-12)


def test_toeplitz_dense_structure():
    diagonals = [1.0, 2.0, 3.0, 4.0, 5.0]  # main diagonal at index n-1 = 2
    t = np.array(structmat.toeplitz_dense(diagonals))
    assert np.array_equal(t, scipy.linalg.toeplitz([3.0, 4.0, 5.0], [3.0, 2.0, 1.0]))


def test_circulant_dense_and_eigenvalues():
    first_column = [1.0, 2.0, 3.0, 4.0]
    z = np.array(structmat.circulant_dense(first_column))
    assert np.array_equal(z, scipy.linalg.circulant(first_column))

    eig = np.array(structmat.circulant_eigenvalues(first_column))
    assert np.allclose(eig, 4 * np.fft.ifft(first_column), atol=1e-12)

    lower = np.array(structmat.circulant_dense(first_column, 0.0))
    assert np.array_equal(lower, np.tril(z))
    with pytest.raises(ValueError):
        structmat.circulant_eigenvalues(first_column, 0.0)


def test_hankel_dense_structure():
    antidiagonals = [1.0, 2.0, 3.0, 4.0, 5.0]
    h = np.array(structmat.hankel_dense(antidiagonals))
    assert np.array_equal(h, scipy.linalg.hankel([1.0, 2.0, 3.0], [3.0, 4.0, 5.0]))


def test_circulant_matvec_and_solve():
    rng = np.random.default_rng(11)
    first_column = rng.uniform(-1.0, 1.0, size=16)
    first_column[0] += 4.0  # diagonal dominance keeps the matrix nonsingular
    z = np.array(structmat.circulant_dense(list(first_column)))
    x = rng.uniform(-1.0, 1.0, size=16)
    assert np.allclose(structmat.circulant_matvec(list(first_column), list(x)), z @ x,
                       atol=1e-12)
    y = structmat.circulant_solve(list(first_column), list(x))
    assert np.allclose(y, np.linalg.solve(z, x), atol=1e-12)

    with pytest.raises(RuntimeError):
        structmat.circulant_solve([1.0, -1.0, 0.0, 0.0], [1.0, 0.0, 0.0, 0.0])


def test_toeplitz_matvec():
    rng = np.random.default_rng(13)
    n = 20
    diagonals = rng.uniform(-1.0, 1.0, size=2 * n - 1)
    t = np.array(structmat.toeplitz_dense(list(diagonals)))
    x = rng.uniform(-1.0, 1.0, size=n)
    assert np.allclose(structmat.toeplitz_matvec(list(diagonals), list(x)), t @ x, atol=1e-12)


def test_corner_columns():
    rng = np.random.default_rng(17)
    n = 12
    diagonals = rng.uniform(-1.0, 1.0, size=2 * n - 1)
    diagonals[n - 1] += 2.0
    t = np.array(structmat.toeplitz_dense(list(diagonals)))
    p, q = structmat.solve_corner_columns(list(diagonals))
    e1 = np.zeros(n)
    e1[0] = 1.0
    en = np.zeros(n)
    en[-1] = 1.0
    assert np.allclose(t @ np.array(p), e1, atol=1e-10)
    assert np.allclose(t @ np.array(q), en, atol=1e-10)


def test_toeplitz_inverse_variants():
    rng = np.random.default_rng(19)
    n = 10
    diagonals = rng.uniform(-1.0, 1.0, size=2 * n - 1)
    diagonals[n - 1] += 2.0
    t = np.array(structmat.toeplitz_dense(list(diagonals)))

    inv_a = np.array(structmat.toeplitz_inverse(list(diagonals)))
    assert np.allclose(inv_a, np.linalg.inv(t), atol=1e-9)

    # Variants b and c invert the leading and the shifted block of the input.
    inv_b = np.array(structmat.toeplitz_inverse(list(diagonals), "b"))
    assert inv_b.shape == (n - 1, n - 1)
    assert np.allclose(inv_b, np.linalg.inv(t[: n - 1, : n - 1]), atol=1e-9)

    inv_c = np.array(structmat.toeplitz_inverse(list(diagonals), "c"))
    assert np.allclose(inv_c, np.linalg.inv(t[1:, : n - 1]), atol=1e-9)


def test_toeplitz_solve():
    rng = np.random.default_rng(23)
    n = 64
    diagonals = rng.uniform(-1.0, 1.0, size=2 * n - 1)
    diagonals[n - 1] += 2.0
    t = np.array(structmat.toeplitz_dense(list(diagonals)))
    b = rng.uniform(-1.0, 1.0, size=n)
    y = structmat.toeplitz_solve(list(diagonals), list(b))
    assert np.allclose(y, np.linalg.solve(t, b), atol=1e-8)


def test_matrix_norms_match_numpy():
    rng = np.random.default_rng(29)
    a = rng.uniform(-1.0, 1.0, size=(8, 8))
    rows = [list(r) for r in a]
    assert math.isclose(structmat.matrix_norm(rows, "1"), np.linalg.norm(a, 1), rel_tol=1e-12)
    assert math.isclose(structmat.matrix_norm(rows, "inf"), np.linalg.norm(a, np.inf),
                        rel_tol=1e-12)
    assert math.isclose(structmat.matrix_norm(rows, "fro"), np.linalg.norm(a, "fro"),
                        rel_tol=1e-12)

    d = np.diag([5.0, 2.0, 1.0, 0.5])  # clear spectral gap, power iteration converges
    assert math.isclose(structmat.matrix_norm([list(r) for r in d], "2"), 5.0, rel_tol=1e-8)

    with pytest.raises(RuntimeError):
        structmat.matrix_norm(rows, "bogus")
    with pytest.raises(ValueError):
        structmat.matrix_norm([[1.0, 2.0], [3.0]], "1")


def test_circulant_inverse_norms():
    fro, spectral = structmat.circulant_inverse_norms([3.0, 1.0])
    assert math.isclose(fro, math.sqrt(5.0) / 4.0, rel_tol=1e-12)
    assert math.isclose(spectral, 0.5, rel_tol=1e-12)


def test_cdfs_match_scipy():
    for y in (0.1, 0.5, 1.0, 2.5, 7.0):
        for n in (1, 2, 5, 40):
            assert math.isclose(structmat.chi_cdf(y, n), scipy.stats.chi.cdf(y, n),
                                rel_tol=0, abs_tol=1e-10)
        assert math.isclose(structmat.normal_cdf(y, 1.0, 2.0),
                            scipy.stats.norm.cdf(y, 1.0, 2.0), abs_tol=1e-12)


def test_circulant_inverse_cdf_is_the_analytic_survival():
    n = 6
    for z in (0.5, 1.0, 2.5, 10.0):
        q = scipy.stats.norm.cdf(1.0 / z) - scipy.stats.norm.cdf(-1.0 / z)
        want = 1.0 - (1.0 - q) ** n
        assert math.isclose(structmat.circulant_inverse_cdf(z, 0.0, 1.0, n), want,
                            abs_tol=1e-12)


def test_hadamard_bound_values():
    assert math.isclose(structmat.hadamard_geometric_mean_bound(2, 1.0), 2.0, rel_tol=1e-12)
    assert math.isclose(structmat.hadamard_geometric_mean_bound(3, 1.0), 3.0 ** 0.75,
                        rel_tol=1e-12)


def test_sampling_determinism():
    a = structmat.sample_gaussian(100, 42)
    b = structmat.sample_gaussian(100, 42)
    assert a == b
    assert abs(float(np.mean(a))) < 0.5

    d = structmat.sample_toeplitz_diagonals(8, 1)
    assert len(d) == 15
    assert all(-1.0 <= x < 1.0 for x in d)
    assert d == structmat.sample_toeplitz_diagonals(8, 1)
