#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

#include "helpers.hpp"
#include "structmat/fft.hpp"
#include "structmat/spectral.hpp"
#include "structmat/structured.hpp"

using namespace structmat;
using doctest::Approx;

namespace {

double max_abs_diff(const ComplexVector& a, const ComplexVector& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

double norm2(const ComplexVector& v) {
    double s = 0.0;
    for (const Complex& z : v) s += std::norm(z);
    return std::sqrt(s);
}

DenseVector dense_matvec(const Matrix& a, const DenseVector& x) {
    DenseVector y(a.rows(), 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
    return y;
}

}  // namespace

TEST_CASE("dft basic values") {
    const ComplexVector e1{{1, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}};
    const ComplexVector ones = dft(e1);
    for (const Complex& z : ones) CHECK(std::abs(z - Complex{1, 0}) <= 1e-14);

    const ComplexVector ab{{2.5, 0}, {-1.5, 0}};
    const ComplexVector sum_diff = dft(ab);
    CHECK(std::abs(sum_diff[0] - Complex{1, 0}) <= 1e-14);
    CHECK(std::abs(sum_diff[1] - Complex{4, 0}) <= 1e-14);

    const ComplexVector constant{{1, 0}, {1, 0}, {1, 0}, {1, 0}};
    const ComplexVector spike = dft(constant);
    CHECK(std::abs(spike[0] - Complex{4, 0}) <= 1e-13);
    for (std::size_t k = 1; k < 4; ++k) CHECK(std::abs(spike[k]) <= 1e-13);
}

TEST_CASE("idft basic values and round trip") {
    const ComplexVector spike{{4, 0}, {0, 0}, {0, 0}, {0, 0}};
    const ComplexVector constant = idft(spike);
    for (const Complex& z : constant) CHECK(std::abs(z - Complex{1, 0}) <= 1e-14);

    const ComplexVector e1{{1, 0}, {0, 0}, {0, 0}};
    const ComplexVector third = idft(e1);
    for (const Complex& z : third) CHECK(std::abs(z - Complex{1.0 / 3.0, 0}) <= 1e-15);

    std::mt19937_64 rng(21);
    const ComplexVector v = testutil::random_complex_vector(rng, 7);
    const ComplexVector back = idft(dft(v));
    CHECK(max_abs_diff(back, v) <= 1e-12 * norm2(v));
}

TEST_CASE("transform agrees with the quadratic oracle at mixed lengths") {
    std::mt19937_64 rng(22);
    for (std::size_t n : {2u, 3u, 8u, 13u, 16u, 31u, 64u, 97u}) {
        const ComplexVector v = testutil::random_complex_vector(rng, n);
        CHECK(max_abs_diff(dft(v), testutil::naive_dft(v)) <= 1e-11 * (1.0 + norm2(v)));
        CHECK(max_abs_diff(idft(v), testutil::naive_idft(v)) <= 1e-11 * (1.0 + norm2(v)));
    }
}

TEST_CASE("plan reuse matches one-shot transforms") {
    std::mt19937_64 rng(23);
    const FourierPlan plan(12);
    for (int rep = 0; rep < 3; ++rep) {
        const ComplexVector v = testutil::random_complex_vector(rng, 12);
        CHECK(max_abs_diff(plan.forward(v), dft(v)) == 0.0);
        CHECK(max_abs_diff(plan.inverse(v), idft(v)) == 0.0);
    }
    CHECK_THROWS_AS(circulant_eigenvalues(FCirculantSpec{{1, 0}, 1.0}, FourierPlan(3)),
                    DimensionError);
}

TEST_CASE("unitarity of the scaled transform") {
    std::mt19937_64 rng(24);
    for (std::size_t n = 2; n <= 64; ++n) {
        const ComplexVector v = testutil::random_complex_vector(rng, n);
        const double lhs = norm2(dft(v)) / std::sqrt(static_cast<double>(n));
        CHECK(lhs == Approx(norm2(v)).epsilon(1e-12));
    }
}

TEST_CASE("circulant eigenvalues") {
    const SpectralDiagonal id = circulant_eigenvalues(FCirculantSpec{{1, 0, 0, 0, 0}, 1.0});
    CHECK(id.order == 5);
    for (const Complex& u : id.eigenvalues) CHECK(std::abs(u - Complex{1, 0}) <= 1e-14);

    const SpectralDiagonal two = circulant_eigenvalues(FCirculantSpec{{3, 1}, 1.0});
    CHECK(std::abs(two.eigenvalues[0] - Complex{4, 0}) <= 1e-14);
    CHECK(std::abs(two.eigenvalues[1] - Complex{2, 0}) <= 1e-14);

    // Eigenpair oracle: Z_1(t) x_k = u_k x_k with x_k = (omega^{-jk})_j.
    std::mt19937_64 rng(25);
    const std::size_t n = 8;
    const DenseVector t = testutil::random_vector(rng, n);
    const Matrix a = f_circulant_to_dense(FCirculantSpec{t, 1.0});
    const SpectralDiagonal diag = circulant_eigenvalues(FCirculantSpec{t, 1.0});
    for (std::size_t k = 0; k < n; ++k) {
        ComplexVector x(n), ax(n);
        for (std::size_t j = 0; j < n; ++j)
            x[j] = std::polar(1.0, -2.0 * testutil::kPi * static_cast<double>(j * k) /
                                       static_cast<double>(n));
        for (std::size_t i = 0; i < n; ++i) {
            Complex acc{0, 0};
            for (std::size_t j = 0; j < n; ++j) acc += a(i, j) * x[j];
            ax[i] = acc;
        }
        for (std::size_t i = 0; i < n; ++i)
            CHECK(std::abs(ax[i] - diag.eigenvalues[k] * x[i]) <= 1e-10);
    }

    CHECK_THROWS_AS(circulant_eigenvalues(FCirculantSpec{t, 0.0}), ZeroFactor);
    CHECK_THROWS_AS(circulant_eigenvalues(FCirculantSpec{t, -1.0}), std::invalid_argument);
}

TEST_CASE("circulant matvec") {
    const DenseVector x{0.5, -2.0, 3.0};
    const DenseVector same = circulant_matvec(FCirculantSpec{{1, 0, 0}, 1.0}, x);
    for (std::size_t i = 0; i < x.size(); ++i) CHECK(same[i] == Approx(x[i]).epsilon(1e-14));

    const DenseVector first = circulant_matvec(FCirculantSpec{{3, 1}, 1.0}, {1, 0});
    CHECK(first[0] == Approx(3.0).epsilon(1e-14));
    CHECK(first[1] == Approx(1.0).epsilon(1e-14));

    std::mt19937_64 rng(26);
    for (std::size_t n : {33u, 16u}) {
        const DenseVector t = testutil::random_vector(rng, n);
        const DenseVector v = testutil::random_vector(rng, n);
        const FCirculantSpec spec{t, 1.0};
        const DenseVector fast = circulant_matvec(spec, v);
        const DenseVector dense = dense_matvec(f_circulant_to_dense(spec), v);
        const DenseVector conv = testutil::cyclic_convolution(t, v);
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(fast[i] == Approx(dense[i]).epsilon(1e-10));
            CHECK(fast[i] == Approx(conv[i]).epsilon(1e-10));
        }
    }
}

TEST_CASE("circulant inverse apply") {
    const DenseVector x{0.5, -2.0, 3.0};
    const DenseVector same = circulant_inverse_apply(FCirculantSpec{{1, 0, 0}, 1.0}, x);
    for (std::size_t i = 0; i < x.size(); ++i) CHECK(same[i] == Approx(x[i]).epsilon(1e-14));

    const DenseVector sol = circulant_inverse_apply(FCirculantSpec{{3, 1}, 1.0}, {1, 0});
    CHECK(sol[0] == Approx(3.0 / 8.0).epsilon(1e-14));
    CHECK(sol[1] == Approx(-1.0 / 8.0).epsilon(1e-14));

    try {
        circulant_inverse_apply(FCirculantSpec{{1, -1, 0, 0}, 1.0}, {1, 2, 3, 4});
        CHECK(false);
    } catch (const SingularCirculant& e) {
        CHECK(e.min_eigenvalue_magnitude <= 1e-13);
    }

    std::mt19937_64 rng(27);
    const std::size_t n = 24;
    const DenseVector t = testutil::random_vector(rng, n);
    const DenseVector rhs = testutil::random_vector(rng, n);
    const FCirculantSpec spec{t, 1.0};
    const DenseVector y = circulant_inverse_apply(spec, rhs);
    const DenseVector round = circulant_matvec(spec, y);
    for (std::size_t i = 0; i < n; ++i) CHECK(round[i] == Approx(rhs[i]).epsilon(1e-8));
}

TEST_CASE("circulant inverse first column matches the dense inverse") {
    std::mt19937_64 rng(28);
    const std::size_t n = 12;
    const DenseVector t = testutil::random_vector(rng, n);
    const FCirculantSpec spec{t, 1.0};
    const DenseVector col = circulant_inverse_first_column(spec);
    const Matrix inv = testutil::gauss_jordan_inverse(f_circulant_to_dense(spec));
    for (std::size_t i = 0; i < n; ++i) CHECK(col[i] == Approx(inv(i, 0)).epsilon(1e-9));

    const FourierPlan plan(n);
    ComplexVector tc(n);
    for (std::size_t i = 0; i < n; ++i) tc[i] = Complex{t[i], 0.0};
    const ComplexVector ccol =
        circulant_inverse_first_column(ComplexFCirculantSpec{tc, 1.0}, plan);
    for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(ccol[i] - col[i]) <= 1e-10);
}

TEST_CASE("toeplitz matvec") {
    const DenseVector x{1.0, -4.0, 2.5};
    CHECK(toeplitz_matvec(ToeplitzSpec{{0, 0, 1, 0, 0}}, x) == x);

    const DenseVector sums = toeplitz_matvec(ToeplitzSpec{{1, 1, 1, 1, 1}}, x);
    for (double s : sums) CHECK(s == Approx(-0.5).epsilon(1e-13));

    std::mt19937_64 rng(29);
    const std::size_t n = 50;
    const ToeplitzSpec spec{testutil::random_vector(rng, 2 * n - 1)};
    const DenseVector v = testutil::random_vector(rng, n);
    const DenseVector fast = toeplitz_matvec(spec, v);
    const DenseVector dense = dense_matvec(toeplitz_to_dense(spec), v);
    for (std::size_t i = 0; i < n; ++i) CHECK(fast[i] == Approx(dense[i]).epsilon(1e-10));

    CHECK_THROWS_AS(toeplitz_matvec(spec, DenseVector{1.0}), DimensionError);
}

TEST_CASE("diagonalization identity") {
    std::mt19937_64 rng(30);
    for (std::size_t n : {2u, 5u, 17u, 32u}) {
        const DenseVector t = testutil::random_vector(rng, n);
        const Matrix dense = f_circulant_to_dense(FCirculantSpec{t, 1.0});
        const ComplexVector u = dft(testutil::to_complex(t));
        const double scale = norm2(testutil::to_complex(t));
        // Column j of Omega^{-1} D(Omega t) Omega.
        for (std::size_t j = 0; j < n; ++j) {
            ComplexVector col(n, Complex{0, 0});
            col[j] = Complex{1, 0};
            ComplexVector w = dft(col);
            for (std::size_t i = 0; i < n; ++i) w[i] *= u[i];
            w = idft(w);
            for (std::size_t i = 0; i < n; ++i)
                CHECK(std::abs(w[i] - dense(i, j)) <= 1e-10 * std::max(1.0, scale));
        }
    }
}

TEST_CASE("f-circulant identity for positive factors") {
    std::mt19937_64 rng(31);
    for (std::size_t n : {2u, 7u, 16u}) {
        const DenseVector t = testutil::random_vector(rng, n);
        const double g = 0.5 + 1.5 * std::generate_canonical<double, 53>(rng);
        const double f = std::pow(g, static_cast<double>(n));
        const FCirculantSpec spec{t, f};
        const Matrix dense = f_circulant_to_dense(spec);
        const SpectralDiagonal diag = circulant_eigenvalues(spec);

        // U_g = Omega D(g^i); dense(Z_f) = U_g^{-1} D(U_g t) U_g column by column.
        for (std::size_t j = 0; j < n; ++j) {
            ComplexVector col(n, Complex{0, 0});
            col[j] = std::pow(g, static_cast<double>(j));
            ComplexVector w = dft(col);
            for (std::size_t i = 0; i < n; ++i) w[i] *= diag.eigenvalues[i];
            w = idft(w);
            for (std::size_t i = 0; i < n; ++i)
                w[i] /= std::pow(g, static_cast<double>(i));
            for (std::size_t i = 0; i < n; ++i)
                CHECK(std::abs(w[i] - dense(i, j)) <= 1e-10 * std::max(1.0, testutil::max_abs(t)));
        }

        const DenseVector x = testutil::random_vector(rng, n);
        const DenseVector fast = circulant_matvec(spec, x);
        const DenseVector direct = dense_matvec(dense, x);
        for (std::size_t i = 0; i < n; ++i) CHECK(fast[i] == Approx(direct[i]).epsilon(1e-9));
    }
}
