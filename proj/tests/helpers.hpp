#pragma once

// Independent oracles for the test suites: quadratic DFT, Gauss-Jordan
// inversion, one-sided Jacobi SVD, and series special functions. None of
// them share code paths with the library implementations they check.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <random>
#include <vector>

#include "structmat/dense.hpp"
#include "structmat/types.hpp"

namespace testutil {

using structmat::Complex;
using structmat::ComplexVector;
using structmat::DenseVector;
using structmat::Matrix;

constexpr double kPi = 3.14159265358979323846;

// Omega = (omega^{jk}) with omega = exp(+2 pi i / n), evaluated entrywise.
inline ComplexVector naive_dft(const ComplexVector& v) {
    const std::size_t n = v.size();
    ComplexVector out(n);
    for (std::size_t k = 0; k < n; ++k) {
        Complex acc{0.0, 0.0};
        for (std::size_t j = 0; j < n; ++j) {
            const double angle = 2.0 * kPi * static_cast<double>((j * k) % n) /
                                 static_cast<double>(n);
            acc += v[j] * std::polar(1.0, angle);
        }
        out[k] = acc;
    }
    return out;
}

inline ComplexVector naive_idft(const ComplexVector& v) {
    const std::size_t n = v.size();
    ComplexVector out(n);
    for (std::size_t k = 0; k < n; ++k) {
        Complex acc{0.0, 0.0};
        for (std::size_t j = 0; j < n; ++j) {
            const double angle = -2.0 * kPi * static_cast<double>((j * k) % n) /
                                 static_cast<double>(n);
            acc += v[j] * std::polar(1.0, angle);
        }
        out[k] = acc / static_cast<double>(n);
    }
    return out;
}

inline ComplexVector to_complex(const DenseVector& v) {
    ComplexVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = Complex{v[i], 0.0};
    return out;
}

inline DenseVector cyclic_convolution(const DenseVector& a, const DenseVector& b) {
    const std::size_t n = a.size();
    DenseVector out(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[(i + j) % n] += a[i] * b[j];
    return out;
}

// Augmented [A | I] elimination with partial pivoting.
inline Matrix gauss_jordan_inverse(const Matrix& a) {
    const std::size_t n = a.rows();
    Matrix work(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) work(i, j) = a(i, j);
        work(i, n + i) = 1.0;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(work(r, col)) > std::abs(work(pivot, col))) pivot = r;
        if (pivot != col)
            for (std::size_t j = 0; j < 2 * n; ++j) std::swap(work(col, j), work(pivot, j));
        const double d = work(col, col);
        for (std::size_t j = 0; j < 2 * n; ++j) work(col, j) /= d;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            const double factor = work(r, col);
            if (factor == 0.0) continue;
            for (std::size_t j = 0; j < 2 * n; ++j) work(r, j) -= factor * work(col, j);
        }
    }
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = work(i, n + j);
    return inv;
}

// One-sided Jacobi (Hestenes) SVD; returns the largest singular value.
inline double jacobi_spectral_norm(Matrix a) {
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    for (int sweep = 0; sweep < 100; ++sweep) {
        double worst = 0.0;
        for (std::size_t p = 0; p + 1 < cols; ++p) {
            for (std::size_t q = p + 1; q < cols; ++q) {
                double app = 0.0, aqq = 0.0, apq = 0.0;
                for (std::size_t i = 0; i < rows; ++i) {
                    app += a(i, p) * a(i, p);
                    aqq += a(i, q) * a(i, q);
                    apq += a(i, p) * a(i, q);
                }
                const double scale = std::sqrt(app * aqq);
                if (scale == 0.0 || std::abs(apq) <= 1e-15 * scale) continue;
                worst = std::max(worst, std::abs(apq) / scale);
                const double tau = (aqq - app) / (2.0 * apq);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (std::size_t i = 0; i < rows; ++i) {
                    const double x = a(i, p);
                    const double y = a(i, q);
                    a(i, p) = c * x - s * y;
                    a(i, q) = s * x + c * y;
                }
            }
        }
        if (worst < 1e-14) break;
    }
    double best = 0.0;
    for (std::size_t j = 0; j < cols; ++j) {
        double sum = 0.0;
        for (std::size_t i = 0; i < rows; ++i) sum += a(i, j) * a(i, j);
        best = std::max(best, sum);
    }
    return std::sqrt(best);
}

// Maclaurin series in long double; accurate to ~1e-17 for |x| <= 2.
inline double erf_series(double x) {
    const long double z = x;
    long double term = z;
    long double sum = z;
    for (int k = 1; k < 200; ++k) {
        term *= -z * z / static_cast<long double>(k);
        const long double add = term / static_cast<long double>(2 * k + 1);
        sum += add;
        if (std::abs(static_cast<double>(add)) < 1e-19 * std::abs(static_cast<double>(sum)))
            break;
    }
    const long double two_over_sqrt_pi = 1.1283791670955125738961589031L;
    return static_cast<double>(two_over_sqrt_pi * sum);
}

inline double max_abs_diff(const Matrix& a, const Matrix& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
    return worst;
}

inline double max_abs(const DenseVector& v) {
    double worst = 0.0;
    for (double x : v) worst = std::max(worst, std::abs(x));
    return worst;
}

// Test-local randomness, independent of the library streams.
inline DenseVector random_vector(std::mt19937_64& rng, std::size_t n, double lo = -1.0,
                                 double hi = 1.0) {
    std::uniform_real_distribution<double> dist(lo, hi);
    DenseVector v(n);
    for (double& x : v) x = dist(rng);
    return v;
}

inline ComplexVector random_complex_vector(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    ComplexVector v(n);
    for (Complex& x : v) x = Complex{dist(rng), dist(rng)};
    return v;
}

inline Matrix random_matrix(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    Matrix a(n, n);
    for (double& x : a.data()) x = dist(rng);
    return a;
}

}  // namespace testutil
