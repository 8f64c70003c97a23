#include "structmat/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace structmat {

namespace {

// D_g t with g = f^{1/n} > 0; identity scaling for f = 1.
ComplexVector scaled_column(const FCirculantSpec& spec) {
    const std::size_t n = spec.first_column.size();
    if (n == 0) throw DimensionError("f_circulant: empty first column");
    if (spec.factor == 0.0) throw ZeroFactor("f_circulant: factor must be nonzero");
    if (spec.factor < 0.0) throw std::invalid_argument("f_circulant: negative factors not supported");
    ComplexVector c(n);
    if (spec.factor == 1.0) {
        for (std::size_t i = 0; i < n; ++i) c[i] = spec.first_column[i];
        return c;
    }
    const double g = std::pow(spec.factor, 1.0 / static_cast<double>(n));
    double p = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        c[i] = spec.first_column[i] * p;
        p *= g;
    }
    return c;
}

double min_abs(const ComplexVector& v) {
    double m = std::numeric_limits<double>::infinity();
    for (const Complex& z : v) m = std::min(m, std::abs(z));
    return m;
}

double max_abs(const ComplexVector& v) {
    double m = 0.0;
    for (const Complex& z : v) m = std::max(m, std::abs(z));
    return m;
}

std::size_t next_pow2(std::size_t n) {
    std::size_t m = 1;
    while (m < n) m <<= 1;
    return m;
}

}  // namespace

double singular_tolerance(const ComplexVector& eigenvalues) {
    return 1e-13 * max_abs(eigenvalues);
}

SpectralDiagonal circulant_eigenvalues(const FCirculantSpec& spec, const FourierPlan& plan) {
    ComplexVector c = scaled_column(spec);
    if (plan.size() != c.size()) throw DimensionError("circulant_eigenvalues: plan length mismatch");
    plan.forward_inplace(c);
    return SpectralDiagonal{std::move(c), spec.first_column.size(), spec.factor};
}

SpectralDiagonal circulant_eigenvalues(const FCirculantSpec& spec) {
    FourierPlan plan(spec.first_column.size());
    return circulant_eigenvalues(spec, plan);
}

SpectralDiagonal circulant_eigenvalues(const ComplexFCirculantSpec& spec, const FourierPlan& plan) {
    if (spec.factor != 1.0) throw std::invalid_argument("complex spec supports factor 1 only");
    ComplexVector c = spec.first_column;
    if (plan.size() != c.size()) throw DimensionError("circulant_eigenvalues: plan length mismatch");
    plan.forward_inplace(c);
    return SpectralDiagonal{std::move(c), spec.first_column.size(), spec.factor};
}

namespace {

// y = D_g^{-1} Omega^{-1} (u .* (Omega D_g x)) for a prepared diagonal u.
DenseVector diagonal_apply(const SpectralDiagonal& d, const ComplexVector& diag,
                           const DenseVector& x) {
    const std::size_t n = d.order;
    if (x.size() != n) throw DimensionError("circulant apply: dimensions disagree");
    FourierPlan plan(n);
    ComplexVector v(n);
    if (d.factor == 1.0) {
        for (std::size_t i = 0; i < n; ++i) v[i] = x[i];
    } else {
        const double g = std::pow(d.factor, 1.0 / static_cast<double>(n));
        double p = 1.0;
        for (std::size_t i = 0; i < n; ++i) {
            v[i] = x[i] * p;
            p *= g;
        }
    }
    plan.forward_inplace(v);
    for (std::size_t i = 0; i < n; ++i) v[i] *= diag[i];
    plan.inverse_inplace(v);
    DenseVector y(n);
    if (d.factor == 1.0) {
        for (std::size_t i = 0; i < n; ++i) y[i] = v[i].real();
    } else {
        const double g = std::pow(d.factor, 1.0 / static_cast<double>(n));
        double p = 1.0;
        for (std::size_t i = 0; i < n; ++i) {
            y[i] = v[i].real() / p;
            p *= g;
        }
    }
    return y;
}

}  // namespace

DenseVector circulant_matvec(const FCirculantSpec& spec, const DenseVector& x) {
    const SpectralDiagonal d = circulant_eigenvalues(spec);
    return diagonal_apply(d, d.eigenvalues, x);
}

DenseVector circulant_inverse_apply(const FCirculantSpec& spec, const DenseVector& x) {
    const SpectralDiagonal d = circulant_eigenvalues(spec);
    const double tol = singular_tolerance(d.eigenvalues);
    const double mn = min_abs(d.eigenvalues);
    if (!(mn > tol))
        throw SingularCirculant("circulant_inverse_apply: vanishing eigenvalue, min |u_i| = " +
                                    std::to_string(mn),
                                mn);
    ComplexVector recip(d.eigenvalues.size());
    for (std::size_t i = 0; i < recip.size(); ++i) recip[i] = 1.0 / d.eigenvalues[i];
    return diagonal_apply(d, recip, x);
}

DenseVector circulant_inverse_first_column(const FCirculantSpec& spec) {
    if (spec.factor != 1.0) throw std::invalid_argument("inverse first column requires factor 1");
    const SpectralDiagonal d = circulant_eigenvalues(spec);
    const double tol = singular_tolerance(d.eigenvalues);
    const double mn = min_abs(d.eigenvalues);
    if (!(mn > tol))
        throw SingularCirculant("circulant inverse: vanishing eigenvalue", mn);
    ComplexVector recip(d.eigenvalues.size());
    for (std::size_t i = 0; i < recip.size(); ++i) recip[i] = 1.0 / d.eigenvalues[i];
    FourierPlan plan(recip.size());
    plan.inverse_inplace(recip);
    DenseVector col(recip.size());
    for (std::size_t i = 0; i < col.size(); ++i) col[i] = recip[i].real();
    return col;
}

ComplexVector circulant_inverse_first_column(const ComplexFCirculantSpec& spec,
                                             const FourierPlan& plan) {
    const SpectralDiagonal d = circulant_eigenvalues(spec, plan);
    const double tol = singular_tolerance(d.eigenvalues);
    const double mn = min_abs(d.eigenvalues);
    if (!(mn > tol))
        throw SingularCirculant("circulant inverse: vanishing eigenvalue", mn);
    ComplexVector recip(d.eigenvalues.size());
    for (std::size_t i = 0; i < recip.size(); ++i) recip[i] = 1.0 / d.eigenvalues[i];
    plan.inverse_inplace(recip);
    return recip;
}

DenseVector toeplitz_matvec(const ToeplitzSpec& spec, const DenseVector& x) {
    const std::size_t n = toeplitz_order(spec);
    if (x.size() != n) throw DimensionError("toeplitz_matvec: dimensions disagree");
    const std::size_t m = next_pow2(2 * n - 1);
    FourierPlan plan(m);
    // circulant embedding: first column carries the subdiagonals, the tail
    // wraps the superdiagonals so entry (i, j) recovers t_{i-j}
    ComplexVector c(m, Complex{});
    for (std::size_t k = 0; k < n; ++k) c[k] = spec.diagonals[n - 1 + k];
    for (std::size_t k = 1; k < n; ++k) c[m - k] = spec.diagonals[n - 1 - k];
    ComplexVector v(m, Complex{});
    for (std::size_t i = 0; i < n; ++i) v[i] = x[i];
    plan.forward_inplace(c);
    plan.forward_inplace(v);
    for (std::size_t i = 0; i < m; ++i) v[i] *= c[i];
    plan.inverse_inplace(v);
    DenseVector y(n);
    for (std::size_t i = 0; i < n; ++i) y[i] = v[i].real();
    return y;
}

}  // namespace structmat
