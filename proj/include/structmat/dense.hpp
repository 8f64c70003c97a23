#pragma once

// Row-major dense matrices and LU factorization with partial pivoting.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <utility>

#include "structmat/types.hpp"

namespace structmat {

template <class T>
class BasicMatrix {
  public:
    BasicMatrix() = default;
    BasicMatrix(std::size_t rows, std::size_t cols, T value = T{})
        : rows_(rows), cols_(cols), data_(rows * cols, value) {}

    static BasicMatrix identity(std::size_t n) {
        BasicMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return data_.empty(); }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    T* row(std::size_t i) { return data_.data() + i * cols_; }
    const T* row(std::size_t i) const { return data_.data() + i * cols_; }

    std::vector<T>& data() noexcept { return data_; }
    const std::vector<T>& data() const noexcept { return data_; }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using Matrix = BasicMatrix<double>;
using ComplexMatrix = BasicMatrix<Complex>;

template <class T>
BasicMatrix<T> transpose(const BasicMatrix<T>& a) {
    BasicMatrix<T> r(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = a(i, j);
    return r;
}

template <class T>
BasicMatrix<T> matmul(const BasicMatrix<T>& a, const BasicMatrix<T>& b) {
    if (a.cols() != b.rows()) throw DimensionError("matmul: inner dimensions disagree");
    BasicMatrix<T> r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        T* ri = r.row(i);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const T aik = a(i, k);
            const T* bk = b.row(k);
            for (std::size_t j = 0; j < b.cols(); ++j) ri[j] += aik * bk[j];
        }
    }
    return r;
}

template <class T>
std::vector<T> matvec(const BasicMatrix<T>& a, const std::vector<T>& x) {
    if (a.cols() != x.size()) throw DimensionError("matvec: dimensions disagree");
    std::vector<T> y(a.rows(), T{});
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const T* ri = a.row(i);
        T acc{};
        for (std::size_t j = 0; j < a.cols(); ++j) acc += ri[j] * x[j];
        y[i] = acc;
    }
    return y;
}

// Exchange matrix J (ones on the antidiagonal).
template <class T = double>
BasicMatrix<T> reflection_matrix(std::size_t n) {
    BasicMatrix<T> j(n, n);
    for (std::size_t i = 0; i < n; ++i) j(i, n - 1 - i) = T{1};
    return j;
}

template <class T>
struct LuFactors {
    BasicMatrix<T> lu;               // unit-lower L below the diagonal, U on and above
    std::vector<std::size_t> perm;   // row permutation applied to the input
    int sign = 1;                    // permutation parity
    double min_pivot = 0.0;          // smallest |U(k,k)|
};

template <class T>
LuFactors<T> lu_factor(BasicMatrix<T> a) {
    if (a.rows() != a.cols()) throw DimensionError("lu_factor: matrix must be square");
    const std::size_t n = a.rows();
    LuFactors<T> f;
    f.perm.resize(n);
    for (std::size_t i = 0; i < n; ++i) f.perm[i] = i;
    f.min_pivot = n == 0 ? 0.0 : std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        double best = std::abs(a(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            const double v = std::abs(a(i, k));
            if (v > best) {
                best = v;
                piv = i;
            }
        }
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
            std::swap(f.perm[k], f.perm[piv]);
            f.sign = -f.sign;
        }
        f.min_pivot = std::min(f.min_pivot, best);
        if (best == 0.0) continue;  // column already eliminated; factor stays singular
        const T inv = T{1} / a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const T l = a(i, k) * inv;
            a(i, k) = l;
            const T* rk = a.row(k);
            T* ri = a.row(i);
            for (std::size_t j = k + 1; j < n; ++j) ri[j] -= l * rk[j];
        }
    }
    f.lu = std::move(a);
    return f;
}

template <class T>
std::vector<T> lu_solve(const LuFactors<T>& f, const std::vector<T>& b) {
    const std::size_t n = f.lu.rows();
    if (b.size() != n) throw DimensionError("lu_solve: dimensions disagree");
    std::vector<T> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[f.perm[i]];
    for (std::size_t i = 1; i < n; ++i) {
        const T* ri = f.lu.row(i);
        T acc = x[i];
        for (std::size_t j = 0; j < i; ++j) acc -= ri[j] * x[j];
        x[i] = acc;
    }
    for (std::size_t i = n; i-- > 0;) {
        const T* ri = f.lu.row(i);
        T acc = x[i];
        for (std::size_t j = i + 1; j < n; ++j) acc -= ri[j] * x[j];
        x[i] = acc / ri[i];
    }
    return x;
}

// Inverse by row-oriented forward/back substitution on the permuted identity.
template <class T>
BasicMatrix<T> lu_inverse(const LuFactors<T>& f) {
    const std::size_t n = f.lu.rows();
    BasicMatrix<T> y(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        T* yi = y.row(i);
        yi[f.perm[i]] = T{1};
        const T* li = f.lu.row(i);
        for (std::size_t k = 0; k < i; ++k) {
            const T l = li[k];
            if (l == T{}) continue;
            const T* yk = y.row(k);
            for (std::size_t j = 0; j < n; ++j) yi[j] -= l * yk[j];
        }
    }
    for (std::size_t i = n; i-- > 0;) {
        T* yi = y.row(i);
        const T* ui = f.lu.row(i);
        for (std::size_t k = i + 1; k < n; ++k) {
            const T u = ui[k];
            if (u == T{}) continue;
            const T* yk = y.row(k);
            for (std::size_t j = 0; j < n; ++j) yi[j] -= u * yk[j];
        }
        const T inv = T{1} / ui[i];
        for (std::size_t j = 0; j < n; ++j) yi[j] *= inv;
    }
    return y;
}

template <class T>
T determinant(const BasicMatrix<T>& a) {
    LuFactors<T> f = lu_factor(a);
    T det = static_cast<T>(f.sign);
    for (std::size_t k = 0; k < f.lu.rows(); ++k) det *= f.lu(k, k);
    return det;
}

}  // namespace structmat
