#pragma once

// Generating-vector representations of Toeplitz, f-circulant, and Hankel
// matrices, with dense renderers and the basic structural transforms.
//
// Conventions (0-based):
//   ToeplitzSpec stores the 2n-1 diagonals (t_{1-n}, ..., t_0, ..., t_{n-1});
//   entry (i, j) = diagonals[n - 1 + i - j], the main diagonal sits at n - 1.
//   FCirculantSpec stores the first column t; entry (i, j) = t[i - j] for
//   i >= j and factor * t[n + i - j] above the diagonal.
//   HankelSpec stores the 2n-1 antidiagonals; entry (i, j) = antidiagonals[i + j].

#include <cstddef>

#include "structmat/dense.hpp"
#include "structmat/types.hpp"

namespace structmat {

// Dense renderers refuse orders beyond this guard.
inline constexpr std::size_t kMaxDenseOrder = 4096;

template <class T>
struct BasicToeplitz {
    std::vector<T> diagonals;  // length 2n - 1
};

template <class T>
struct BasicFCirculant {
    std::vector<T> first_column;  // length n
    double factor = 1.0;
};

template <class T>
struct BasicHankel {
    std::vector<T> antidiagonals;  // length 2n - 1
};

using ToeplitzSpec = BasicToeplitz<double>;
using ComplexToeplitzSpec = BasicToeplitz<Complex>;
using FCirculantSpec = BasicFCirculant<double>;
using ComplexFCirculantSpec = BasicFCirculant<Complex>;
using HankelSpec = BasicHankel<double>;

template <class T>
std::size_t toeplitz_order(const BasicToeplitz<T>& t) {
    if (t.diagonals.empty() || t.diagonals.size() % 2 == 0)
        throw DimensionError("toeplitz: diagonal vector must have odd length 2n-1");
    return (t.diagonals.size() + 1) / 2;
}

template <class T>
std::size_t hankel_order(const BasicHankel<T>& h) {
    if (h.antidiagonals.empty() || h.antidiagonals.size() % 2 == 0)
        throw DimensionError("hankel: antidiagonal vector must have odd length 2n-1");
    return (h.antidiagonals.size() + 1) / 2;
}

inline void check_dense_order(std::size_t n) {
    if (n > kMaxDenseOrder) throw DimensionError("dense rendering limited to order 4096");
}

template <class T>
BasicMatrix<T> toeplitz_to_dense(const BasicToeplitz<T>& t) {
    const std::size_t n = toeplitz_order(t);
    check_dense_order(n);
    BasicMatrix<T> a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = t.diagonals[n - 1 + i - j];
    return a;
}

template <class T>
BasicMatrix<T> f_circulant_to_dense(const BasicFCirculant<T>& c) {
    const std::size_t n = c.first_column.size();
    if (n == 0) throw DimensionError("f_circulant: empty first column");
    check_dense_order(n);
    BasicMatrix<T> a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a(i, j) = i >= j ? c.first_column[i - j]
                             : c.first_column[n + i - j] * c.factor;
    return a;
}

template <class T>
BasicMatrix<T> hankel_to_dense(const BasicHankel<T>& h) {
    const std::size_t n = hankel_order(h);
    check_dense_order(n);
    BasicMatrix<T> a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = h.antidiagonals[i + j];
    return a;
}

// J v: reverses the entries.
template <class T>
std::vector<T> reflect(std::vector<T> v) {
    std::reverse(v.begin(), v.end());
    return v;
}

// Z v: shifts entries down by one, dropping the last.
template <class T>
std::vector<T> downshift(const std::vector<T>& v) {
    std::vector<T> r(v.size(), T{});
    for (std::size_t i = 1; i < v.size(); ++i) r[i] = v[i - 1];
    return r;
}

// H J is Toeplitz with the antidiagonal vector reused as its diagonal vector.
template <class T>
BasicToeplitz<T> hankel_to_toeplitz(const BasicHankel<T>& h) {
    hankel_order(h);
    return BasicToeplitz<T>{h.antidiagonals};
}

// || J T J - T^T ||_F; zero because Toeplitz matrices are persymmetric.
double persymmetry_residual(const ToeplitzSpec& t);

}  // namespace structmat
