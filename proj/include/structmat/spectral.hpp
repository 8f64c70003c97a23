#pragma once

// Spectral decomposition of f-circulant matrices and the fast matrix-vector
// products built on it. Z_f(t) = D_g^{-1} Omega^{-1} D(Omega D_g t) Omega D_g
// with D_g = diag(g^i) and g the positive real n-th root of f.

#include <cstddef>

#include "structmat/fft.hpp"
#include "structmat/structured.hpp"
#include "structmat/types.hpp"

namespace structmat {

struct SpectralDiagonal {
    ComplexVector eigenvalues;
    std::size_t order = 0;
    double factor = 1.0;
};

// Relative cutoff below which an eigenvalue counts as vanishing.
double singular_tolerance(const ComplexVector& eigenvalues);

SpectralDiagonal circulant_eigenvalues(const FCirculantSpec& spec);
SpectralDiagonal circulant_eigenvalues(const FCirculantSpec& spec, const FourierPlan& plan);
SpectralDiagonal circulant_eigenvalues(const ComplexFCirculantSpec& spec, const FourierPlan& plan);

DenseVector circulant_matvec(const FCirculantSpec& spec, const DenseVector& x);
DenseVector circulant_inverse_apply(const FCirculantSpec& spec, const DenseVector& x);

// First column of the inverse circulant (f = 1).
DenseVector circulant_inverse_first_column(const FCirculantSpec& spec);
ComplexVector circulant_inverse_first_column(const ComplexFCirculantSpec& spec,
                                             const FourierPlan& plan);

// O(n log n) Toeplitz product through a circulant embedding of size >= 2n-1.
DenseVector toeplitz_matvec(const ToeplitzSpec& spec, const DenseVector& x);

}  // namespace structmat
