#pragma once

// Gohberg-Semencul representations of Toeplitz inverses. A nonsingular
// Toeplitz matrix T is inverted from two corner columns of its inverse:
//   variant A uses p = T^{-1} e_1 and q = T^{-1} e_n of T itself;
//   variants B and C use the corner columns v, w of a bordered matrix of
//   order n+1 and represent the inverses of its leading n x n block (B)
//   and of its shifted block with entries t_{i-j+1} (C).

#include <cstddef>

#include "structmat/dense.hpp"
#include "structmat/structured.hpp"
#include "structmat/types.hpp"

namespace structmat {

enum class GsVariant { A, B, C };

struct GohbergSemenculFactors {
    GsVariant variant = GsVariant::A;
    DenseVector first;   // p (variant A) or v (variants B, C); length n or n+1
    DenseVector last;    // q (variant A) or w (variants B, C)
    double pivot = 0.0;  // p_1, v_0, or v_n
    std::size_t order = 0;  // order of the represented inverse
};

struct CornerSolve {
    DenseVector p;
    DenseVector q;
    double residual_p = 0.0;  // ||T p - e_1||
    double residual_q = 0.0;  // ||T q - e_n||
};

// Dense LU solve for both corner columns of T^{-1}.
CornerSolve solve_corner_columns(const ToeplitzSpec& t);

// Factor builders. Variant A takes the matrix to invert; variants B and C
// take the bordered matrix of order n+1 whose blocks are inverted.
GohbergSemenculFactors gs_factors(const ToeplitzSpec& t, GsVariant variant);

// The leading n entries of the bordered Toeplitz diagonal vector shifted by
// one subdiagonal: the block with entries t_{i-j+1}.
ToeplitzSpec shifted_block(const ToeplitzSpec& bordered);

// Leading n x n block of a bordered Toeplitz matrix.
ToeplitzSpec leading_block(const ToeplitzSpec& bordered);

Matrix gs_reconstruct_a(const GohbergSemenculFactors& f);
Matrix gs_reconstruct_b(const GohbergSemenculFactors& f);
Matrix gs_reconstruct_c(const GohbergSemenculFactors& f);
Matrix gs_reconstruct(const GohbergSemenculFactors& f);

// Applies the represented inverse in O(n log n) through triangular
// Toeplitz products evaluated by circulant embedding.
DenseVector gs_apply(const GohbergSemenculFactors& f, const DenseVector& x);

struct GsInverseNormBound {
    double bound_h = 0.0;   // 2 ||p||_1 ||q||_1 / |p_1|, valid for h = 1, 2, inf
    double bound_2n = 0.0;  // 2 n ||p|| ||q|| / |p_1|
};

GsInverseNormBound inverse_norm_bound(const GohbergSemenculFactors& f);

}  // namespace structmat
