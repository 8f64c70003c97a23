#pragma once

// Vector and matrix norms plus checkers for the norm identities and bounds
// satisfied by circulant, triangular, f-circulant, and Toeplitz matrices.

#include <cstddef>
#include <string>

#include "structmat/dense.hpp"
#include "structmat/structured.hpp"
#include "structmat/types.hpp"

namespace structmat {

enum class NormFamily { One, Two, Infinity, Frobenius };

const char* norm_family_name(NormFamily family);

// Additive slack applied to every bound check.
inline double norm_slack(double rhs) { return 1e-12 * std::max(1.0, rhs); }

struct NormBound {
    std::string label;
    double left = 0.0;
    double right = 0.0;
    bool satisfied = false;
};

struct NormBoundReport {
    std::vector<NormBound> bounds;

    NormBound& add(std::string label, double left, double right, double slack_scale = 1.0) {
        const bool ok = left <= right + slack_scale * norm_slack(right);
        bounds.push_back(NormBound{std::move(label), left, right, ok});
        return bounds.back();
    }
    bool all_satisfied() const {
        for (const NormBound& b : bounds)
            if (!b.satisfied) return false;
        return true;
    }
};

double vector_norm(const DenseVector& v, NormFamily family);
double vector_norm(const ComplexVector& v, NormFamily family);

struct SpectralEstimate {
    double value = 0.0;   // best estimate of the largest singular value
    bool converged = false;
    double lower = 0.0;   // bracket from the 1- and infinity-norm bounds
    double upper = 0.0;
    std::size_t iterations = 0;
};

// Power iteration on the Gram operator; deterministic all-ones start with
// one seeded random restart if the estimate stalls.
SpectralEstimate spectral_norm_estimate(const Matrix& a);
SpectralEstimate spectral_norm_estimate(const ComplexMatrix& a);

// Throws PowerIterationStall carrying the bracket when the Two estimate
// fails to converge.
double matrix_norm(const Matrix& a, NormFamily family);
double matrix_norm(const ComplexMatrix& a, NormFamily family);

// Norm equivalence relations for a single square matrix; rank 0 means use n.
NormBoundReport check_norm_relations(const Matrix& a, std::size_t rank = 0);

// Subadditivity and submultiplicativity for a matched pair.
NormBoundReport check_product_relations(const Matrix& f, const Matrix& g);

// Circulant norm chain, the Frobenius identity, and domination of the
// triangular part; requires factor 1.
NormBoundReport circulant_norm_bounds(const FCirculantSpec& spec);

// Structural Frobenius norm of Z_1(t) without dense expansion.
double circulant_frobenius_norm(const FCirculantSpec& spec);

// Toeplitz norm chain against the generating vector.
NormBoundReport toeplitz_norm_bounds(const ToeplitzSpec& spec);

struct InverseNorms {
    double frobenius = 0.0;
    double spectral = 0.0;
};

// Inverse norms of a nonsingular circulant from reciprocal eigenvalues.
InverseNorms circulant_inverse_norms(const FCirculantSpec& spec);

// Sandwich bounds between Z_f and Z_1 norms with g(f) = max(|f|, 1/|f|),
// for the matrix and, when nonsingular, its inverse; the inverse is the
// f-circulant of its own first column and the sandwich is applied to that
// vector. Covers the entrywise families (1, inf, Frobenius), which hold for
// every nonzero f; the spectral analogue is false in general and is not
// checked.
NormBoundReport f_circulant_scaling_check(const FCirculantSpec& spec);

}  // namespace structmat
