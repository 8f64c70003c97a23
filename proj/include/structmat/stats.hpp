#pragma once

// Analytic distribution functions for the random-matrix model: Gaussian and
// chi CDFs, the circulant inverse-norm law, dominance bounds, and the
// empirical-CDF machinery used to validate them.

#include <cstddef>
#include <functional>
#include <string>

#include "structmat/dense.hpp"
#include "structmat/random.hpp"
#include "structmat/types.hpp"

namespace structmat {

// Regularized lower incomplete gamma P(a, x); series for x < a + 1,
// continued fraction otherwise. Absolute error below 1e-12.
double regularized_gamma_p(double a, double x);

double normal_cdf(double y, const GaussianParams& params = {});

// Two-sided tail P(|y - mu|/sigma >= s) = 2 (1 - Phi(s)); requires s >= 0.
double gaussian_tail(double s);

// CDF of the 2-norm of an n-vector of independent standard Gaussians.
double chi_cdf(double y, std::size_t n);

// CDF of the 2-norm of an n-vector of independent N(mu, sigma) draws;
// closed form when mu = 0, cached Monte Carlo otherwise.
double gaussian_norm_cdf(double y, const GaussianParams& params, std::size_t n);

// F(z) = 1 - (1 - q)^n with q = Phi((1/z - mu)/sigma) - Phi((-1/z - mu)/sigma).
double circulant_inverse_cdf(double z, const GaussianParams& params, std::size_t n);

enum class EnsembleKind { Toeplitz, Circulant };

// Lower bound for the CDF of the h-norm of a random Toeplitz or circulant
// matrix: the generating-vector chi CDF evaluated at y over the norm scale.
double norm_cdf_lower_bound(double y, const GaussianParams& params, std::size_t n,
                            EnsembleKind kind);

// Upper bound min(1, sqrt(2/pi) y / sigma) for F_{|t^T b|}(y), unit t.
double inner_product_cdf_bound(double y, double sigma);

// Upper bound min(1, sqrt(2n/pi) y / (sigma |u_n|)) for the corner variable.
double corner_bound_cdf(double y, double sigma, std::size_t n, double corner_magnitude);

// k^{(1/2)(1 + 1/(k-1))} t bounds the geometric mean (|det|/t)^{1/(k-1)} of
// any k x k matrix with entries bounded by t.
double hadamard_geometric_mean_bound(std::size_t k, double t);

// ||M - mu e e^T||_F / sigma for one sampled matrix of the given class.
double rank_one_deviation(const GaussianParams& params, std::size_t n, RandomStream& stream,
                          MatrixClass kind = MatrixClass::General);

class EmpiricalCdf {
  public:
    explicit EmpiricalCdf(DenseVector values);
    double evaluate(double y) const;  // (#values <= y) / m
    const DenseVector& values() const noexcept { return values_; }
    std::size_t count() const noexcept { return values_.size(); }

  private:
    DenseVector values_;  // sorted
};

struct CdfComparison {
    double ks_distance = 0.0;
    std::size_t sample_count = 0;
    std::string analytic_label;
    std::size_t dominance_violations = 0;
};

CdfComparison ks_distance(const EmpiricalCdf& emp, const std::function<double(double)>& analytic,
                          std::string label);

// Smallest LU pivot above 1e-12 ||A||_1.
bool full_rank_check(const Matrix& a);

}  // namespace structmat
