#include "structmat/stats.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "structmat/norms.hpp"

namespace structmat {

namespace {

constexpr int kGammaMaxIterations = 500;
constexpr double kGammaEpsilon = 1e-16;

double gamma_p_series(double a, double x) {
    double term = 1.0 / a;
    double sum = term;
    double ap = a;
    for (int i = 0; i < kGammaMaxIterations; ++i) {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::abs(term) < std::abs(sum) * kGammaEpsilon) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Lentz continued fraction for Q(a, x).
double gamma_q_fraction(double a, double x) {
    constexpr double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= kGammaMaxIterations; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < kGammaEpsilon) break;
    }
    return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Deterministic cache of Monte Carlo norm samples for mu != 0.
const DenseVector& noncentral_norm_samples(std::size_t n, double lambda) {
    static std::map<std::pair<std::size_t, double>, DenseVector> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find({n, lambda});
    if (it != cache.end()) return it->second;
    constexpr std::size_t kSamples = 100000;
    RandomStream stream(0xca11ab1e5eedULL, RandomStream::mix(n) ^ RandomStream::mix(
                                               static_cast<std::uint64_t>(lambda * 4096.0)));
    DenseVector samples(kSamples);
    for (double& s : samples) {
        double acc = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double g = lambda + stream.next_gaussian();
            acc += g * g;
        }
        s = std::sqrt(acc);
    }
    std::sort(samples.begin(), samples.end());
    return cache.emplace(std::make_pair(n, lambda), std::move(samples)).first->second;
}

double sorted_fraction_at_most(const DenseVector& sorted, double y) {
    const auto it = std::upper_bound(sorted.begin(), sorted.end(), y);
    return static_cast<double>(it - sorted.begin()) / static_cast<double>(sorted.size());
}

}  // namespace

double regularized_gamma_p(double a, double x) {
    if (!(a > 0.0)) throw ConfigError("regularized_gamma_p: requires a > 0");
    if (x < 0.0) throw ConfigError("regularized_gamma_p: requires x >= 0");
    if (x == 0.0) return 0.0;
    if (x < a + 1.0) return gamma_p_series(a, x);
    return 1.0 - gamma_q_fraction(a, x);
}

double normal_cdf(double y, const GaussianParams& params) {
    const double s = (y - params.mu) / params.sigma;
    return 0.5 * std::erfc(-s / std::numbers::sqrt2);
}

double gaussian_tail(double s) {
    if (s < 0.0) throw ConfigError("gaussian_tail: requires s >= 0");
    return std::erfc(s / std::numbers::sqrt2);
}

double chi_cdf(double y, std::size_t n) {
    if (n == 0) throw ConfigError("chi_cdf: requires n >= 1");
    if (y <= 0.0) return 0.0;
    return regularized_gamma_p(static_cast<double>(n) / 2.0, y * y / 2.0);
}

double gaussian_norm_cdf(double y, const GaussianParams& params, std::size_t n) {
    if (y <= 0.0) return 0.0;
    if (params.mu == 0.0) return chi_cdf(y / params.sigma, n);
    const double lambda = params.mu / params.sigma;
    return sorted_fraction_at_most(noncentral_norm_samples(n, lambda), y / params.sigma);
}

double circulant_inverse_cdf(double z, const GaussianParams& params, std::size_t n) {
    if (!(z > 0.0)) throw ConfigError("circulant_inverse_cdf: requires z > 0");
    const double q = normal_cdf(1.0 / z, params) - normal_cdf(-1.0 / z, params);
    return 1.0 - std::pow(1.0 - q, static_cast<double>(n));
}

double norm_cdf_lower_bound(double y, const GaussianParams& params, std::size_t n,
                            EnsembleKind kind) {
    if (y < 0.0) throw ConfigError("norm_cdf_lower_bound: requires y >= 0");
    const std::size_t m = kind == EnsembleKind::Toeplitz ? 2 * n - 1 : n;
    return gaussian_norm_cdf(y / std::sqrt(static_cast<double>(m)), params, m);
}

double inner_product_cdf_bound(double y, double sigma) {
    if (y < 0.0 || !(sigma > 0.0))
        throw ConfigError("inner_product_cdf_bound: requires y >= 0 and sigma > 0");
    return std::min(1.0, std::sqrt(2.0 / std::numbers::pi) * y / sigma);
}

double corner_bound_cdf(double y, double sigma, std::size_t n, double corner_magnitude) {
    if (y < 0.0 || !(sigma > 0.0) || !(corner_magnitude > 0.0))
        throw ConfigError("corner_bound_cdf: requires y >= 0, sigma > 0, corner > 0");
    return std::min(1.0, std::sqrt(2.0 * static_cast<double>(n) / std::numbers::pi) * y /
                             (sigma * corner_magnitude));
}

double hadamard_geometric_mean_bound(std::size_t k, double t) {
    if (k < 2 || !(t > 0.0))
        throw ConfigError("hadamard_geometric_mean_bound: requires k >= 2 and t > 0");
    const double kk = static_cast<double>(k);
    return std::pow(kk, 0.5 * (1.0 + 1.0 / (kk - 1.0))) * t;
}

double rank_one_deviation(const GaussianParams& params, std::size_t n, RandomStream& stream,
                          MatrixClass kind) {
    if (!(params.sigma > 0.0)) throw ConfigError("rank_one_deviation: requires sigma > 0");
    const SampleModel model{Distribution::Gaussian, params};
    Matrix m(0, 0);
    switch (kind) {
        case MatrixClass::General: m = sample_general(model, n, stream); break;
        case MatrixClass::Toeplitz: m = toeplitz_to_dense(sample_toeplitz(model, n, stream)); break;
        case MatrixClass::Circulant:
            m = f_circulant_to_dense(sample_circulant(model, n, stream));
            break;
        case MatrixClass::Hankel: m = hankel_to_dense(sample_hankel(model, n, stream)); break;
    }
    double sum = 0.0;
    for (double v : m.data()) {
        const double d = v - params.mu;
        sum += d * d;
    }
    return std::sqrt(sum) / params.sigma;
}

EmpiricalCdf::EmpiricalCdf(DenseVector values) : values_(std::move(values)) {
    if (values_.empty()) throw ConfigError("EmpiricalCdf: empty sample");
    std::sort(values_.begin(), values_.end());
}

double EmpiricalCdf::evaluate(double y) const { return sorted_fraction_at_most(values_, y); }

CdfComparison ks_distance(const EmpiricalCdf& emp, const std::function<double(double)>& analytic,
                          std::string label) {
    if (emp.count() < 100) throw ConfigError("ks_distance: requires at least 100 samples");
    const DenseVector& xs = emp.values();
    const double m = static_cast<double>(xs.size());
    double d = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double f = analytic(xs[i]);
        d = std::max(d, std::abs(f - static_cast<double>(i) / m));
        d = std::max(d, std::abs(static_cast<double>(i + 1) / m - f));
    }
    return CdfComparison{d, xs.size(), std::move(label), 0};
}

bool full_rank_check(const Matrix& a) {
    if (a.rows() != a.cols()) throw DimensionError("full_rank_check: matrix must be square");
    if (a.rows() == 0) return false;
    const double scale = matrix_norm(a, NormFamily::One);
    const LuFactors<double> lu = lu_factor(a);
    return lu.min_pivot > 1e-12 * scale;
}

}  // namespace structmat
