#include "structmat/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <mutex>
#include <thread>

#include "json.hpp"
#include "structmat/fft.hpp"
#include "structmat/spectral.hpp"
#include "structmat/structured.hpp"

namespace structmat {

namespace {

constexpr std::size_t kMaxResampleAttempts = 64;
constexpr std::size_t kDenseOneNormOnlyAbove = 2048;

// Suite tags keep every trial substream distinct across experiments.
enum SuiteTag : std::uint64_t {
    kSuiteCondition = 1,
    kSuiteRatios = 2,
    kSuiteInverseIidU = 3,
    kSuiteInverseRealT = 4,
    kSuiteToeplitzNorm = 5,
    kSuiteCirculantNorm = 6,
    kSuiteInnerFirst = 7,
    kSuiteInnerOnes = 8,
};

std::uint64_t substream_id(SuiteTag suite, std::size_t size_index, std::size_t attempt,
                           std::size_t trial) {
    return (static_cast<std::uint64_t>(suite) << 56) |
           ((static_cast<std::uint64_t>(size_index) & 0xff) << 48) |
           ((static_cast<std::uint64_t>(attempt) & 0xff) << 40) |
           (static_cast<std::uint64_t>(trial) & 0xffffffffffULL);
}

// Runs body(trial) for every trial; results must be written to per-trial
// slots so worker count cannot affect any output.
template <typename Body>
void parallel_trials(std::size_t count, unsigned workers, const Body& body) {
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto run = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };
    const unsigned thread_count = static_cast<unsigned>(
        std::min<std::size_t>(workers, count));
    std::vector<std::thread> pool;
    pool.reserve(thread_count);
    for (unsigned t = 0; t < thread_count; ++t) pool.emplace_back(run);
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

void validate_config(const ExperimentConfig& config) {
    if (config.sizes.empty()) throw ConfigError("experiment: sizes must be nonempty");
    if (config.trials_per_size == 0) throw ConfigError("experiment: trials must be >= 1");
    for (std::size_t n : config.sizes) {
        if (n == 0) throw ConfigError("experiment: sizes must be >= 1");
        if (config.matrix_class != MatrixClass::Circulant) {
            if (n > kMaxDenseOrder)
                throw ConfigError("experiment: dense classes support sizes up to 4096");
            if (n > kDenseOneNormOnlyAbove && config.norm_family != NormFamily::One)
                throw ConfigError(
                    "experiment: dense sizes above 2048 support the 1-norm path only");
        }
    }
    if (config.complex_entries && config.matrix_class == MatrixClass::Hankel)
        throw ConfigError("experiment: complex Hankel sampling is not supported");
}

struct TrialStats {
    double min = 0.0;
    double mean = 0.0;
    double max = 0.0;
    double stddev = 0.0;
};

TrialStats summarize(const DenseVector& values) {
    TrialStats s;
    s.min = values.front();
    s.max = values.front();
    double sum = 0.0;
    for (double v : values) {
        s.min = std::min(s.min, v);
        s.max = std::max(s.max, v);
        sum += v;
    }
    const double m = static_cast<double>(values.size());
    s.mean = sum / m;
    double sq = 0.0;
    for (double v : values) sq += (v - s.mean) * (v - s.mean);
    s.stddev = std::sqrt(sq / m);
    return s;
}

template <typename M>
double dense_norm(const M& a, NormFamily family) {
    if (family == NormFamily::Two) return spectral_norm_estimate(a).value;
    return matrix_norm(a, family);
}

double abs_sum(const ComplexVector& v) {
    double s = 0.0;
    for (const Complex& z : v) s += std::abs(z);
    return s;
}

double abs_max(const ComplexVector& v) {
    double s = 0.0;
    for (const Complex& z : v) s = std::max(s, std::abs(z));
    return s;
}

double abs_min(const ComplexVector& v) {
    double s = std::abs(v.front());
    for (const Complex& z : v) s = std::min(s, std::abs(z));
    return s;
}

double two_norm(const ComplexVector& v) {
    double s = 0.0;
    for (const Complex& z : v) s += std::norm(z);
    return std::sqrt(s);
}

ComplexVector reciprocal(const ComplexVector& v) {
    ComplexVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = 1.0 / v[i];
    return r;
}

// Circulant norms never need the dense matrix: the 1- and infinity-norms
// equal the entrywise 1-norm of the generating vector, the Frobenius norm
// equals the eigenvalue 2-norm, and the spectral norm is max |u_i|.
struct CirculantTrial {
    double norm = 0.0;
    double inverse_norm = 0.0;
    bool singular = false;
};

template <typename Spec>
CirculantTrial circulant_condition_trial(const Spec& spec, const FourierPlan& plan,
                                         NormFamily family) {
    CirculantTrial out;
    const SpectralDiagonal diag = circulant_eigenvalues(spec, plan);
    const ComplexVector& u = diag.eigenvalues;
    if (!(abs_min(u) > singular_tolerance(u))) {
        out.singular = true;
        return out;
    }
    switch (family) {
        case NormFamily::Two:
            out.norm = abs_max(u);
            out.inverse_norm = 1.0 / abs_min(u);
            break;
        case NormFamily::Frobenius:
            out.norm = two_norm(u);
            out.inverse_norm = two_norm(reciprocal(u));
            break;
        case NormFamily::One:
        case NormFamily::Infinity: {
            double s = 0.0;
            for (const auto& t : spec.first_column) s += std::abs(t);
            out.norm = s;
            out.inverse_norm = abs_sum(plan.inverse(reciprocal(u)));
            break;
        }
    }
    return out;
}

struct DenseTrial {
    double norm = 0.0;
    double inverse_norm = 0.0;
    double frobenius = 0.0;
    double inverse_frobenius = 0.0;
    double one = 0.0;
    double inverse_one = 0.0;
    bool singular = false;
};

template <typename M>
DenseTrial dense_trial(const M& a, NormFamily family, bool ratios) {
    DenseTrial out;
    const auto lu = lu_factor(a);
    if (!(lu.min_pivot > 1e-12 * matrix_norm(a, NormFamily::One))) {
        out.singular = true;
        return out;
    }
    const M inv = lu_inverse(lu);
    if (ratios) {
        out.one = matrix_norm(a, NormFamily::One);
        out.frobenius = matrix_norm(a, NormFamily::Frobenius);
        out.inverse_one = matrix_norm(inv, NormFamily::One);
        out.inverse_frobenius = matrix_norm(inv, NormFamily::Frobenius);
    } else {
        out.norm = dense_norm(a, family);
        out.inverse_norm = dense_norm(inv, family);
    }
    return out;
}

Matrix sample_dense_matrix(MatrixClass cls, const SampleModel& model, std::size_t n,
                           RandomStream& stream) {
    switch (cls) {
        case MatrixClass::General: return sample_general(model, n, stream);
        case MatrixClass::Toeplitz: return toeplitz_to_dense(sample_toeplitz(model, n, stream));
        case MatrixClass::Hankel: return hankel_to_dense(sample_hankel(model, n, stream));
        case MatrixClass::Circulant: break;
    }
    throw ConfigError("sample_dense_matrix: circulant handled separately");
}

ComplexMatrix sample_dense_complex(MatrixClass cls, const SampleModel& model, std::size_t n,
                                   RandomStream& stream) {
    switch (cls) {
        case MatrixClass::General: return sample_general_complex(model, n, stream);
        case MatrixClass::Toeplitz:
            return toeplitz_to_dense(sample_toeplitz_complex(model, n, stream));
        default: break;
    }
    throw ConfigError("sample_dense_complex: unsupported class");
}

struct RatioTrial {
    double norm1 = 0.0;
    double norm2 = 0.0;
    double inverse_norm1 = 0.0;
    double inverse_norm2 = 0.0;
};

// Shared driver: per trial, resample until the draw is nonsingular, then
// store the measurement; the attempt index feeds the substream so results
// are independent of scheduling.
template <typename TrialFn>
std::size_t run_trials(const ExperimentConfig& config, SuiteTag suite, std::size_t size_index,
                       std::size_t count, const TrialFn& trial_fn) {
    std::vector<std::size_t> resamples(count, 0);
    parallel_trials(count, config.workers, [&](std::size_t trial) {
        for (std::size_t attempt = 0;; ++attempt) {
            if (attempt >= kMaxResampleAttempts)
                throw SingularSample("experiment: resampling limit reached");
            RandomStream stream(config.seed,
                                substream_id(suite, size_index, attempt, trial));
            if (trial_fn(trial, stream)) {
                resamples[trial] = attempt;
                break;
            }
        }
    });
    std::size_t total = 0;
    for (std::size_t r : resamples) total += r;
    return total;
}

}  // namespace

std::vector<StatsSummary> run_condition_experiment(const ExperimentConfig& config) {
    validate_config(config);
    std::vector<StatsSummary> out;
    const std::string metric = std::string("kappa_") + norm_family_name(config.norm_family);
    for (std::size_t s = 0; s < config.sizes.size(); ++s) {
        const std::size_t n = config.sizes[s];
        DenseVector kappa(config.trials_per_size);
        std::size_t resampled = 0;
        if (config.matrix_class == MatrixClass::Circulant) {
            const FourierPlan plan(n);
            resampled = run_trials(
                config, kSuiteCondition, s, kappa.size(),
                [&](std::size_t trial, RandomStream& stream) {
                    CirculantTrial t;
                    if (config.complex_entries)
                        t = circulant_condition_trial(
                            sample_circulant_complex(config.model, n, stream), plan,
                            config.norm_family);
                    else
                        t = circulant_condition_trial(sample_circulant(config.model, n, stream),
                                                      plan, config.norm_family);
                    if (t.singular) return false;
                    kappa[trial] = t.norm * t.inverse_norm;
                    return true;
                });
        } else {
            resampled = run_trials(
                config, kSuiteCondition, s, kappa.size(),
                [&](std::size_t trial, RandomStream& stream) {
                    DenseTrial t;
                    if (config.complex_entries)
                        t = dense_trial(
                            sample_dense_complex(config.matrix_class, config.model, n, stream),
                            config.norm_family, false);
                    else
                        t = dense_trial(
                            sample_dense_matrix(config.matrix_class, config.model, n, stream),
                            config.norm_family, false);
                    if (t.singular) return false;
                    kappa[trial] = t.norm * t.inverse_norm;
                    return true;
                });
        }
        const TrialStats stats = summarize(kappa);
        out.push_back(StatsSummary{n, matrix_class_name(config.matrix_class), metric, stats.min,
                                   stats.mean, stats.max, stats.stddev, kappa.size(), resampled});
    }
    return out;
}

std::vector<RatioRecord> run_norm_ratio_experiment(const ExperimentConfig& config) {
    validate_config(config);
    std::vector<RatioRecord> out;
    for (std::size_t s = 0; s < config.sizes.size(); ++s) {
        const std::size_t n = config.sizes[s];
        std::vector<RatioTrial> trials(config.trials_per_size);
        std::size_t resampled = 0;
        if (config.matrix_class == MatrixClass::Circulant) {
            const FourierPlan plan(n);
            resampled = run_trials(
                config, kSuiteRatios, s, trials.size(),
                [&](std::size_t trial, RandomStream& stream) {
                    ComplexVector u;
                    double norm1 = 0.0;
                    if (config.complex_entries) {
                        const auto spec = sample_circulant_complex(config.model, n, stream);
                        u = circulant_eigenvalues(spec, plan).eigenvalues;
                        norm1 = abs_sum(spec.first_column);
                    } else {
                        const auto spec = sample_circulant(config.model, n, stream);
                        u = circulant_eigenvalues(spec, plan).eigenvalues;
                        for (double t : spec.first_column) norm1 += std::abs(t);
                    }
                    if (!(abs_min(u) > singular_tolerance(u))) return false;
                    const ComplexVector w = reciprocal(u);
                    trials[trial] = RatioTrial{norm1, two_norm(u),
                                               abs_sum(plan.inverse(w)), two_norm(w)};
                    return true;
                });
        } else {
            resampled = run_trials(
                config, kSuiteRatios, s, trials.size(),
                [&](std::size_t trial, RandomStream& stream) {
                    DenseTrial t;
                    if (config.complex_entries)
                        t = dense_trial(
                            sample_dense_complex(config.matrix_class, config.model, n, stream),
                            config.norm_family, true);
                    else
                        t = dense_trial(
                            sample_dense_matrix(config.matrix_class, config.model, n, stream),
                            config.norm_family, true);
                    if (t.singular) return false;
                    trials[trial] =
                        RatioTrial{t.one, t.frobenius, t.inverse_one, t.inverse_frobenius};
                    return true;
                });
        }
        RatioRecord rec;
        rec.n = n;
        rec.matrix_class = matrix_class_name(config.matrix_class);
        rec.trials = trials.size();
        rec.resampled = resampled;
        const double m = static_cast<double>(trials.size());
        for (const RatioTrial& t : trials) {
            rec.mean_norm1 += t.norm1 / m;
            rec.mean_norm2 += t.norm2 / m;
            rec.mean_ratio += t.norm1 / t.norm2 / m;
            rec.mean_inverse_norm1 += t.inverse_norm1 / m;
            rec.mean_inverse_norm2 += t.inverse_norm2 / m;
            rec.mean_inverse_ratio += t.inverse_norm1 / t.inverse_norm2 / m;
        }
        out.push_back(rec);
    }
    return out;
}

namespace {

// O(n) Toeplitz norms straight from the diagonal vector: every row and
// column absolute sum is a length-n window sum over |d|, and entry d_k
// appears n - |k - (n-1)| times.
double toeplitz_window_norm(const DenseVector& d, std::size_t n) {
    DenseVector prefix(d.size() + 1, 0.0);
    for (std::size_t i = 0; i < d.size(); ++i) prefix[i + 1] = prefix[i] + std::abs(d[i]);
    double best = 0.0;
    for (std::size_t s = 0; s < n; ++s) best = std::max(best, prefix[s + n] - prefix[s]);
    return best;
}

double toeplitz_frobenius_from_diagonals(const DenseVector& d, std::size_t n) {
    double sum = 0.0;
    for (std::size_t k = 0; k < d.size(); ++k) {
        const double mult = static_cast<double>(n) -
                            std::abs(static_cast<double>(k) - static_cast<double>(n - 1));
        sum += mult * d[k] * d[k];
    }
    return std::sqrt(sum);
}

struct DominanceGrid {
    double max_gap = 0.0;
    std::size_t violations = 0;
};

// Lower-bound check: analytic(y) must not exceed the empirical CDF by more
// than 3 Monte Carlo standard errors at any of 50 grid points.
DominanceGrid check_lower_dominance(const EmpiricalCdf& emp,
                                    const std::function<double(double)>& bound) {
    DominanceGrid grid;
    const double top = emp.values().back();
    const double m = static_cast<double>(emp.count());
    for (int g = 1; g <= 50; ++g) {
        const double y = top * static_cast<double>(g) / 50.0;
        const double b = bound(y);
        const double f = emp.evaluate(y);
        const double se = std::sqrt(std::max(b * (1.0 - b), 0.0) / m);
        grid.max_gap = std::max(grid.max_gap, b - f);
        if (b - f > 3.0 * se) ++grid.violations;
    }
    return grid;
}

// Upper-bound check, same slack convention.
DominanceGrid check_upper_dominance(const EmpiricalCdf& emp,
                                    const std::function<double(double)>& bound) {
    DominanceGrid grid;
    const double top = emp.values().back();
    const double m = static_cast<double>(emp.count());
    for (int g = 1; g <= 50; ++g) {
        const double y = top * static_cast<double>(g) / 50.0;
        const double b = bound(y);
        const double f = emp.evaluate(y);
        const double se = std::sqrt(std::max(b * (1.0 - b), 0.0) / m);
        grid.max_gap = std::max(grid.max_gap, f - b);
        if (f - b > 3.0 * se) ++grid.violations;
    }
    return grid;
}

CdfComparison dominance_record(const DominanceGrid& grid, std::size_t samples,
                               std::string label) {
    return CdfComparison{std::max(grid.max_gap, 0.0), samples, std::move(label),
                         grid.violations};
}

}  // namespace

std::vector<CdfComparison> run_cdf_validation(const ExperimentConfig& config) {
    validate_config(config);
    if (config.model.dist != Distribution::Gaussian)
        throw ConfigError("cdf validation: analytic CDFs require the Gaussian model");
    const GaussianParams params = config.model.gauss;
    const std::size_t m = config.trials_per_size;
    std::vector<CdfComparison> out;

    for (std::size_t s = 0; s < config.sizes.size(); ++s) {
        const std::size_t n = config.sizes[s];
        const FourierPlan plan(n);
        const std::string suffix = "_n" + std::to_string(n);

        // Inverse-norm law on the model it is stated for: eigenvalues drawn
        // as i.i.d. real Gaussians, statistic 1 / min |u_i|.
        DenseVector iid_u(m);
        parallel_trials(m, config.workers, [&](std::size_t trial) {
            RandomStream stream(config.seed, substream_id(kSuiteInverseIidU, s, 0, trial));
            double lo = std::abs(stream.next_gaussian(params));
            for (std::size_t i = 1; i < n; ++i)
                lo = std::min(lo, std::abs(stream.next_gaussian(params)));
            iid_u[trial] = 1.0 / lo;
        });
        auto survival = [&](double z) { return 1.0 - circulant_inverse_cdf(z, params, n); };
        out.push_back(
            ks_distance(EmpiricalCdf(std::move(iid_u)), survival, "inverse_norm_iid_u" + suffix));

        // Observational rerun with a real generating vector (complex,
        // conjugate-symmetric eigenvalues); reported, not an exact law.
        DenseVector real_t(m);
        parallel_trials(m, config.workers, [&](std::size_t trial) {
            RandomStream stream(config.seed, substream_id(kSuiteInverseRealT, s, 0, trial));
            const DenseVector t = sample_gaussian(params, n, stream);
            ComplexVector u(t.begin(), t.end());
            plan.forward_inplace(u);
            real_t[trial] = 1.0 / abs_min(u);
        });
        out.push_back(ks_distance(EmpiricalCdf(std::move(real_t)), survival,
                                  "inverse_norm_real_t" + suffix));

        // Norm-CDF lower bound for the Toeplitz ensemble, h in {1, inf, F}.
        DenseVector toep_one(m), toep_fro(m);
        parallel_trials(m, config.workers, [&](std::size_t trial) {
            RandomStream stream(config.seed, substream_id(kSuiteToeplitzNorm, s, 0, trial));
            const DenseVector d = sample_gaussian(params, 2 * n - 1, stream);
            toep_one[trial] = toeplitz_window_norm(d, n);
            toep_fro[trial] = toeplitz_frobenius_from_diagonals(d, n);
        });
        auto toep_bound = [&](double y) {
            return norm_cdf_lower_bound(y, params, n, EnsembleKind::Toeplitz);
        };
        const EmpiricalCdf toep_one_cdf(std::move(toep_one));
        const EmpiricalCdf toep_fro_cdf(std::move(toep_fro));
        out.push_back(dominance_record(check_lower_dominance(toep_one_cdf, toep_bound), m,
                                       "norm_bound_toeplitz_h1" + suffix));
        out.push_back(dominance_record(check_lower_dominance(toep_one_cdf, toep_bound), m,
                                       "norm_bound_toeplitz_hinf" + suffix));
        out.push_back(dominance_record(check_lower_dominance(toep_fro_cdf, toep_bound), m,
                                       "norm_bound_toeplitz_hfro" + suffix));

        // Same for the circulant ensemble, h in {1, 2, inf, F}.
        DenseVector circ_one(m), circ_two(m), circ_fro(m);
        parallel_trials(m, config.workers, [&](std::size_t trial) {
            RandomStream stream(config.seed, substream_id(kSuiteCirculantNorm, s, 0, trial));
            const DenseVector t = sample_gaussian(params, n, stream);
            double one = 0.0, sq = 0.0;
            for (double v : t) {
                one += std::abs(v);
                sq += v * v;
            }
            circ_one[trial] = one;
            circ_fro[trial] = std::sqrt(static_cast<double>(n) * sq);
            ComplexVector u(t.begin(), t.end());
            plan.forward_inplace(u);
            circ_two[trial] = abs_max(u);
        });
        auto circ_bound = [&](double y) {
            return norm_cdf_lower_bound(y, params, n, EnsembleKind::Circulant);
        };
        const EmpiricalCdf circ_one_cdf(std::move(circ_one));
        const EmpiricalCdf circ_two_cdf(std::move(circ_two));
        const EmpiricalCdf circ_fro_cdf(std::move(circ_fro));
        out.push_back(dominance_record(check_lower_dominance(circ_one_cdf, circ_bound), m,
                                       "norm_bound_circulant_h1" + suffix));
        out.push_back(dominance_record(check_lower_dominance(circ_two_cdf, circ_bound), m,
                                       "norm_bound_circulant_h2" + suffix));
        out.push_back(dominance_record(check_lower_dominance(circ_one_cdf, circ_bound), m,
                                       "norm_bound_circulant_hinf" + suffix));
        out.push_back(dominance_record(check_lower_dominance(circ_fro_cdf, circ_bound), m,
                                       "norm_bound_circulant_hfro" + suffix));

        // Inner-product upper bound for t = e_1 and t = ones/sqrt(n).
        DenseVector inner_first(m), inner_ones(m);
        parallel_trials(m, config.workers, [&](std::size_t trial) {
            RandomStream first_stream(config.seed, substream_id(kSuiteInnerFirst, s, 0, trial));
            inner_first[trial] = std::abs(first_stream.next_gaussian(params));
            RandomStream ones_stream(config.seed, substream_id(kSuiteInnerOnes, s, 0, trial));
            double dot = 0.0;
            for (std::size_t i = 0; i < n; ++i) dot += ones_stream.next_gaussian(params);
            inner_ones[trial] = std::abs(dot) / std::sqrt(static_cast<double>(n));
        });
        auto inner_bound = [&](double y) { return inner_product_cdf_bound(y, params.sigma); };
        out.push_back(dominance_record(
            check_upper_dominance(EmpiricalCdf(std::move(inner_first)), inner_bound), m,
            "inner_product_e1" + suffix));
        out.push_back(dominance_record(
            check_upper_dominance(EmpiricalCdf(std::move(inner_ones)), inner_bound), m,
            "inner_product_ones" + suffix));
    }
    return out;
}

namespace {

void hash_bytes(std::uint64_t& h, const std::string& s) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
}

std::string double_key(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

std::uint64_t config_hash(const ExperimentConfig& config) {
    std::uint64_t h = 14695981039346656037ULL;
    hash_bytes(h, std::string("class=") + matrix_class_name(config.matrix_class));
    std::string sizes = ";sizes=";
    for (std::size_t n : config.sizes) sizes += std::to_string(n) + ",";
    hash_bytes(h, sizes);
    hash_bytes(h, ";trials=" + std::to_string(config.trials_per_size));
    hash_bytes(h, std::string(";dist=") +
                      (config.model.dist == Distribution::Gaussian ? "gaussian" : "uniform"));
    hash_bytes(h, ";mu=" + double_key(config.model.gauss.mu));
    hash_bytes(h, ";sigma=" + double_key(config.model.gauss.sigma));
    hash_bytes(h, std::string(";norm=") + norm_family_name(config.norm_family));
    hash_bytes(h, std::string(";complex=") + (config.complex_entries ? "1" : "0"));
    return h;
}

std::string format_scientific(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.1e", value);
    const std::string printed(buf);
    const std::size_t e = printed.find('e');
    const std::string mantissa = printed.substr(0, e);
    const int exponent = std::stoi(printed.substr(e + 1));
    return mantissa + "e" + std::to_string(exponent);
}

namespace {

std::string metadata_line(const ExperimentConfig& config) {
    char hex[20];
    std::snprintf(hex, sizeof hex, "%016llx",
                  static_cast<unsigned long long>(config_hash(config)));
    return "# seed=" + std::to_string(config.seed) + " config=" + hex + " version=" + kVersion;
}

nlohmann::json metadata_object(const ExperimentConfig& config) {
    char hex[20];
    std::snprintf(hex, sizeof hex, "%016llx",
                  static_cast<unsigned long long>(config_hash(config)));
    return nlohmann::json{{"seed", config.seed}, {"config", hex}, {"version", kVersion}};
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw IoError("cannot open output file: " + path);
    file << text;
    if (!file) throw IoError("failed writing output file: " + path);
}

nlohmann::json to_json(const StatsSummary& r) {
    return nlohmann::json{{"n", r.n},         {"class", r.matrix_class},
                          {"metric", r.metric}, {"min", r.min},
                          {"mean", r.mean},   {"max", r.max},
                          {"std", r.stddev},  {"trials", r.trials},
                          {"resampled", r.resampled}};
}

nlohmann::json to_json(const RatioRecord& r) {
    return nlohmann::json{{"n", r.n},
                          {"class", r.matrix_class},
                          {"norm1", r.mean_norm1},
                          {"norm2", r.mean_norm2},
                          {"ratio", r.mean_ratio},
                          {"inv_norm1", r.mean_inverse_norm1},
                          {"inv_norm2", r.mean_inverse_norm2},
                          {"inv_ratio", r.mean_inverse_ratio},
                          {"trials", r.trials},
                          {"resampled", r.resampled}};
}

nlohmann::json to_json(const CdfComparison& r) {
    return nlohmann::json{{"label", r.analytic_label},
                          {"samples", r.sample_count},
                          {"ks_distance", r.ks_distance},
                          {"violations", r.dominance_violations}};
}

std::string csv_row(const StatsSummary& r) {
    return std::to_string(r.n) + "," + r.matrix_class + "," + r.metric + "," +
           format_scientific(r.min) + "," + format_scientific(r.mean) + "," +
           format_scientific(r.max) + "," + format_scientific(r.stddev) + "," +
           std::to_string(r.trials) + "," + std::to_string(r.resampled);
}

std::string csv_row(const RatioRecord& r) {
    return std::to_string(r.n) + "," + r.matrix_class + "," + format_scientific(r.mean_norm1) +
           "," + format_scientific(r.mean_norm2) + "," + format_scientific(r.mean_ratio) + "," +
           format_scientific(r.mean_inverse_norm1) + "," +
           format_scientific(r.mean_inverse_norm2) + "," +
           format_scientific(r.mean_inverse_ratio) + "," + std::to_string(r.trials) + "," +
           std::to_string(r.resampled);
}

std::string csv_row(const CdfComparison& r) {
    return r.analytic_label + "," + std::to_string(r.sample_count) + "," +
           format_scientific(r.ks_distance) + "," + std::to_string(r.dominance_violations);
}

template <typename Record>
void emit_records(const std::vector<Record>& records, const ExperimentConfig& config,
                  const std::string& path, const char* header) {
    if (config.format == OutputFormat::Json) {
        nlohmann::json doc;
        doc["records"] = nlohmann::json::array();
        for (const Record& r : records) doc["records"].push_back(to_json(r));
        doc["meta"] = metadata_object(config);
        write_text(path, doc.dump(2) + "\n");
        return;
    }
    std::string text(header);
    text += "\n";
    for (const Record& r : records) text += csv_row(r) + "\n";
    text += metadata_line(config) + "\n";
    write_text(path, text);
}

}  // namespace

void emit_report(const std::vector<StatsSummary>& records, const ExperimentConfig& config,
                 const std::string& path) {
    emit_records(records, config, path, "n,class,metric,min,mean,max,std,trials,resampled");
}

void emit_report(const std::vector<RatioRecord>& records, const ExperimentConfig& config,
                 const std::string& path) {
    emit_records(records, config, path,
                 "n,class,norm1,norm2,ratio,inv_norm1,inv_norm2,inv_ratio,trials,resampled");
}

void emit_report(const std::vector<CdfComparison>& records, const ExperimentConfig& config,
                 const std::string& path) {
    emit_records(records, config, path, "label,samples,ks_distance,violations");
}

}  // namespace structmat
