#pragma once

// Monte Carlo harness: condition-number and norm-ratio tables over random
// structured matrices, the CDF validation suites, and CSV/JSON reporting.

#include <cstdint>
#include <string>
#include <vector>

#include "structmat/norms.hpp"
#include "structmat/random.hpp"
#include "structmat/stats.hpp"

namespace structmat {

enum class OutputFormat { Csv, Json };

struct ExperimentConfig {
    MatrixClass matrix_class = MatrixClass::General;
    std::vector<std::size_t> sizes;
    std::size_t trials_per_size = 100;
    SampleModel model;
    NormFamily norm_family = NormFamily::Two;
    std::uint64_t seed = 0;
    OutputFormat format = OutputFormat::Csv;
    unsigned workers = 1;
    bool complex_entries = false;
};

struct StatsSummary {
    std::size_t n = 0;
    std::string matrix_class;
    std::string metric;
    double min = 0.0;
    double mean = 0.0;
    double max = 0.0;
    double stddev = 0.0;  // population formula, divisor = trials
    std::size_t trials = 0;
    std::size_t resampled = 0;
};

struct RatioRecord {
    std::size_t n = 0;
    std::string matrix_class;
    double mean_norm1 = 0.0;
    double mean_norm2 = 0.0;
    double mean_ratio = 0.0;
    double mean_inverse_norm1 = 0.0;
    double mean_inverse_norm2 = 0.0;
    double mean_inverse_ratio = 0.0;
    std::size_t trials = 0;
    std::size_t resampled = 0;
};

// kappa = ||A||_h ||A^-1||_h per size and trial; inverses via dense LU for
// general/Toeplitz/Hankel and via eigenvalue reciprocals for circulant.
// Singular draws are resampled and counted. Dense classes above order 2048
// support the 1-norm path only.
std::vector<StatsSummary> run_condition_experiment(const ExperimentConfig& config);

// Mean 1-norms, root-sum-square norms (the "norm2" column of the classical
// tables this reproduces uses that scaling), and their ratios, for the
// matrix and its inverse.
std::vector<RatioRecord> run_norm_ratio_experiment(const ExperimentConfig& config);

// Inverse-norm KS tests (exact i.i.d.-eigenvalue model plus an observational
// real-input run), norm-CDF dominance grids for Toeplitz and circulant
// ensembles, and inner-product bound grids. Gaussian model required.
std::vector<CdfComparison> run_cdf_validation(const ExperimentConfig& config);

// FNV-1a over the sampling-relevant fields; worker count and output options
// are excluded so reruns at different parallelism hash identically.
std::uint64_t config_hash(const ExperimentConfig& config);

// Two significant digits in compact scientific form, e.g. "1.1e2", "8.7e-1".
std::string format_scientific(double value);

// CSV (header row, LF endings, two-significant-digit scientific values) or
// JSON (exact values); ends with a metadata line/object carrying the seed,
// config hash, and library version. Empty path writes to stdout.
void emit_report(const std::vector<StatsSummary>& records, const ExperimentConfig& config,
                 const std::string& path);
void emit_report(const std::vector<RatioRecord>& records, const ExperimentConfig& config,
                 const std::string& path);
void emit_report(const std::vector<CdfComparison>& records, const ExperimentConfig& config,
                 const std::string& path);

}  // namespace structmat
