#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace structmat {

inline constexpr const char* kVersion = "1.0.0";

using DenseVector = std::vector<double>;
using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ZeroFactor : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct SingularCirculant : std::runtime_error {
    double min_eigenvalue_magnitude;
    SingularCirculant(const std::string& what, double min_mag)
        : std::runtime_error(what), min_eigenvalue_magnitude(min_mag) {}
};

struct SingularToeplitz : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroPivot : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PowerIterationStall : std::runtime_error {
    double lower;
    double upper;
    PowerIterationStall(const std::string& what, double lo, double hi)
        : std::runtime_error(what), lower(lo), upper(hi) {}
};

struct SingularSample : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace structmat
