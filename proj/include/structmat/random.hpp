#pragma once

// Counter-based deterministic random streams and the matrix ensembles used
// by the experiments. Identical (seed, stream) pairs reproduce identical
// draw sequences regardless of worker scheduling.

#include <cstdint>

#include "structmat/dense.hpp"
#include "structmat/structured.hpp"
#include "structmat/types.hpp"

namespace structmat {

struct GaussianParams {
    double mu = 0.0;
    double sigma = 1.0;
};

class RandomStream {
  public:
    explicit RandomStream(std::uint64_t seed, std::uint64_t stream = 0);

    std::uint64_t next_u64();
    double next_unit();  // [0, 1), 53-bit resolution
    double next_uniform(double lo, double hi);
    double next_gaussian();  // standard normal, Box-Muller
    double next_gaussian(const GaussianParams& params);

    static std::uint64_t mix(std::uint64_t x);

  private:
    std::uint64_t key_ = 0;
    std::uint64_t counter_ = 0;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

DenseVector sample_gaussian(const GaussianParams& params, std::size_t n, RandomStream& stream);
DenseVector sample_uniform(double lo, double hi, std::size_t n, RandomStream& stream);

enum class MatrixClass { General, Toeplitz, Circulant, Hankel };
enum class Distribution { UniformSym, Gaussian };

const char* matrix_class_name(MatrixClass c);

// UniformSym draws entries uniformly from [-1, 1); Gaussian uses params.
struct SampleModel {
    Distribution dist = Distribution::UniformSym;
    GaussianParams gauss;
};

double draw(const SampleModel& model, RandomStream& stream);
DenseVector draw_vector(const SampleModel& model, std::size_t n, RandomStream& stream);
ComplexVector draw_complex_vector(const SampleModel& model, std::size_t n, RandomStream& stream);

Matrix sample_general(const SampleModel& model, std::size_t n, RandomStream& stream);
ToeplitzSpec sample_toeplitz(const SampleModel& model, std::size_t n, RandomStream& stream);
FCirculantSpec sample_circulant(const SampleModel& model, std::size_t n, RandomStream& stream);
HankelSpec sample_hankel(const SampleModel& model, std::size_t n, RandomStream& stream);

ComplexMatrix sample_general_complex(const SampleModel& model, std::size_t n, RandomStream& stream);
ComplexToeplitzSpec sample_toeplitz_complex(const SampleModel& model, std::size_t n,
                                            RandomStream& stream);
ComplexFCirculantSpec sample_circulant_complex(const SampleModel& model, std::size_t n,
                                               RandomStream& stream);

}  // namespace structmat
