#include "structmat/random.hpp"

#include <cmath>
#include <numbers>

namespace structmat {

namespace {
constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
constexpr std::uint64_t kStreamSalt = 0x94d049bb133111ebULL;
}  // namespace

std::uint64_t RandomStream::mix(std::uint64_t x) {
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t k = mix(seed + kGolden);
    k = mix(k ^ (stream * kGolden + kStreamSalt));
    key_ = k;
}

std::uint64_t RandomStream::next_u64() { return mix(key_ + ++counter_ * kGolden); }

double RandomStream::next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RandomStream::next_uniform(double lo, double hi) {
    return lo + (hi - lo) * next_unit();
}

double RandomStream::next_gaussian() {
    if (has_cached_) {
        has_cached_ = false;
        return cached_;
    }
    const double u1 = 1.0 - next_unit();  // (0, 1]
    const double u2 = next_unit();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    cached_ = r * std::sin(angle);
    has_cached_ = true;
    return r * std::cos(angle);
}

double RandomStream::next_gaussian(const GaussianParams& params) {
    return params.mu + params.sigma * next_gaussian();
}

DenseVector sample_gaussian(const GaussianParams& params, std::size_t n, RandomStream& stream) {
    DenseVector v(n);
    for (double& x : v) x = stream.next_gaussian(params);
    return v;
}

DenseVector sample_uniform(double lo, double hi, std::size_t n, RandomStream& stream) {
    if (!(lo < hi)) throw ConfigError("sample_uniform: requires lo < hi");
    DenseVector v(n);
    for (double& x : v) x = stream.next_uniform(lo, hi);
    return v;
}

const char* matrix_class_name(MatrixClass c) {
    switch (c) {
        case MatrixClass::General: return "general";
        case MatrixClass::Toeplitz: return "toeplitz";
        case MatrixClass::Circulant: return "circulant";
        case MatrixClass::Hankel: return "hankel";
    }
    return "?";
}

double draw(const SampleModel& model, RandomStream& stream) {
    return model.dist == Distribution::UniformSym ? stream.next_uniform(-1.0, 1.0)
                                                  : stream.next_gaussian(model.gauss);
}

DenseVector draw_vector(const SampleModel& model, std::size_t n, RandomStream& stream) {
    DenseVector v(n);
    for (double& x : v) x = draw(model, stream);
    return v;
}

ComplexVector draw_complex_vector(const SampleModel& model, std::size_t n, RandomStream& stream) {
    ComplexVector v(n);
    for (Complex& x : v) {
        const double re = draw(model, stream);
        const double im = draw(model, stream);
        x = Complex(re, im);
    }
    return v;
}

Matrix sample_general(const SampleModel& model, std::size_t n, RandomStream& stream) {
    Matrix a(n, n);
    for (double& x : a.data()) x = draw(model, stream);
    return a;
}

ToeplitzSpec sample_toeplitz(const SampleModel& model, std::size_t n, RandomStream& stream) {
    return ToeplitzSpec{draw_vector(model, 2 * n - 1, stream)};
}

FCirculantSpec sample_circulant(const SampleModel& model, std::size_t n, RandomStream& stream) {
    return FCirculantSpec{draw_vector(model, n, stream), 1.0};
}

HankelSpec sample_hankel(const SampleModel& model, std::size_t n, RandomStream& stream) {
    return HankelSpec{draw_vector(model, 2 * n - 1, stream)};
}

ComplexMatrix sample_general_complex(const SampleModel& model, std::size_t n,
                                     RandomStream& stream) {
    ComplexMatrix a(n, n);
    for (Complex& x : a.data()) {
        const double re = draw(model, stream);
        const double im = draw(model, stream);
        x = Complex(re, im);
    }
    return a;
}

ComplexToeplitzSpec sample_toeplitz_complex(const SampleModel& model, std::size_t n,
                                            RandomStream& stream) {
    return ComplexToeplitzSpec{draw_complex_vector(model, 2 * n - 1, stream)};
}

ComplexFCirculantSpec sample_circulant_complex(const SampleModel& model, std::size_t n,
                                               RandomStream& stream) {
    return ComplexFCirculantSpec{draw_complex_vector(model, n, stream), 1.0};
}

}  // namespace structmat
