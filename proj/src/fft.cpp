#include "structmat/fft.hpp"

#include <cmath>
#include <numbers>
#include <utility>

namespace structmat {

namespace {

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_pow2(std::size_t n) {
    std::size_t m = 1;
    while (m < n) m <<= 1;
    return m;
}

// In-place unnormalized transform y_k = sum_j v_j exp(+2 pi i j k / n).
// tw holds exp(+2 pi i k / n) for k < n/2.
void pow2_transform(Complex* d, std::size_t n, const ComplexVector& tw) {
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(d[i], d[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t half = len >> 1;
        const std::size_t step = n / len;
        for (std::size_t start = 0; start < n; start += len) {
            for (std::size_t k = 0; k < half; ++k) {
                const Complex w = tw[k * step];
                const Complex u = d[start + k];
                const Complex t = w * d[start + k + half];
                d[start + k] = u + t;
                d[start + k + half] = u - t;
            }
        }
    }
}

ComplexVector make_twiddles(std::size_t n) {
    ComplexVector tw(n / 2);
    for (std::size_t k = 0; k < tw.size(); ++k) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
        tw[k] = Complex(std::cos(angle), std::sin(angle));
    }
    return tw;
}

void conjugate(ComplexVector& v) {
    for (Complex& z : v) z = std::conj(z);
}

}  // namespace

FourierPlan::FourierPlan(std::size_t n) : n_(n), pow2_(is_pow2(n)) {
    if (n == 0) throw DimensionError("FourierPlan: length must be positive");
    if (pow2_) {
        twiddle_ = make_twiddles(n);
        return;
    }
    m_ = next_pow2(2 * n - 1);
    twiddle_m_ = make_twiddles(m_);
    chirp_.resize(n);
    const std::uint64_t two_n = 2 * static_cast<std::uint64_t>(n);
    for (std::size_t j = 0; j < n; ++j) {
        // j^2 reduced mod 2n keeps the chirp angle accurate for large lengths
        const std::uint64_t r = (static_cast<std::uint64_t>(j) * j) % two_n;
        const double angle = std::numbers::pi * static_cast<double>(r) / static_cast<double>(n);
        chirp_[j] = Complex(std::cos(angle), std::sin(angle));
    }
    filter_fft_.assign(m_, Complex{});
    for (std::size_t j = 0; j < n; ++j) {
        const Complex c = std::conj(chirp_[j]);
        filter_fft_[j] = c;
        if (j > 0) filter_fft_[m_ - j] = c;
    }
    pow2_transform(filter_fft_.data(), m_, twiddle_m_);
}

void FourierPlan::bluestein(ComplexVector& v) const {
    ComplexVector a(m_, Complex{});
    for (std::size_t j = 0; j < n_; ++j) a[j] = v[j] * chirp_[j];
    pow2_transform(a.data(), m_, twiddle_m_);
    for (std::size_t j = 0; j < m_; ++j) a[j] *= filter_fft_[j];
    // inverse length-m transform via conjugation
    conjugate(a);
    pow2_transform(a.data(), m_, twiddle_m_);
    const double scale = 1.0 / static_cast<double>(m_);
    for (std::size_t k = 0; k < n_; ++k) v[k] = std::conj(a[k]) * scale * chirp_[k];
}

void FourierPlan::forward_inplace(ComplexVector& v) const {
    if (v.size() != n_) throw DimensionError("FourierPlan: length mismatch");
    if (n_ == 1) return;
    if (pow2_) {
        pow2_transform(v.data(), n_, twiddle_);
    } else {
        bluestein(v);
    }
}

void FourierPlan::inverse_inplace(ComplexVector& v) const {
    conjugate(v);
    forward_inplace(v);
    const double scale = 1.0 / static_cast<double>(n_);
    for (Complex& z : v) z = std::conj(z) * scale;
}

ComplexVector dft(const ComplexVector& v) { return FourierPlan(v.size()).forward(v); }

ComplexVector dft(const DenseVector& v) {
    ComplexVector c(v.begin(), v.end());
    return FourierPlan(c.size()).forward(std::move(c));
}

ComplexVector idft(const ComplexVector& v) { return FourierPlan(v.size()).inverse(v); }

}  // namespace structmat
