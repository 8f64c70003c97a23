#pragma once

// Complex transforms for arbitrary lengths: iterative radix-2 Cooley-Tukey
// for powers of two, Bluestein's chirp-z reduction otherwise.
//
// forward() applies Omega = (omega^{jk}) with omega = exp(+2 pi i / n);
// inverse() applies (1/n) Omega^H. Plans are immutable after construction
// and safe to share across threads.

#include <cstddef>

#include "structmat/types.hpp"

namespace structmat {

class FourierPlan {
  public:
    explicit FourierPlan(std::size_t n);

    std::size_t size() const noexcept { return n_; }

    void forward_inplace(ComplexVector& v) const;
    void inverse_inplace(ComplexVector& v) const;

    ComplexVector forward(ComplexVector v) const {
        forward_inplace(v);
        return v;
    }
    ComplexVector inverse(ComplexVector v) const {
        inverse_inplace(v);
        return v;
    }

  private:
    std::size_t n_;
    bool pow2_;
    ComplexVector twiddle_;     // exp(+2 pi i k / n), k < n/2 (radix-2 path)
    std::size_t m_ = 0;         // padded power-of-two length (Bluestein path)
    ComplexVector chirp_;       // exp(+pi i j^2 / n), j < n
    ComplexVector filter_fft_;  // length-m transform of the wrapped conjugate chirp
    ComplexVector twiddle_m_;   // exp(+2 pi i k / m), k < m/2

    void bluestein(ComplexVector& v) const;
};

// One-shot conveniences; build a plan for repeated transforms of one length.
ComplexVector dft(const ComplexVector& v);
ComplexVector dft(const DenseVector& v);
ComplexVector idft(const ComplexVector& v);

}  // namespace structmat
