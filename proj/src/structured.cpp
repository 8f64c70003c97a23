#include "structmat/structured.hpp"

#include <cmath>

namespace structmat {

double persymmetry_residual(const ToeplitzSpec& t) {
    const std::size_t n = toeplitz_order(t);
    check_dense_order(n);
    const Matrix a = toeplitz_to_dense(t);
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            // (J T J)(i, j) = T(n-1-i, n-1-j)
            const double d = a(n - 1 - i, n - 1 - j) - a(j, i);
            sum += d * d;
        }
    return std::sqrt(sum);
}

}  // namespace structmat
