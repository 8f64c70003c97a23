#include "structmat/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "structmat/spectral.hpp"

namespace structmat {

const char* norm_family_name(NormFamily family) {
    switch (family) {
        case NormFamily::One: return "1";
        case NormFamily::Two: return "2";
        case NormFamily::Infinity: return "inf";
        case NormFamily::Frobenius: return "fro";
    }
    return "?";
}

namespace {

template <class T>
double abs_of(const T& v) {
    return std::abs(v);
}

template <class T>
double one_norm_impl(const BasicMatrix<T>& a) {
    std::vector<double> col(a.cols(), 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const T* ri = a.row(i);
        for (std::size_t j = 0; j < a.cols(); ++j) col[j] += abs_of(ri[j]);
    }
    double m = 0.0;
    for (double c : col) m = std::max(m, c);
    return m;
}

template <class T>
double inf_norm_impl(const BasicMatrix<T>& a) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const T* ri = a.row(i);
        double s = 0.0;
        for (std::size_t j = 0; j < a.cols(); ++j) s += abs_of(ri[j]);
        m = std::max(m, s);
    }
    return m;
}

template <class T>
double frobenius_impl(const BasicMatrix<T>& a) {
    double s = 0.0;
    for (const T& v : a.data()) {
        const double m = abs_of(v);
        s += m * m;
    }
    return std::sqrt(s);
}

std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Rayleigh quotients of power iterates on the Gram operator increase
// monotonically; stop when the projected geometric tail is negligible.
template <class T>
SpectralEstimate power_iteration(const BasicMatrix<T>& a, std::vector<T> v,
                                 std::size_t max_iters) {
    SpectralEstimate est;
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    double nv = 0.0;
    for (const T& x : v) nv += std::norm(Complex(x));
    nv = std::sqrt(nv);
    if (nv == 0.0) return est;
    for (T& x : v) x = x / nv;
    std::vector<T> w(rows), z(cols);
    double lambda = 0.0;
    double prev_delta = std::numeric_limits<double>::infinity();
    for (std::size_t it = 1; it <= max_iters; ++it) {
        // w = A v, z = A^H w
        for (std::size_t i = 0; i < rows; ++i) {
            const T* ri = a.row(i);
            T acc{};
            for (std::size_t j = 0; j < cols; ++j) acc += ri[j] * v[j];
            w[i] = acc;
        }
        std::fill(z.begin(), z.end(), T{});
        for (std::size_t i = 0; i < rows; ++i) {
            const T wi = w[i];
            const T* ri = a.row(i);
            if constexpr (std::is_same_v<T, Complex>) {
                for (std::size_t j = 0; j < cols; ++j) z[j] += std::conj(ri[j]) * wi;
            } else {
                for (std::size_t j = 0; j < cols; ++j) z[j] += ri[j] * wi;
            }
        }
        double wn = 0.0;
        for (const T& x : w) wn += std::norm(Complex(x));
        const double new_lambda = wn;  // v has unit norm, so ||Av||^2 is the Rayleigh quotient
        double zn = 0.0;
        for (const T& x : z) zn += std::norm(Complex(x));
        zn = std::sqrt(zn);
        est.iterations = it;
        const double delta = new_lambda - lambda;
        lambda = new_lambda;
        if (zn == 0.0) {
            est.value = std::sqrt(lambda);
            est.converged = true;
            return est;
        }
        for (std::size_t j = 0; j < cols; ++j) v[j] = z[j] / zn;
        if (it > 1) {
            double ratio = prev_delta > 0.0 ? delta / prev_delta : 0.0;
            ratio = std::clamp(ratio, 0.0, 1.0 - 1e-9);
            const double tail = delta * ratio / (1.0 - ratio);
            if (delta + tail <= 1e-10 * std::max(1.0, lambda)) {
                est.value = std::sqrt(lambda);
                est.converged = true;
                return est;
            }
        }
        prev_delta = delta;
    }
    est.value = std::sqrt(lambda);
    return est;
}

template <class T>
SpectralEstimate spectral_estimate_impl(const BasicMatrix<T>& a) {
    SpectralEstimate est;
    if (a.empty()) {
        est.converged = true;
        return est;
    }
    const double n1 = one_norm_impl(a);
    const double ninf = inf_norm_impl(a);
    const double dim = static_cast<double>(std::max(a.rows(), a.cols()));
    est.lower = std::max(n1, ninf) / std::sqrt(dim);
    est.upper = std::sqrt(n1 * ninf);
    if (frobenius_impl(a) == 0.0) {
        est.converged = true;
        return est;
    }
    const std::size_t max_iters = 10 * std::max(a.rows(), a.cols());
    std::vector<T> start(a.cols(), T{1});
    SpectralEstimate first = power_iteration(a, std::move(start), max_iters);
    if (first.converged) {
        first.lower = est.lower;
        first.upper = est.upper;
        return first;
    }
    // one deterministic random restart
    std::vector<T> rnd(a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        const double x = static_cast<double>(mix64(0x5eedULL + j) >> 11) * 0x1.0p-53 - 0.5;
        rnd[j] = T{1} * x;
    }
    SpectralEstimate second = power_iteration(a, std::move(rnd), max_iters);
    SpectralEstimate& best = second.value >= first.value ? second : first;
    best.lower = est.lower;
    best.upper = est.upper;
    return best;
}

template <class T>
double matrix_norm_impl(const BasicMatrix<T>& a, NormFamily family) {
    if (a.empty()) throw DimensionError("matrix_norm: empty matrix");
    switch (family) {
        case NormFamily::One: return one_norm_impl(a);
        case NormFamily::Infinity: return inf_norm_impl(a);
        case NormFamily::Frobenius: return frobenius_impl(a);
        case NormFamily::Two: break;
    }
    const SpectralEstimate est = spectral_estimate_impl(a);
    if (!est.converged)
        throw PowerIterationStall("matrix_norm: power iteration stalled", est.lower, est.upper);
    return est.value;
}

// Certified enclosure of the spectral norm: the monotone Rayleigh ascent
// bounds it from below even when the iteration stalls, Frobenius and the
// sqrt(norm1 * norminf) bracket from above. Rows built from enclosures flag
// a violation only when the inequality provably fails.
template <class T>
std::pair<double, double> two_norm_enclosure(const BasicMatrix<T>& a) {
    const SpectralEstimate est = spectral_estimate_impl(a);
    if (est.converged) return {est.value, est.value};
    const double hi = std::min(est.upper, frobenius_impl(a));
    return {std::max(est.lower, est.value), hi};
}

double max_abs(const ComplexVector& v) {
    double m = 0.0;
    for (const Complex& z : v) m = std::max(m, std::abs(z));
    return m;
}

double min_abs(const ComplexVector& v) {
    double m = std::numeric_limits<double>::infinity();
    for (const Complex& z : v) m = std::min(m, std::abs(z));
    return m;
}

}  // namespace

double vector_norm(const DenseVector& v, NormFamily family) {
    switch (family) {
        case NormFamily::One: {
            double s = 0.0;
            for (double x : v) s += std::abs(x);
            return s;
        }
        case NormFamily::Infinity: {
            double m = 0.0;
            for (double x : v) m = std::max(m, std::abs(x));
            return m;
        }
        case NormFamily::Two:
        case NormFamily::Frobenius: {
            double s = 0.0;
            for (double x : v) s += x * x;
            return std::sqrt(s);
        }
    }
    return 0.0;
}

double vector_norm(const ComplexVector& v, NormFamily family) {
    switch (family) {
        case NormFamily::One: {
            double s = 0.0;
            for (const Complex& x : v) s += std::abs(x);
            return s;
        }
        case NormFamily::Infinity: {
            double m = 0.0;
            for (const Complex& x : v) m = std::max(m, std::abs(x));
            return m;
        }
        case NormFamily::Two:
        case NormFamily::Frobenius: {
            double s = 0.0;
            for (const Complex& x : v) s += std::norm(x);
            return std::sqrt(s);
        }
    }
    return 0.0;
}

SpectralEstimate spectral_norm_estimate(const Matrix& a) { return spectral_estimate_impl(a); }
SpectralEstimate spectral_norm_estimate(const ComplexMatrix& a) { return spectral_estimate_impl(a); }

double matrix_norm(const Matrix& a, NormFamily family) { return matrix_norm_impl(a, family); }
double matrix_norm(const ComplexMatrix& a, NormFamily family) { return matrix_norm_impl(a, family); }

NormBoundReport check_norm_relations(const Matrix& a, std::size_t rank) {
    NormBoundReport report;
    const double n = static_cast<double>(std::max(a.rows(), a.cols()));
    const double rho = rank == 0 ? static_cast<double>(std::min(a.rows(), a.cols()))
                                 : static_cast<double>(rank);
    const double n1 = matrix_norm(a, NormFamily::One);
    const double ninf = matrix_norm(a, NormFamily::Infinity);
    const double nf = matrix_norm(a, NormFamily::Frobenius);
    const auto [n2lo, n2hi] = two_norm_enclosure(a);
    report.add("norm1/sqrt(n) <= norm2", n1 / std::sqrt(n), n2hi);
    report.add("norm2 <= sqrt(n)*norm1", n2lo, std::sqrt(n) * n1);
    report.add("norminf/sqrt(n) <= norm2", ninf / std::sqrt(n), n2hi);
    report.add("norm2 <= sqrt(n)*norminf", n2lo, std::sqrt(n) * ninf);
    report.add("norm2^2 <= norm1*norminf", n2lo * n2lo, n1 * ninf);
    report.add("norm2 <= normF", n2lo, nf);
    report.add("normF <= sqrt(rank)*norm2", nf, std::sqrt(rho) * n2hi);
    return report;
}

NormBoundReport check_product_relations(const Matrix& f, const Matrix& g) {
    if (f.rows() != g.rows() || f.cols() != g.cols() || f.cols() != g.rows())
        throw DimensionError("check_product_relations: matrices must be square of equal order");
    NormBoundReport report;
    Matrix sum(f.rows(), f.cols());
    for (std::size_t i = 0; i < sum.data().size(); ++i) sum.data()[i] = f.data()[i] + g.data()[i];
    const Matrix prod = matmul(f, g);
    for (NormFamily h : {NormFamily::One, NormFamily::Two, NormFamily::Infinity}) {
        const std::string name = norm_family_name(h);
        if (h == NormFamily::Two) {
            const auto ef = two_norm_enclosure(f);
            const auto eg = two_norm_enclosure(g);
            report.add("norm" + name + "(F+G) <= norm" + name + "(F)+norm" + name + "(G)",
                       two_norm_enclosure(sum).first, ef.second + eg.second);
            report.add("norm" + name + "(FG) <= norm" + name + "(F)*norm" + name + "(G)",
                       two_norm_enclosure(prod).first, ef.second * eg.second);
            continue;
        }
        const double nf = matrix_norm(f, h);
        const double ng = matrix_norm(g, h);
        report.add("norm" + name + "(F+G) <= norm" + name + "(F)+norm" + name + "(G)",
                   matrix_norm(sum, h), nf + ng);
        report.add("norm" + name + "(FG) <= norm" + name + "(F)*norm" + name + "(G)",
                   matrix_norm(prod, h), nf * ng);
    }
    return report;
}

double circulant_frobenius_norm(const FCirculantSpec& spec) {
    if (spec.factor != 1.0) throw std::invalid_argument("circulant_frobenius_norm requires factor 1");
    double s = 0.0;
    for (double t : spec.first_column) s += t * t;
    return std::sqrt(static_cast<double>(spec.first_column.size()) * s);
}

NormBoundReport circulant_norm_bounds(const FCirculantSpec& spec) {
    if (spec.factor != 1.0) throw std::invalid_argument("circulant_norm_bounds requires factor 1");
    const std::size_t n = spec.first_column.size();
    NormBoundReport report;
    const double t1 = vector_norm(spec.first_column, NormFamily::One);
    const double t2 = vector_norm(spec.first_column, NormFamily::Two);
    const Matrix z1 = f_circulant_to_dense(spec);
    const SpectralDiagonal diag = circulant_eigenvalues(spec);
    const double norm2 = max_abs(diag.eigenvalues);  // circulants are normal
    const double norm1 = matrix_norm(z1, NormFamily::One);
    const double norminf = matrix_norm(z1, NormFamily::Infinity);
    const double normf = matrix_norm(z1, NormFamily::Frobenius);
    report.add("norm2(Z1) <= norm1(Z1)", norm2, norm1);
    report.add("norm1(Z1) <= norminf(Z1)", norm1, norminf);
    report.add("norminf(Z1) <= norm1(Z1)", norminf, norm1);
    report.add("norminf(Z1) <= ||t||_1", norminf, t1);
    report.add("||t||_1 <= norminf(Z1)", t1, norminf);
    const double rhs12 = std::sqrt(static_cast<double>(n)) * t2;
    report.add("normF(Z1) <= sqrt(n)||t||", normf, rhs12);
    report.add("sqrt(n)||t|| <= normF(Z1)", rhs12, normf);
    // The triangular comparison is restricted to entrywise families: the
    // spectral analogue fails, e.g. t=(1,-1,1) gives ||Z(t)||_2 > ||Z_1(t)||_2.
    const FCirculantSpec lower{spec.first_column, 0.0};
    const Matrix z0 = f_circulant_to_dense(lower);
    report.add("norm1(Z) <= norm1(Z1)", matrix_norm(z0, NormFamily::One), norm1);
    report.add("norminf(Z) <= norminf(Z1)", matrix_norm(z0, NormFamily::Infinity), norminf);
    report.add("normF(Z) <= normF(Z1)", matrix_norm(z0, NormFamily::Frobenius), normf);
    return report;
}

NormBoundReport toeplitz_norm_bounds(const ToeplitzSpec& spec) {
    const std::size_t n = toeplitz_order(spec);
    NormBoundReport report;
    const Matrix t = toeplitz_to_dense(spec);
    const double d1 = vector_norm(spec.diagonals, NormFamily::One);
    const double d2 = vector_norm(spec.diagonals, NormFamily::Two);
    const double rhs = std::sqrt(static_cast<double>(2 * n - 1)) * d2;
    const double norm1 = matrix_norm(t, NormFamily::One);
    const double norminf = matrix_norm(t, NormFamily::Infinity);
    report.add("norm2(T) <= norm1(T)", two_norm_enclosure(t).first, norm1);
    report.add("norm1(T) <= norminf(T)", norm1, norminf);
    report.add("norminf(T) <= norm1(T)", norminf, norm1);
    report.add("norm1(T) <= ||t+||_1", norm1, d1);
    report.add("norminf(T) <= ||t+||_1", norminf, d1);
    report.add("||t+||_1 <= sqrt(2n-1)||t+||", d1, rhs);
    report.add("normF(T) <= sqrt(2n-1)||t+||", matrix_norm(t, NormFamily::Frobenius), rhs);
    return report;
}

InverseNorms circulant_inverse_norms(const FCirculantSpec& spec) {
    if (spec.factor != 1.0) throw std::invalid_argument("circulant_inverse_norms requires factor 1");
    const SpectralDiagonal diag = circulant_eigenvalues(spec);
    const double mn = min_abs(diag.eigenvalues);
    if (!(mn > singular_tolerance(diag.eigenvalues)))
        throw SingularCirculant("circulant_inverse_norms: vanishing eigenvalue", mn);
    InverseNorms r;
    double s = 0.0;
    for (const Complex& u : diag.eigenvalues) s += 1.0 / std::norm(u);
    r.frobenius = std::sqrt(s);
    r.spectral = 1.0 / mn;
    return r;
}

NormBoundReport f_circulant_scaling_check(const FCirculantSpec& spec) {
    if (spec.factor == 0.0) throw ZeroFactor("f_circulant_scaling_check: factor must be nonzero");
    const double f = spec.factor;
    const double g = std::max(std::abs(f), 1.0 / std::abs(f));
    const FCirculantSpec unit{spec.first_column, 1.0};
    const Matrix zf = f_circulant_to_dense(spec);
    const Matrix z1 = f_circulant_to_dense(unit);
    NormBoundReport report;
    // The sandwich is asserted for the entrywise families only: every entry
    // of Z_f is an entry of Z_1 scaled by 1 or f, so column sums, row sums
    // and the Frobenius sum all move by a factor inside [1/g, g]. The
    // spectral analogue fails in both directions, e.g. at f=-1 the norm
    // drops for t=(1,1) and rises for t=(1,-1,1).
    const auto sandwich = [&](const Matrix& mf, const Matrix& m1, const std::string& tag) {
        for (NormFamily h : {NormFamily::One, NormFamily::Infinity, NormFamily::Frobenius}) {
            const std::string name = norm_family_name(h);
            const double vf = matrix_norm(mf, h);
            const double v1 = matrix_norm(m1, h);
            report.add("norm" + name + "(Z1" + tag + ")/g <= norm" + name + "(Zf" + tag + ")",
                       v1 / g, vf);
            report.add("norm" + name + "(Zf" + tag + ") <= g*norm" + name + "(Z1" + tag + ")",
                       vf, g * v1);
        }
    };
    sandwich(zf, z1, "");
    const LuFactors<double> lf = lu_factor(zf);
    if (lf.min_pivot > 1e-12 * matrix_norm(zf, NormFamily::One)) {
        // The inverse of a nonsingular f-circulant is the f-circulant
        // generated by its own first column, so the inverse-side sandwich
        // compares that vector's f-circulant against its unit circulant.
        // Comparing against the inverse of Z_1 instead would be false: the
        // two inverses differ by the conditioning of Z_1 alone.
        const Matrix inv = lu_inverse(lf);
        DenseVector s(inv.rows());
        for (std::size_t i = 0; i < inv.rows(); ++i) s[i] = inv(i, 0);
        sandwich(f_circulant_to_dense(FCirculantSpec{s, f}),
                 f_circulant_to_dense(FCirculantSpec{s, 1.0}), "^-1");
    }
    return report;
}

}  // namespace structmat
