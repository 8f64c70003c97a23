#include "structmat/gs.hpp"

#include <algorithm>
#include <cmath>

#include "structmat/fft.hpp"
#include "structmat/norms.hpp"

namespace structmat {

namespace {

constexpr double kSingularPivotScale = 1e-13;  // LU pivot cutoff relative to ||T||_1
constexpr double kZeroPivotScale = 1e-13;      // corner pivot cutoff in reconstruction

std::size_t next_pow2(std::size_t n) {
    std::size_t m = 1;
    while (m < n) m <<= 1;
    return m;
}

// Z(v): lower triangular Toeplitz with first column v.
Matrix lower_triangular(const DenseVector& v) {
    const std::size_t n = v.size();
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j) m(i, j) = v[i - j];
    return m;
}

double inf_norm_of(const DenseVector& v) { return vector_norm(v, NormFamily::Infinity); }

void check_reconstruct_pivot(const GohbergSemenculFactors& f, double pivot) {
    const double scale = std::max({1.0, inf_norm_of(f.first), inf_norm_of(f.last)});
    if (!(std::abs(pivot) > kZeroPivotScale * scale))
        throw ZeroPivot("gs_reconstruct: corner pivot vanishes");
}

// (Z(a) Z(Jb)^T - Z(Za) Z(ZJb)^T)-style assembly shared by the variants.
Matrix corner_product(const DenseVector& a, const DenseVector& b, const DenseVector& c,
                      const DenseVector& d, double pivot) {
    const Matrix za = lower_triangular(a);
    const Matrix zb = transpose(lower_triangular(b));
    const Matrix zc = lower_triangular(c);
    const Matrix zd = transpose(lower_triangular(d));
    Matrix r = matmul(za, zb);
    const Matrix s = matmul(zc, zd);
    for (std::size_t i = 0; i < r.data().size(); ++i)
        r.data()[i] = (r.data()[i] - s.data()[i]) / pivot;
    return r;
}

// First n entries of the linear convolution a * x through a shared plan.
DenseVector lower_apply(const DenseVector& a, const DenseVector& x, const FourierPlan& plan) {
    const std::size_t n = a.size();
    const std::size_t m = plan.size();
    ComplexVector fa(m, Complex{}), fx(m, Complex{});
    for (std::size_t i = 0; i < n; ++i) fa[i] = a[i];
    for (std::size_t i = 0; i < x.size(); ++i) fx[i] = x[i];
    plan.forward_inplace(fa);
    plan.forward_inplace(fx);
    for (std::size_t i = 0; i < m; ++i) fa[i] *= fx[i];
    plan.inverse_inplace(fa);
    DenseVector y(n);
    for (std::size_t i = 0; i < n; ++i) y[i] = fa[i].real();
    return y;
}

// Z(h)^T x = J Z(h) J x.
DenseVector upper_transpose_apply(const DenseVector& h, const DenseVector& x,
                                  const FourierPlan& plan) {
    return reflect(lower_apply(h, reflect(x), plan));
}

// (Z(a) Z(b)^T - Z(c) Z(d)^T) x / pivot without dense assembly.
DenseVector corner_product_apply(const DenseVector& a, const DenseVector& b,
                                 const DenseVector& c, const DenseVector& d, double pivot,
                                 const DenseVector& x, const FourierPlan& plan) {
    const DenseVector t1 = lower_apply(a, upper_transpose_apply(b, x, plan), plan);
    const DenseVector t2 = lower_apply(c, upper_transpose_apply(d, x, plan), plan);
    DenseVector y(a.size());
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = (t1[i] - t2[i]) / pivot;
    return y;
}

}  // namespace

ToeplitzSpec leading_block(const ToeplitzSpec& bordered) {
    const std::size_t m = toeplitz_order(bordered);
    if (m < 2) throw DimensionError("leading_block: bordered order must be at least 2");
    // diagonals n-1+(i-j) of the block sit at m-1+(i-j) in the bordered vector
    DenseVector d(bordered.diagonals.begin() + 1, bordered.diagonals.end() - 1);
    return ToeplitzSpec{std::move(d)};
}

ToeplitzSpec shifted_block(const ToeplitzSpec& bordered) {
    const std::size_t m = toeplitz_order(bordered);
    if (m < 2) throw DimensionError("shifted_block: bordered order must be at least 2");
    // entries t_{i-j+1}: diagonal offset i-j of the block reads index m+(i-j) here
    DenseVector d(bordered.diagonals.begin() + 2, bordered.diagonals.end());
    return ToeplitzSpec{std::move(d)};
}

CornerSolve solve_corner_columns(const ToeplitzSpec& t) {
    const std::size_t n = toeplitz_order(t);
    const Matrix dense = toeplitz_to_dense(t);
    const double scale = matrix_norm(dense, NormFamily::One);
    const LuFactors<double> lu = lu_factor(dense);
    if (!(lu.min_pivot > kSingularPivotScale * scale))
        throw SingularToeplitz("solve_corner_columns: matrix is numerically singular");
    DenseVector e1(n, 0.0), en(n, 0.0);
    e1[0] = 1.0;
    en[n - 1] = 1.0;
    CornerSolve cs;
    cs.p = lu_solve(lu, e1);
    cs.q = lu_solve(lu, en);
    const DenseVector tp = matvec(dense, cs.p);
    const DenseVector tq = matvec(dense, cs.q);
    double rp = 0.0, rq = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dp = tp[i] - e1[i];
        const double dq = tq[i] - en[i];
        rp += dp * dp;
        rq += dq * dq;
    }
    cs.residual_p = std::sqrt(rp);
    cs.residual_q = std::sqrt(rq);
    return cs;
}

GohbergSemenculFactors gs_factors(const ToeplitzSpec& t, GsVariant variant) {
    const std::size_t m = toeplitz_order(t);
    const CornerSolve cs = solve_corner_columns(t);
    GohbergSemenculFactors f;
    f.variant = variant;
    f.first = cs.p;
    f.last = cs.q;
    const double scale = matrix_norm(toeplitz_to_dense(t), NormFamily::One);
    const double pivot_tolerance = 1e-12 * scale * inf_norm_of(cs.p);
    switch (variant) {
        case GsVariant::A:
            f.order = m;
            f.pivot = cs.p[0];
            break;
        case GsVariant::B:
            if (m < 2) throw DimensionError("gs_factors: variant B needs a bordered matrix");
            f.order = m - 1;
            f.pivot = cs.p[0];
            break;
        case GsVariant::C:
            if (m < 2) throw DimensionError("gs_factors: variant C needs a bordered matrix");
            f.order = m - 1;
            f.pivot = cs.p[m - 1];
            if (!(std::abs(cs.p[0]) > pivot_tolerance))
                throw ZeroPivot("gs_factors: leading pivot v_0 vanishes");
            break;
    }
    if (!(std::abs(f.pivot) > pivot_tolerance))
        throw ZeroPivot("gs_factors: corner pivot vanishes");
    return f;
}

Matrix gs_reconstruct_a(const GohbergSemenculFactors& f) {
    if (f.variant != GsVariant::A) throw std::invalid_argument("gs_reconstruct_a: variant mismatch");
    const std::size_t n = f.order;
    if (f.first.size() != n || f.last.size() != n)
        throw DimensionError("gs_reconstruct_a: factor lengths disagree with order");
    check_reconstruct_pivot(f, f.pivot);
    const DenseVector& p = f.first;
    const DenseVector& q = f.last;
    return corner_product(p, reflect(q), downshift(q), downshift(reflect(p)), f.pivot);
}

Matrix gs_reconstruct_b(const GohbergSemenculFactors& f) {
    if (f.variant != GsVariant::B) throw std::invalid_argument("gs_reconstruct_b: variant mismatch");
    const std::size_t n = f.order;
    if (f.first.size() != n + 1 || f.last.size() != n + 1)
        throw DimensionError("gs_reconstruct_b: factor lengths disagree with order");
    check_reconstruct_pivot(f, f.pivot);
    const DenseVector v(f.first.begin(), f.first.end() - 1);
    const DenseVector vp(f.first.begin() + 1, f.first.end());
    const DenseVector w(f.last.begin(), f.last.end() - 1);
    const DenseVector wp(f.last.begin() + 1, f.last.end());
    return corner_product(v, reflect(wp), w, reflect(vp), f.pivot);
}

Matrix gs_reconstruct_c(const GohbergSemenculFactors& f) {
    if (f.variant != GsVariant::C) throw std::invalid_argument("gs_reconstruct_c: variant mismatch");
    const std::size_t n = f.order;
    if (f.first.size() != n + 1 || f.last.size() != n + 1)
        throw DimensionError("gs_reconstruct_c: factor lengths disagree with order");
    const double v0 = f.first[0];
    const double vn = f.pivot;
    check_reconstruct_pivot(f, vn);
    check_reconstruct_pivot(f, v0);
    // full inverse of the bordered matrix, then its top-right block
    const Matrix full = corner_product(f.first, reflect(f.last), downshift(f.last),
                                       downshift(reflect(f.first)), v0);
    Matrix r(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r(i, j) = full(i, j + 1);
    // rank-one correction from the bordering column
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r(i, j) -= f.first[i] * f.first[n - 1 - j] / vn;
    return r;
}

Matrix gs_reconstruct(const GohbergSemenculFactors& f) {
    switch (f.variant) {
        case GsVariant::A: return gs_reconstruct_a(f);
        case GsVariant::B: return gs_reconstruct_b(f);
        case GsVariant::C: return gs_reconstruct_c(f);
    }
    throw std::invalid_argument("gs_reconstruct: unknown variant");
}

DenseVector gs_apply(const GohbergSemenculFactors& f, const DenseVector& x) {
    const std::size_t n = f.order;
    if (x.size() != n) throw DimensionError("gs_apply: dimensions disagree");
    switch (f.variant) {
        case GsVariant::A: {
            check_reconstruct_pivot(f, f.pivot);
            const FourierPlan plan(next_pow2(2 * n - 1));
            const DenseVector& p = f.first;
            const DenseVector& q = f.last;
            return corner_product_apply(p, reflect(q), downshift(q), downshift(reflect(p)),
                                        f.pivot, x, plan);
        }
        case GsVariant::B: {
            check_reconstruct_pivot(f, f.pivot);
            const FourierPlan plan(next_pow2(2 * n - 1));
            const DenseVector v(f.first.begin(), f.first.end() - 1);
            const DenseVector vp(f.first.begin() + 1, f.first.end());
            const DenseVector w(f.last.begin(), f.last.end() - 1);
            const DenseVector wp(f.last.begin() + 1, f.last.end());
            return corner_product_apply(v, reflect(wp), w, reflect(vp), f.pivot, x, plan);
        }
        case GsVariant::C: {
            const double v0 = f.first[0];
            const double vn = f.pivot;
            check_reconstruct_pivot(f, vn);
            check_reconstruct_pivot(f, v0);
            const std::size_t m = n + 1;
            const FourierPlan plan(next_pow2(2 * m - 1));
            DenseVector xt(m, 0.0);
            for (std::size_t i = 0; i < n; ++i) xt[i + 1] = x[i];
            const DenseVector z =
                corner_product_apply(f.first, reflect(f.last), downshift(f.last),
                                     downshift(reflect(f.first)), v0, xt, plan);
            double dot = 0.0;
            for (std::size_t j = 0; j < n; ++j) dot += f.first[n - 1 - j] * x[j];
            DenseVector y(n);
            for (std::size_t i = 0; i < n; ++i) y[i] = z[i] - f.first[i] * dot / vn;
            return y;
        }
    }
    throw std::invalid_argument("gs_apply: unknown variant");
}

GsInverseNormBound inverse_norm_bound(const GohbergSemenculFactors& f) {
    check_reconstruct_pivot(f, f.pivot);
    const double p1 = vector_norm(f.first, NormFamily::One);
    const double q1 = vector_norm(f.last, NormFamily::One);
    const double p2 = vector_norm(f.first, NormFamily::Two);
    const double q2 = vector_norm(f.last, NormFamily::Two);
    const double ap = std::abs(f.pivot);
    GsInverseNormBound b;
    b.bound_h = 2.0 * p1 * q1 / ap;
    b.bound_2n = 2.0 * static_cast<double>(f.order) * p2 * q2 / ap;
    return b;
}

}  // namespace structmat
