// Python bindings for the main operations: dense renderers, transforms,
// eigenvalues and matvecs, Gohberg-Semencul inversion, norms, analytic CDFs,
// and deterministic sampling.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "structmat/experiment.hpp"
#include "structmat/fft.hpp"
#include "structmat/gs.hpp"
#include "structmat/norms.hpp"
#include "structmat/spectral.hpp"
#include "structmat/stats.hpp"
#include "structmat/structured.hpp"

namespace py = pybind11;
using namespace structmat;

namespace {

using Rows = std::vector<std::vector<double>>;

Rows from_matrix(const Matrix& a) {
    Rows rows(a.rows(), std::vector<double>(a.cols()));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) rows[i][j] = a(i, j);
    return rows;
}

Matrix to_matrix(const Rows& rows) {
    if (rows.empty()) throw DimensionError("matrix rows must be nonempty");
    Matrix a(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != a.cols()) throw DimensionError("matrix rows must be rectangular");
        for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = rows[i][j];
    }
    return a;
}

NormFamily parse_family(const std::string& name) {
    if (name == "1") return NormFamily::One;
    if (name == "2") return NormFamily::Two;
    if (name == "inf") return NormFamily::Infinity;
    if (name == "fro") return NormFamily::Frobenius;
    throw ConfigError("unknown norm family: " + name);
}

GsVariant parse_variant(const std::string& name) {
    if (name == "a") return GsVariant::A;
    if (name == "b") return GsVariant::B;
    if (name == "c") return GsVariant::C;
    throw ConfigError("unknown variant: " + name);
}

}  // namespace

PYBIND11_MODULE(structmat, m) {
    m.doc() =
        "Structured-matrix toolkit: circulant/Toeplitz operations, "
        "Gohberg-Semencul inversion, norm bounds, and analytic CDFs";
    m.attr("__version__") = kVersion;

    m.def(
        "toeplitz_dense",
        [](const DenseVector& diagonals) {
            return from_matrix(toeplitz_to_dense(ToeplitzSpec{diagonals}));
        },
        py::arg("diagonals"),
        "Dense Toeplitz matrix from its 2n-1 diagonal entries (main diagonal at index n-1)");
    m.def(
        "circulant_dense",
        [](const DenseVector& first_column, double f) {
            return from_matrix(f_circulant_to_dense(FCirculantSpec{first_column, f}));
        },
        py::arg("first_column"), py::arg("f") = 1.0, "Dense f-circulant matrix");
    m.def(
        "hankel_dense",
        [](const DenseVector& antidiagonals) {
            return from_matrix(hankel_to_dense(HankelSpec{antidiagonals}));
        },
        py::arg("antidiagonals"), "Dense Hankel matrix from its 2n-1 antidiagonal entries");

    m.def(
        "dft", [](const ComplexVector& v) { return dft(v); }, py::arg("v"),
        "Unnormalized DFT with omega = exp(+2 pi i / n)");
    m.def(
        "dft_real", [](const DenseVector& v) { return dft(v); }, py::arg("v"),
        "Unnormalized DFT of a real vector");
    m.def(
        "idft", [](const ComplexVector& v) { return idft(v); }, py::arg("v"), "Inverse DFT");

    m.def(
        "circulant_eigenvalues",
        [](const DenseVector& first_column, double f) {
            return circulant_eigenvalues(FCirculantSpec{first_column, f}).eigenvalues;
        },
        py::arg("first_column"), py::arg("f") = 1.0,
        "Eigenvalues of the f-circulant via the scaled DFT");
    m.def(
        "circulant_matvec",
        [](const DenseVector& first_column, const DenseVector& x, double f) {
            return circulant_matvec(FCirculantSpec{first_column, f}, x);
        },
        py::arg("first_column"), py::arg("x"), py::arg("f") = 1.0);
    m.def(
        "circulant_solve",
        [](const DenseVector& first_column, const DenseVector& x, double f) {
            return circulant_inverse_apply(FCirculantSpec{first_column, f}, x);
        },
        py::arg("first_column"), py::arg("x"), py::arg("f") = 1.0,
        "Apply the circulant inverse through eigenvalue reciprocals");
    m.def(
        "toeplitz_matvec",
        [](const DenseVector& diagonals, const DenseVector& x) {
            return toeplitz_matvec(ToeplitzSpec{diagonals}, x);
        },
        py::arg("diagonals"), py::arg("x"),
        "Toeplitz matrix-vector product through circulant embedding");

    m.def(
        "solve_corner_columns",
        [](const DenseVector& diagonals) {
            const CornerSolve c = solve_corner_columns(ToeplitzSpec{diagonals});
            return py::make_tuple(c.p, c.q);
        },
        py::arg("diagonals"), "First and last columns of the Toeplitz inverse");
    m.def(
        "toeplitz_inverse",
        [](const DenseVector& diagonals, const std::string& variant) {
            const ToeplitzSpec spec{diagonals};
            return from_matrix(gs_reconstruct(gs_factors(spec, parse_variant(variant))));
        },
        py::arg("diagonals"), py::arg("variant") = "a",
        "Dense Toeplitz inverse via the corner-column (Gohberg-Semencul) formula");
    m.def(
        "toeplitz_solve",
        [](const DenseVector& diagonals, const DenseVector& x, const std::string& variant) {
            const ToeplitzSpec spec{diagonals};
            return gs_apply(gs_factors(spec, parse_variant(variant)), x);
        },
        py::arg("diagonals"), py::arg("x"), py::arg("variant") = "a",
        "Solve T y = x through the factored inverse and FFT convolutions");

    m.def(
        "matrix_norm",
        [](const Rows& rows, const std::string& family) {
            const Matrix a = to_matrix(rows);
            if (family == "2") return spectral_norm_estimate(a).value;
            return matrix_norm(a, parse_family(family));
        },
        py::arg("matrix"), py::arg("family") = "2");
    m.def(
        "circulant_inverse_norms",
        [](const DenseVector& first_column) {
            const InverseNorms n = circulant_inverse_norms(FCirculantSpec{first_column, 1.0});
            return py::make_tuple(n.frobenius, n.spectral);
        },
        py::arg("first_column"), "(Frobenius, spectral) norms of the circulant inverse");

    m.def("normal_cdf",
          [](double y, double mu, double sigma) { return normal_cdf(y, GaussianParams{mu, sigma}); },
          py::arg("y"), py::arg("mu") = 0.0, py::arg("sigma") = 1.0);
    m.def("chi_cdf", &chi_cdf, py::arg("y"), py::arg("n"),
          "CDF of the 2-norm of n independent standard Gaussians");
    m.def(
        "circulant_inverse_cdf",
        [](double z, double mu, double sigma, std::size_t n) {
            return circulant_inverse_cdf(z, GaussianParams{mu, sigma}, n);
        },
        py::arg("z"), py::arg("mu"), py::arg("sigma"), py::arg("n"));
    m.def("hadamard_geometric_mean_bound", &hadamard_geometric_mean_bound, py::arg("k"),
          py::arg("t"));

    m.def(
        "sample_gaussian",
        [](std::size_t n, std::uint64_t seed, double mu, double sigma) {
            RandomStream stream(seed);
            return sample_gaussian(GaussianParams{mu, sigma}, n, stream);
        },
        py::arg("n"), py::arg("seed"), py::arg("mu") = 0.0, py::arg("sigma") = 1.0,
        "Deterministic Gaussian draws for a given seed");
    m.def(
        "sample_toeplitz_diagonals",
        [](std::size_t n, std::uint64_t seed) {
            RandomStream stream(seed);
            return sample_toeplitz(SampleModel{}, n, stream).diagonals;
        },
        py::arg("n"), py::arg("seed"),
        "Diagonal vector of a random Toeplitz draw (uniform entries on [-1, 1))");
}
