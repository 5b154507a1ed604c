#include "aaa/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include <Eigen/SVD>


#include <complex>
#define LAPACK_COMPLEX_CPP
#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

#include "aaa/errors.hpp"

namespace aaa {

namespace {

bool all_finite(const ComplexMatrix& a) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
        for (Eigen::Index i = 0; i < a.rows(); ++i) {
            if (!std::isfinite(a(i, j).real()) || !std::isfinite(a(i, j).imag())) return false;
        }
    }
    return true;
}

bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

MinSingular min_right_singular_vector(const ComplexMatrix& a) {
    if (a.rows() < 1 || a.cols() < 1) throw ShapeError("min_right_singular_vector: empty matrix");
    if (a.rows() < a.cols()) {
        throw ShapeError("min_right_singular_vector: need rows >= cols, got " +
                         std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
    }
    if (!all_finite(a)) throw InvalidInput("min_right_singular_vector: non-finite entry");

    MinSingular out;
    if (a.cols() == 1) {
        out.w = ComplexVector::Ones(1);
    } else {
        // Householder bidiagonalization (zgesvd) rather than one-sided Jacobi:
        // Jacobi rotations keep exact zero blocks of A intact, so for block
        // structured Loewner matrices (piecewise constant data) the null vector
        // it returns lives on one block only.
        ComplexMatrix work = a;
        const auto rows = static_cast<lapack_int>(a.rows());
        const auto cols = static_cast<lapack_int>(a.cols());
        Eigen::VectorXd s(cols);
        Eigen::VectorXd superb(std::max<lapack_int>(cols - 1, 1));
        ComplexMatrix vt(cols, cols);
        Complex dummy{};
        const lapack_int info = LAPACKE_zgesvd(LAPACK_COL_MAJOR, 'N', 'A', rows, cols, work.data(), rows,
                                               s.data(), &dummy, 1, vt.data(), cols, superb.data());
        if (info != 0) {
            throw std::runtime_error("min_right_singular_vector: zgesvd failed with info " + std::to_string(info));
        }
        out.w = vt.row(cols - 1).adjoint();
        out.w /= out.w.norm();
    }
    out.sigma_min = (a * out.w).norm();
    return out;
}

namespace detail {

double partial_fraction_residual(const std::vector<Complex>& nodes,
                                 const std::vector<Complex>& coeffs, Complex t) {
    Complex sum{0.0, 0.0};
    double abs_sum = 0.0;
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        if (t == nodes[j]) {
            if (coeffs[j] == Complex{}) continue;
            return std::numeric_limits<double>::infinity();
        }
        const Complex term = coeffs[j] / (t - nodes[j]);
        sum += term;
        abs_sum += std::abs(term);
    }
    if (abs_sum == 0.0) return std::numeric_limits<double>::infinity();
    const double rel = std::abs(sum) / abs_sum;
    return std::isfinite(rel) ? rel : std::numeric_limits<double>::infinity();
}

Complex newton_polish(const std::vector<Complex>& nodes, const std::vector<Complex>& coeffs,
                      Complex t, int max_steps) {
    double res = partial_fraction_residual(nodes, coeffs, t);
    for (int step = 0; step < max_steps; ++step) {
        if (!(res > 0.0) || !std::isfinite(res)) break;
        Complex g{0.0, 0.0};
        Complex dg{0.0, 0.0};
        double nearest = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < nodes.size(); ++j) {
            const Complex inv = 1.0 / (t - nodes[j]);
            g += coeffs[j] * inv;
            dg -= coeffs[j] * inv * inv;
            nearest = std::min(nearest, std::abs(t - nodes[j]));
        }
        if (dg == Complex{}) break;
        const Complex delta = g / dg;
        // Stay inside the local basin; a long jump means the estimate was poor.
        if (!is_finite(delta) || std::abs(delta) > 0.1 * nearest) break;
        const Complex next = t - delta;
        const double next_res = partial_fraction_residual(nodes, coeffs, next);
        if (!(next_res <= res)) break;
        t = next;
        res = next_res;
        if (std::abs(delta) <= 1e-15 * std::abs(t)) break;
    }
    return t;
}

}  // namespace detail

ArrowheadSpectrum arrowhead_spectrum(const std::vector<Complex>& nodes,
                                     const std::vector<Complex>& coeffs) {
    const std::size_t m = nodes.size();
    if (m == 0) throw InvalidInput("arrowhead: need at least one node");
    if (coeffs.size() != m) throw ShapeError("arrowhead: nodes and coeffs differ in length");

    double cmax = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
        if (!is_finite(nodes[j]) || !is_finite(coeffs[j])) {
            throw InvalidInput("arrowhead: non-finite node or coefficient");
        }
        cmax = std::max(cmax, std::abs(coeffs[j]));
        for (std::size_t k = 0; k < j; ++k) {
            if (nodes[j] == nodes[k]) throw InvalidInput("arrowhead: duplicate nodes");
        }
    }
    if (cmax == 0.0) throw InvalidInput("arrowhead: all coefficients are zero");

    std::vector<Complex> c(coeffs);
    for (auto& cj : c) cj /= cmax;

    const lapack_int n = static_cast<lapack_int>(m + 1);
    std::vector<Complex> e(static_cast<std::size_t>(n * n), Complex{});
    std::vector<Complex> b(static_cast<std::size_t>(n * n), Complex{});
    auto at = [n](lapack_int i, lapack_int j) { return static_cast<std::size_t>(i + j * n); };
    for (std::size_t j = 0; j < m; ++j) {
        const auto k = static_cast<lapack_int>(j + 1);
        e[at(0, k)] = c[j];
        e[at(k, 0)] = 1.0;
        e[at(k, k)] = nodes[j];
        b[at(k, k)] = 1.0;
    }

    std::vector<Complex> alpha(static_cast<std::size_t>(n));
    std::vector<Complex> beta(static_cast<std::size_t>(n));
    Complex dummy{};
    const lapack_int info = LAPACKE_zggev(LAPACK_COL_MAJOR, 'N', 'N', n, e.data(), n, b.data(), n,
                                          alpha.data(), beta.data(), &dummy, 1, &dummy, 1);
    if (info != 0) {
        throw std::runtime_error("arrowhead: zggev failed with info " + std::to_string(info));
    }

    ArrowheadSpectrum out;
    for (lapack_int i = 0; i < n; ++i) {
        const auto a = alpha[static_cast<std::size_t>(i)];
        const auto bt = beta[static_cast<std::size_t>(i)];
        if (std::abs(bt) < detail::kInfiniteEigenvalueRatio * std::abs(a) || bt == Complex{}) {
            ++out.discarded;
            continue;
        }
        Complex lam = a / bt;
        if (!is_finite(lam)) {
            ++out.discarded;
            continue;
        }
        lam = detail::newton_polish(nodes, c, lam);
        if (!(detail::partial_fraction_residual(nodes, c, lam) <= detail::kEigenResidualTol)) {
            ++out.discarded;
            continue;
        }
        out.finite.push_back(lam);
    }
    return out;
}

std::vector<Complex> arrowhead_finite_eigenvalues(const std::vector<Complex>& nodes,
                                                  const std::vector<Complex>& coeffs) {
    return arrowhead_spectrum(nodes, coeffs).finite;
}

double column_scaled_condition(const ComplexMatrix& a) {
    if (a.rows() < 1 || a.cols() < 1) throw ShapeError("column_scaled_condition: empty matrix");
    ComplexMatrix scaled = a;
    for (Eigen::Index j = 0; j < scaled.cols(); ++j) {
        const double nrm = scaled.col(j).norm();
        if (nrm == 0.0) return std::numeric_limits<double>::infinity();
        scaled.col(j) /= nrm;
    }
    Eigen::JacobiSVD<ComplexMatrix> svd(scaled);
    const auto& s = svd.singularValues();
    const double smin = s(s.size() - 1);
    if (smin == 0.0) return std::numeric_limits<double>::infinity();
    return s(0) / smin;
}

}  // namespace aaa
