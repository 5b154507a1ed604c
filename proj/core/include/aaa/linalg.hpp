#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Core>

namespace aaa {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

struct MinSingular {
    double sigma_min = 0.0;  // ||A w||_2
    ComplexVector w;         // unit 2-norm
};

/// Right singular vector of A for its smallest singular value.
///
/// Requires rows >= cols and finite entries. The returned sigma_min is the
/// residual norm ||A w||, not the value reported by the factorization, so it
/// is consistent with w even when the smallest singular value is clustered.
MinSingular min_right_singular_vector(const ComplexMatrix& a);

struct ArrowheadSpectrum {
    std::vector<Complex> finite;  // refined finite eigenvalues
    std::size_t discarded = 0;    // infinite, non-finite or residual-rejected
};

/// Finite eigenvalues of the (m+1)x(m+1) arrowhead pencil
///
///     [ 0  c^T    ]         [ 0      ]
///     [ 1  diag(x)]  = lam  [    I_m ]
///
/// i.e. the zeros of sum_j c_j / (lam - x_j). Eigenvalues whose beta is below
/// 1e-13 |alpha| are treated as infinite. Survivors are polished by Newton
/// iteration on the partial fraction and must then pass the relative residual
/// test |sum c_j/(lam-x_j)| <= 1e-10 sum |c_j/(lam-x_j)|.
ArrowheadSpectrum arrowhead_spectrum(const std::vector<Complex>& nodes,
                                     const std::vector<Complex>& coeffs);

std::vector<Complex> arrowhead_finite_eigenvalues(const std::vector<Complex>& nodes,
                                                  const std::vector<Complex>& coeffs);

/// 2-norm condition number of `a` after scaling each column to unit norm.
double column_scaled_condition(const ComplexMatrix& a);

namespace detail {

inline constexpr double kInfiniteEigenvalueRatio = 1e-13;
inline constexpr double kEigenResidualTol = 1e-10;

/// Relative residual of the partial fraction sum_j c_j / (t - x_j).
double partial_fraction_residual(const std::vector<Complex>& nodes,
                                 const std::vector<Complex>& coeffs, Complex t);

/// Newton polish of a zero of sum_j c_j / (t - x_j). At most `max_steps`
/// steps; a step is only taken if it does not increase the residual.
Complex newton_polish(const std::vector<Complex>& nodes, const std::vector<Complex>& coeffs,
                      Complex t, int max_steps = 5);

}  // namespace detail

}  // namespace aaa
