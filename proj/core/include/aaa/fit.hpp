#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "aaa/barycentric.hpp"
#include "aaa/linalg.hpp"

namespace aaa {

/// Sample set Z with values F = f(Z). Points must be distinct and finite and
/// there must be at least two of them. Values must be finite unless
/// `allow_infinite_values` is set (symmetric mode only).
class SampleSet {
public:
    SampleSet(std::vector<Complex> points, std::vector<Complex> values,
              bool allow_infinite_values = false);

    const std::vector<Complex>& points() const noexcept { return points_; }
    const std::vector<Complex>& values() const noexcept { return values_; }
    std::size_t size() const noexcept { return points_.size(); }

    /// max |F| over the finite values.
    double scale() const noexcept { return scale_; }

private:
    std::vector<Complex> points_;
    std::vector<Complex> values_;
    double scale_ = 0.0;
};

enum class SymmetricScale { unit, median };

struct FitConfig {
    double tol = 1e-13;
    std::size_t mmax = 100;
    bool cleanup_enabled = true;
    double cleanup_tol = 1e-13;
    bool symmetric = false;
    SymmetricScale symmetric_scale = SymmetricScale::unit;
    /// Record the column-scaled condition number of the Cauchy matrix per step.
    bool condition_diagnostics = false;
};

struct TraceStep {
    std::size_t step = 0;          // m
    std::size_t sample_index = 0;  // index into Z of the new support point
    double max_error = 0.0;        // greedy metric after the step
    double sigma_min = 0.0;        // ||A w|| for the step's Loewner matrix
    double loewner_norm = 0.0;     // ||A||_F, for backward-error slack
    std::optional<double> cauchy_condition;
};

using FitTrace = std::vector<TraceStep>;

struct CleanupReport {
    std::vector<PoleInfo> flagged_poles;
    std::vector<std::size_t> removed_support_indices;  // positions in the pre-cleanup support
    std::size_t doublets_before = 0;
    std::size_t doublets_after = 0;
    bool warning = false;  // removal would have emptied the support; nothing changed
};

struct FitResult {
    BarycentricRational approximant;
    FitTrace trace;
    std::vector<PoleInfo> poles;
    std::vector<Complex> zeros;
    bool converged = false;
    double scale = 0.0;      // max |F|
    double max_error = 0.0;  // greedy metric of the returned approximant over Z
    std::vector<std::size_t> support_indices;
    std::optional<CleanupReport> cleanup;
};

/// Row/column scalings of the Loewner system. In symmetric mode rows with
/// |F_i| > C are multiplied by C/F_i and weight columns with |f_j| > C by
/// C/f_j, which makes the fit of 1/f the exact reciprocal of the fit of f.
struct LoewnerScaling {
    bool symmetric = false;
    double threshold = 1.0;  // C
};

/// Entry (i,j) = 1/(Z_i - z_j). Throws DivisionDegeneracy on coincidence.
ComplexMatrix cauchy_matrix(std::span<const Complex> remaining_points,
                            std::span<const Complex> support);

/// Entry (i,j) = (F_i - f_j)/(Z_i - z_j), built directly from its definition.
ComplexMatrix loewner_matrix(std::span<const Complex> remaining_points,
                             std::span<const Complex> remaining_values,
                             std::span<const Complex> support,
                             std::span<const Complex> support_values);

/// S_F C - C S_f.
ComplexMatrix loewner_from_cauchy(const ComplexMatrix& cauchy,
                                  std::span<const Complex> remaining_values,
                                  std::span<const Complex> support_values);

struct WeightSolution {
    ComplexVector w;
    double sigma_min = 0.0;
};

WeightSolution solve_weights(const ComplexMatrix& a);

/// Weights for a fixed support set: Loewner (scaled as requested) over the
/// non-support samples, one SVD, undo column scaling. `support_indices` index
/// into `samples`. Shared by the iteration and by cleanup.
struct WeightedSupport {
    BarycentricRational approximant;
    double sigma_min = 0.0;
    double loewner_norm = 0.0;
    std::optional<double> cauchy_condition;
};

WeightedSupport weights_for_support(const SampleSet& samples,
                                    std::span<const std::size_t> support_indices,
                                    const LoewnerScaling& scaling, bool condition_diagnostics = false);

/// Scale constant C for symmetric mode.
double symmetric_threshold(const SampleSet& samples, SymmetricScale scale);

/// Greedy metric of `r` at each sample: |F - r| or, in symmetric mode where
/// |F| > C, C^2 |1/F - 1/r|. Support points with nonzero weight report 0.
std::vector<double> error_metric(const SampleSet& samples, const BarycentricRational& r,
                                 const LoewnerScaling& scaling);

FitResult fit(const SampleSet& samples, const FitConfig& config = {});

}  // namespace aaa
