#pragma once

#include <utility>
#include <vector>

#include "aaa/barycentric.hpp"
#include "aaa/fit.hpp"

namespace aaa {

struct CleanupOptions {
    double cleanup_tol = 1e-13;
    LoewnerScaling scaling{};
};

/// Poles of `r` whose |residue| < cleanup_tol * scale. All returned entries
/// have `spurious` set.
std::vector<PoleInfo> detect_spurious(const BarycentricRational& r, double scale, double cleanup_tol);

/// Flagged poles are visited in order; each removes the nearest support point
/// not yet removed (ties to the lowest index). Then re-solves the least-squares
/// problem once over all samples that are not surviving support points.
///
/// Every support point of `r` must be one of the sample points. With nothing
/// flagged the input is returned unchanged; if removal would leave no support
/// point the input is returned unchanged with `warning` set.
std::pair<BarycentricRational, CleanupReport> cleanup_refit(const BarycentricRational& r,
                                                            const SampleSet& samples,
                                                            const std::vector<PoleInfo>& flagged,
                                                            const CleanupOptions& options = {});

}  // namespace aaa
