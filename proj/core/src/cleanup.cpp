#include "aaa/cleanup.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "aaa/errors.hpp"

namespace aaa {

std::vector<PoleInfo> detect_spurious(const BarycentricRational& r, double scale, double cleanup_tol) {
    const double threshold = cleanup_tol * scale;
    std::vector<PoleInfo> out;
    for (Complex t : poles(r)) {
        Complex res;
        try {
            res = residues(r, std::span<const Complex>(&t, 1)).front();
        } catch (const DegeneratePole&) {
            continue;
        }
        if (std::abs(res) < threshold) out.push_back({t, res, true});
    }
    return out;
}

std::pair<BarycentricRational, CleanupReport> cleanup_refit(const BarycentricRational& r,
                                                            const SampleSet& samples,
                                                            const std::vector<PoleInfo>& flagged,
                                                            const CleanupOptions& options) {
    CleanupReport report;
    report.flagged_poles = flagged;
    report.doublets_before = flagged.size();
    if (flagged.empty()) return {r, report};

    const auto& support = r.support();
    // Each flagged pole claims the nearest support point not already claimed,
    // so k flagged poles remove k points (while the support lasts).
    std::vector<bool> marked(support.size(), false);
    for (const auto& p : flagged) {
        std::size_t nearest = support.size();
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < support.size(); ++j) {
            if (marked[j]) continue;
            const double d = std::abs(support[j] - p.location);
            if (d < best) {
                best = d;
                nearest = j;
            }
        }
        if (nearest == support.size()) break;
        marked[nearest] = true;
    }
    for (std::size_t j = 0; j < support.size(); ++j) {
        if (marked[j]) report.removed_support_indices.push_back(j);
    }
    if (report.removed_support_indices.size() == support.size()) {
        report.warning = true;
        report.removed_support_indices.clear();
        report.doublets_after = report.doublets_before;
        return {r, report};
    }

    // Locate surviving support points among the samples.
    std::map<std::pair<double, double>, std::size_t> where;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        where.emplace(std::make_pair(samples.points()[i].real(), samples.points()[i].imag()), i);
    }
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < support.size(); ++j) {
        if (marked[j]) continue;
        const auto it = where.find({support[j].real(), support[j].imag()});
        if (it == where.end()) throw InvalidInput("cleanup_refit: support point is not a sample point");
        keep.push_back(it->second);
    }

    auto refit = weights_for_support(samples, keep, options.scaling).approximant;
    report.doublets_after = detect_spurious(refit, samples.scale(), options.cleanup_tol).size();
    return {std::move(refit), std::move(report)};
}

}  // namespace aaa
