#include "aaa/fit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "aaa/cleanup.hpp"
#include "aaa/errors.hpp"

namespace aaa {

namespace {

bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

double nan_as_inf(double x) { return std::isnan(x) ? std::numeric_limits<double>::infinity() : x; }

// Mixed metric between a sample value and an approximant value.
double metric(Complex value, Complex approx, const LoewnerScaling& scaling) {
    const double c = scaling.threshold;
    const double direct = nan_as_inf(std::abs(value - approx));
    if (!scaling.symmetric) return direct;
    const Complex inv_value = is_finite(value) ? 1.0 / value : Complex{};
    const double flipped = nan_as_inf(c * c * std::abs(inv_value - 1.0 / approx));
    // A sample sitting on |F| = C (the median sample, say) takes the larger of
    // the two forms; each is the mirror of the other under f -> 1/f, so the
    // choice stays consistent between a fit of f and a fit of 1/f.
    const double a = std::abs(value);
    if (std::abs(a - c) <= 8.0 * std::numeric_limits<double>::epsilon() * c) return std::max(direct, flipped);
    return a <= c ? direct : flipped;
}

std::vector<PoleInfo> pole_report(const BarycentricRational& r, double threshold) {
    std::vector<PoleInfo> out;
    for (Complex t : poles(r)) {
        PoleInfo info{t, Complex{std::numeric_limits<double>::quiet_NaN(), 0.0}, false};
        try {
            const Complex res = residues(r, std::span<const Complex>(&t, 1)).front();
            info.residue = res;
            info.spurious = std::abs(res) < threshold;
        } catch (const DegeneratePole&) {
        }
        out.push_back(info);
    }
    return out;
}

}  // namespace

SampleSet::SampleSet(std::vector<Complex> points, std::vector<Complex> values,
                     bool allow_infinite_values)
    : points_(std::move(points)), values_(std::move(values)) {
    if (points_.size() != values_.size()) {
        throw ShapeError("SampleSet: points and values differ in length");
    }
    if (points_.size() < 2) throw InvalidInput("SampleSet: need at least 2 samples");
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (!is_finite(points_[i])) {
            throw InvalidInput("SampleSet: non-finite point at index " + std::to_string(i));
        }
        const Complex v = values_[i];
        if (std::isnan(v.real()) || std::isnan(v.imag())) {
            throw InvalidInput("SampleSet: NaN value at index " + std::to_string(i));
        }
        if (!is_finite(v)) {
            if (!allow_infinite_values) {
                throw InvalidInput("SampleSet: non-finite value at index " + std::to_string(i));
            }
            continue;
        }
        scale_ = std::max(scale_, std::abs(v));
    }
    std::vector<std::size_t> order(points_.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [this](std::size_t a, std::size_t b) {
        const Complex za = points_[a];
        const Complex zb = points_[b];
        return za.real() < zb.real() || (za.real() == zb.real() && za.imag() < zb.imag());
    });
    for (std::size_t k = 1; k < order.size(); ++k) {
        if (points_[order[k]] == points_[order[k - 1]]) {
            throw InvalidInput("SampleSet: duplicate point at indices " + std::to_string(order[k - 1]) +
                               " and " + std::to_string(order[k]));
        }
    }
}

ComplexMatrix cauchy_matrix(std::span<const Complex> remaining_points,
                            std::span<const Complex> support) {
    const auto rows = static_cast<Eigen::Index>(remaining_points.size());
    const auto cols = static_cast<Eigen::Index>(support.size());
    ComplexMatrix c(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j) {
        const Complex zj = support[static_cast<std::size_t>(j)];
        for (Eigen::Index i = 0; i < rows; ++i) {
            const Complex diff = remaining_points[static_cast<std::size_t>(i)] - zj;
            if (diff == Complex{}) {
                throw DivisionDegeneracy("cauchy_matrix: sample point coincides with support point");
            }
            c(i, j) = 1.0 / diff;
        }
    }
    return c;
}

ComplexMatrix loewner_matrix(std::span<const Complex> remaining_points,
                             std::span<const Complex> remaining_values,
                             std::span<const Complex> support,
                             std::span<const Complex> support_values) {
    if (remaining_points.size() != remaining_values.size() || support.size() != support_values.size()) {
        throw ShapeError("loewner_matrix: inconsistent lengths");
    }
    const auto rows = static_cast<Eigen::Index>(remaining_points.size());
    const auto cols = static_cast<Eigen::Index>(support.size());
    ComplexMatrix a(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j) {
        const auto sj = static_cast<std::size_t>(j);
        for (Eigen::Index i = 0; i < rows; ++i) {
            const auto si = static_cast<std::size_t>(i);
            const Complex diff = remaining_points[si] - support[sj];
            if (diff == Complex{}) {
                throw DivisionDegeneracy("loewner_matrix: sample point coincides with support point");
            }
            a(i, j) = (remaining_values[si] - support_values[sj]) / diff;
        }
    }
    return a;
}

ComplexMatrix loewner_from_cauchy(const ComplexMatrix& cauchy,
                                  std::span<const Complex> remaining_values,
                                  std::span<const Complex> support_values) {
    if (static_cast<Eigen::Index>(remaining_values.size()) != cauchy.rows() ||
        static_cast<Eigen::Index>(support_values.size()) != cauchy.cols()) {
        throw ShapeError("loewner_from_cauchy: inconsistent lengths");
    }
    ComplexMatrix a(cauchy.rows(), cauchy.cols());
    for (Eigen::Index j = 0; j < cauchy.cols(); ++j) {
        const Complex fj = support_values[static_cast<std::size_t>(j)];
        for (Eigen::Index i = 0; i < cauchy.rows(); ++i) {
            a(i, j) = remaining_values[static_cast<std::size_t>(i)] * cauchy(i, j) - cauchy(i, j) * fj;
        }
    }
    return a;
}

WeightSolution solve_weights(const ComplexMatrix& a) {
    auto sv = min_right_singular_vector(a);
    return {std::move(sv.w), sv.sigma_min};
}

double symmetric_threshold(const SampleSet& samples, SymmetricScale scale) {
    if (scale == SymmetricScale::unit) return 1.0;
    std::vector<double> mags;
    mags.reserve(samples.size());
    for (Complex v : samples.values()) mags.push_back(std::abs(v));
    std::sort(mags.begin(), mags.end());
    const std::size_t n = mags.size();
    // Geometric mean of the middle pair keeps median(1/|F|) == 1/median(|F|).
    const double med = n % 2 == 1 ? mags[n / 2] : std::sqrt(mags[n / 2 - 1] * mags[n / 2]);
    if (!(med > 0.0) || !std::isfinite(med)) {
        throw InvalidInput("symmetric_threshold: median of |F| is zero or infinite");
    }
    return med;
}

WeightedSupport weights_for_support(const SampleSet& samples,
                                    std::span<const std::size_t> support_indices,
                                    const LoewnerScaling& scaling, bool condition_diagnostics) {
    const auto& z = samples.points();
    const auto& f = samples.values();
    const std::size_t m = support_indices.size();
    if (m == 0) throw InvalidInput("weights_for_support: empty support");

    std::vector<bool> is_support(samples.size(), false);
    std::vector<Complex> zs;
    std::vector<Complex> fs;
    zs.reserve(m);
    fs.reserve(m);
    for (std::size_t idx : support_indices) {
        if (idx >= samples.size()) throw InvalidInput("weights_for_support: index out of range");
        if (is_support[idx]) throw InvalidInput("weights_for_support: repeated support index");
        if (!is_finite(f[idx])) throw InvalidInput("weights_for_support: infinite support value");
        is_support[idx] = true;
        zs.push_back(z[idx]);
        fs.push_back(f[idx]);
    }
    std::vector<Complex> zr;
    std::vector<Complex> fr;
    zr.reserve(samples.size() - m);
    fr.reserve(samples.size() - m);
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (is_support[i]) continue;
        zr.push_back(z[i]);
        fr.push_back(f[i]);
    }
    if (zr.size() < m) {
        throw ShapeError("weights_for_support: fewer remaining samples than support points");
    }

    const ComplexMatrix c = cauchy_matrix(zr, zs);
    ComplexMatrix a(c.rows(), c.cols());
    std::vector<Complex> col_scale(m, Complex{1.0, 0.0});
    const double thr = scaling.threshold;
    if (scaling.symmetric) {
        for (std::size_t j = 0; j < m; ++j) {
            if (std::abs(fs[j]) > thr) col_scale[j] = thr / fs[j];
        }
    }
    for (Eigen::Index i = 0; i < c.rows(); ++i) {
        const Complex fi = fr[static_cast<std::size_t>(i)];
        const bool scaled_row = scaling.symmetric && !(std::abs(fi) <= thr);
        for (Eigen::Index j = 0; j < c.cols(); ++j) {
            const auto sj = static_cast<std::size_t>(j);
            Complex entry;
            if (!scaled_row) {
                entry = fi * c(i, j) - c(i, j) * fs[sj];
            } else if (is_finite(fi)) {
                entry = thr * (1.0 - fs[sj] / fi) * c(i, j);
            } else {
                entry = thr * c(i, j);
            }
            a(i, j) = entry * col_scale[sj];
        }
    }

    const auto sol = solve_weights(a);
    std::vector<Complex> w(m);
    for (std::size_t j = 0; j < m; ++j) w[j] = sol.w(static_cast<Eigen::Index>(j)) * col_scale[j];
    std::optional<double> cond;
    if (condition_diagnostics) cond = column_scaled_condition(c);
    return {BarycentricRational(std::move(zs), std::move(fs), std::move(w)), sol.sigma_min, a.norm(),
            cond};
}

std::vector<double> error_metric(const SampleSet& samples, const BarycentricRational& r,
                                 const LoewnerScaling& scaling) {
    std::vector<double> out(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) {
        out[i] = metric(samples.values()[i], r(samples.points()[i]), scaling);
    }
    return out;
}

FitResult fit(const SampleSet& samples, const FitConfig& config) {
    if (!(config.tol >= 0.0)) throw InvalidInput("fit: tol must be nonnegative");
    if (config.mmax < 1) throw InvalidInput("fit: mmax must be at least 1");
    const auto& f = samples.values();
    const std::size_t n_samples = samples.size();

    LoewnerScaling scaling;
    bool any_infinite = false;
    for (Complex v : f) any_infinite = any_infinite || !is_finite(v);
    if (any_infinite && !config.symmetric) {
        throw InvalidInput("fit: non-finite sample values require symmetric mode");
    }
    if (config.symmetric) {
        scaling.symmetric = true;
        scaling.threshold = symmetric_threshold(samples, config.symmetric_scale);
    }
    const double scale = samples.scale();
    const double stop_at = config.symmetric ? config.tol * scaling.threshold : config.tol * scale;

    // Step-1 baseline: the constant mean(F), or C itself in symmetric mode so
    // that the baseline of 1/f is the reciprocal of the baseline of f.
    Complex baseline{scaling.threshold, 0.0};
    if (!config.symmetric) {
        baseline = std::accumulate(f.begin(), f.end(), Complex{}) / static_cast<double>(n_samples);
    }
    std::vector<double> err(n_samples);
    for (std::size_t i = 0; i < n_samples; ++i) err[i] = metric(f[i], baseline, scaling);

    std::vector<std::size_t> support;
    std::vector<bool> is_support(n_samples, false);
    std::optional<BarycentricRational> current;
    FitTrace trace;
    bool converged = false;
    double max_err = std::numeric_limits<double>::infinity();

    for (std::size_t m = 1; m <= config.mmax; ++m) {
        if (2 * m > n_samples) break;
        std::size_t pick = n_samples;
        double best = -1.0;
        for (std::size_t i = 0; i < n_samples; ++i) {
            if (is_support[i] || !is_finite(f[i])) continue;
            if (err[i] > best) {
                best = err[i];
                pick = i;
            }
        }
        if (pick == n_samples) break;
        support.push_back(pick);
        is_support[pick] = true;

        auto ws = weights_for_support(samples, support, scaling, config.condition_diagnostics);
        current = std::move(ws.approximant);
        err = error_metric(samples, *current, scaling);
        max_err = 0.0;
        for (std::size_t i = 0; i < n_samples; ++i) {
            if (is_support[i]) err[i] = 0.0;
            max_err = std::max(max_err, err[i]);
        }
        trace.push_back({m, pick, max_err, ws.sigma_min, ws.loewner_norm, ws.cauchy_condition});
        if (max_err <= stop_at) {
            converged = true;
            break;
        }
    }
    if (!current) throw InvalidInput("fit: no support point could be selected");

    FitResult result{*current, std::move(trace), {}, {}, converged, scale, max_err, support, std::nullopt};

    if (config.cleanup_enabled) {
        CleanupOptions opts{config.cleanup_tol, scaling};
        auto flagged = detect_spurious(result.approximant, scale, config.cleanup_tol);
        auto [refit, report] = cleanup_refit(result.approximant, samples, flagged, opts);
        if (!report.removed_support_indices.empty() && !report.warning) {
            std::vector<bool> removed(support.size(), false);
            for (std::size_t k : report.removed_support_indices) removed[k] = true;
            std::vector<std::size_t> kept;
            for (std::size_t k = 0; k < support.size(); ++k) {
                if (!removed[k]) kept.push_back(support[k]);
            }
            result.support_indices = std::move(kept);
            result.approximant = std::move(refit);
            std::vector<bool> in_support(n_samples, false);
            for (std::size_t idx : result.support_indices) in_support[idx] = true;
            const auto e = error_metric(samples, result.approximant, scaling);
            result.max_error = 0.0;
            for (std::size_t i = 0; i < n_samples; ++i) {
                if (!in_support[i]) result.max_error = std::max(result.max_error, e[i]);
            }
        }
        result.cleanup = std::move(report);
        result.converged = result.converged && result.max_error <= stop_at;
    }

    result.poles = pole_report(result.approximant, config.cleanup_tol * scale);
    result.zeros = zeros(result.approximant);
    return result;
}

}  // namespace aaa
