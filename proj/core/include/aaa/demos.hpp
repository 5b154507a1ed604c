#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "aaa/fit.hpp"

namespace aaa {

struct DemoCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct DemoRun {
    SampleSet samples;
    FitConfig config;
    FitResult result;
    std::vector<DemoCheck> checks;

    bool passed() const;
};

struct DemoSpec {
    std::string name;
    std::string description;
    std::string point_set;  // name in points::registry()
    std::string target;     // name in targets()
    FitConfig defaults;
    std::optional<double> max_condition;  // bound on the Cauchy condition numbers, if any
    std::function<std::vector<DemoCheck>(const DemoRun&)> check;
};

inline constexpr std::uint64_t kDefaultSeed = 1;

const std::vector<DemoSpec>& demos();

/// Throws InvalidInput for an unknown name.
const DemoSpec& find_demo(std::string_view name);

SampleSet demo_samples(const DemoSpec& spec, std::uint64_t seed = kDefaultSeed);

/// Samples, fits with `config`, and evaluates the demo's own checks plus the
/// generic ones (sigma_min monotone, interpolation, pole/zero residuals).
DemoRun run_demo(const DemoSpec& spec, const FitConfig& config, std::uint64_t seed = kDefaultSeed);

namespace analysis {

/// min_k |poles_k - target|, infinity for an empty list.
double nearest_distance(std::span<const Complex> values, Complex target);

/// Index of the entry nearest to target, or npos-like size() if empty.
std::size_t nearest_index(std::span<const Complex> values, Complex target);

std::vector<Complex> locations(std::span<const PoleInfo> poles);

/// Poles with |Im| <= imag_tol (1 + |t|) and a <= Re <= b.
std::vector<Complex> real_poles_in(std::span<const Complex> poles, double a, double b,
                                   double imag_tol = 1e-8);

std::size_t count_spurious(std::span<const PoleInfo> poles);

/// Least-squares slope of -log(max_error) against the type n = m - 1 over
/// trace steps first_step..last_step, returned as the rate rho = exp(slope).
double geometric_rate(const FitTrace& trace, std::size_t first_step, std::size_t last_step);

/// Steps where sigma_min grows by more than the relative slack.
std::vector<std::size_t> sigma_increases(const FitTrace& trace, double rel_slack = 1e-12);

/// Nonzero-weight support points where r(z_j) != f_j bitwise.
std::size_t interpolation_failures(const BarycentricRational& r);

}  // namespace analysis

}  // namespace aaa
