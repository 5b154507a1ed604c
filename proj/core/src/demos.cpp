#include "aaa/demos.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "aaa/errors.hpp"
#include "aaa/point_sets.hpp"
#include "aaa/special_functions.hpp"

namespace aaa {

namespace analysis {

double nearest_distance(std::span<const Complex> values, Complex target) {
    double best = std::numeric_limits<double>::infinity();
    for (Complex v : values) best = std::min(best, std::abs(v - target));
    return best;
}

std::size_t nearest_index(std::span<const Complex> values, Complex target) {
    std::size_t idx = values.size();
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < values.size(); ++k) {
        const double d = std::abs(values[k] - target);
        if (d < best) {
            best = d;
            idx = k;
        }
    }
    return idx;
}

std::vector<Complex> locations(std::span<const PoleInfo> poles) {
    std::vector<Complex> out;
    out.reserve(poles.size());
    for (const auto& p : poles) out.push_back(p.location);
    return out;
}

std::vector<Complex> real_poles_in(std::span<const Complex> poles, double a, double b, double imag_tol) {
    std::vector<Complex> out;
    for (Complex t : poles) {
        if (std::abs(t.imag()) <= imag_tol * (1.0 + std::abs(t)) && t.real() >= a && t.real() <= b) {
            out.push_back(t);
        }
    }
    return out;
}

std::size_t count_spurious(std::span<const PoleInfo> poles) {
    return static_cast<std::size_t>(
        std::count_if(poles.begin(), poles.end(), [](const PoleInfo& p) { return p.spurious; }));
}

double geometric_rate(const FitTrace& trace, std::size_t first_step, std::size_t last_step) {
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    double count = 0.0;
    for (const auto& s : trace) {
        if (s.step < first_step || s.step > last_step || !(s.max_error > 0.0)) continue;
        const double x = static_cast<double>(s.step - 1);
        const double y = -std::log(s.max_error);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        count += 1.0;
    }
    if (count < 2.0) return std::numeric_limits<double>::quiet_NaN();
    const double slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
    return std::exp(slope);
}

std::vector<std::size_t> sigma_increases(const FitTrace& trace, double rel_slack) {
    std::vector<std::size_t> out;
    for (std::size_t k = 1; k < trace.size(); ++k) {
        if (trace[k].sigma_min > trace[k - 1].sigma_min * (1.0 + rel_slack)) out.push_back(trace[k].step);
    }
    return out;
}

std::size_t interpolation_failures(const BarycentricRational& r) {
    std::size_t bad = 0;
    for (std::size_t j = 0; j < r.size(); ++j) {
        if (r.weights()[j] == Complex{}) continue;
        if (r(r.support()[j]) != r.values()[j]) ++bad;
    }
    return bad;
}

}  // namespace analysis

namespace {

using namespace analysis;

std::string num(double x) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << x;
    return os.str();
}

DemoCheck make(std::string name, bool passed, std::string detail) {
    return {std::move(name), passed, std::move(detail)};
}

DemoCheck pole_near(const FitResult& r, Complex target, double tol, const std::string& label) {
    const auto locs = locations(r.poles);
    const double d = nearest_distance(locs, target);
    return make("pole near " + label, d <= tol, "distance " + num(d) + " (limit " + num(tol) + ")");
}

DemoCheck residue_near(const FitResult& r, Complex pole, Complex residue, double tol,
                       const std::string& label) {
    const auto locs = locations(r.poles);
    const std::size_t k = nearest_index(locs, pole);
    if (k == locs.size()) return make("residue at " + label, false, "no poles");
    const double d = std::abs(r.poles[k].residue - residue);
    return make("residue at " + label, d <= tol, "error " + num(d) + " (limit " + num(tol) + ")");
}

std::size_t final_step(const FitResult& r) { return r.trace.empty() ? 0 : r.trace.back().step; }

bool iteration_converged(const DemoRun& run) {
    const double stop_at = run.config.symmetric ? run.config.tol : run.config.tol * run.result.scale;
    return !run.result.trace.empty() && run.result.trace.back().max_error <= stop_at;
}

const TraceStep* trace_at(const FitResult& r, std::size_t step) {
    for (const auto& s : r.trace) {
        if (s.step == step) return &s;
    }
    return nullptr;
}

FitResult refit(const DemoRun& run, std::size_t mmax) {
    FitConfig cfg = run.config;
    cfg.tol = 0.0;
    cfg.mmax = mmax;
    cfg.cleanup_enabled = false;
    return fit(run.samples, cfg);
}

std::vector<DemoCheck> check_spiral(const DemoRun& run) {
    const auto& r = run.result;
    const std::size_t m = final_step(r);
    return {
        make("steps to convergence in [11, 13]", iteration_converged(run) && m >= 11 && m <= 13,
             "m = " + std::to_string(m)),
        make("final error <= 1e-12 scale", r.max_error <= 1e-12 * r.scale, num(r.max_error / r.scale)),
        pole_near(r, {1.0, 0.0}, 1e-13, "1"),
        pole_near(r, {-1.0, 0.0}, 1e-13, "-1"),
        pole_near(r, {3.0, 0.0}, 1e-6, "3"),
        pole_near(r, {-3.0, 0.0}, 1e-6, "-3"),
        pole_near(r, {5.0, 0.0}, 5e-3, "5"),
        pole_near(r, {-5.0, 0.0}, 5e-3, "-5"),
    };
}

std::vector<DemoCheck> check_gamma(const DemoRun& run) {
    const auto& r = run.result;
    const auto t = type_of(r.approximant);
    std::vector<DemoCheck> out = {
        make("type (9,9) +- 1", t.denominator_degree >= 8 && t.denominator_degree <= 10,
             "type (" + std::to_string(t.numerator_degree) + "," + std::to_string(t.denominator_degree) + ")"),
    };
    const double tols[] = {1e-13, 1e-13, 1e-6, 1e-2};
    const double res[] = {1.0, -1.0, 0.5, -1.0 / 6.0};
    for (int k = 0; k < 4; ++k) {
        const Complex p{-static_cast<double>(k), 0.0};
        out.push_back(pole_near(r, p, tols[k], std::to_string(-k)));
        out.push_back(residue_near(r, p, res[k], tols[k], std::to_string(-k)));
    }
    return out;
}

std::vector<DemoCheck> check_froissart(const DemoRun& run) {
    const auto& r = run.result;
    const std::size_t flagged = count_spurious(r.poles);
    if (run.config.tol == 0.0 && !run.config.cleanup_enabled) {
        return {make(">= 30 poles flagged spurious", flagged >= 30, std::to_string(flagged) + " flagged")};
    }
    if (run.config.tol == 0.0) {
        return {make("<= 3 flagged poles after cleanup", flagged <= 3, std::to_string(flagged) + " flagged")};
    }
    std::vector<DemoCheck> out = {make("no poles flagged", flagged == 0, std::to_string(flagged) + " flagged")};
    std::size_t inside = 0;
    for (const auto& p : r.poles) inside += std::abs(p.location) < 1.0 ? 1 : 0;
    out.push_back(make("4 poles inside the unit disk", inside == 4, std::to_string(inside) + " inside"));
    const auto locs = locations(r.poles);
    for (Complex root : {Complex{0.5, 0.0}, Complex{0.0, 0.5}, Complex{-0.5, 0.0}, Complex{0.0, -0.5}}) {
        const double d = nearest_distance(locs, root);
        out.push_back(make("pole near root of 16z^4 = 1", d <= 1e-10, "distance " + num(d)));
    }
    return out;
}

std::vector<DemoCheck> check_bessel(const DemoRun& run) {
    const auto& r = run.result;
    const std::size_t m = final_step(r);
    return {
        make("terminates at m <= 15", iteration_converged(run) && m <= 15, "m = " + std::to_string(m)),
        pole_near(r, {2.404825557695780, 0.0}, 1e-11, "j0,1"),
        pole_near(r, {5.520078110286327, 0.0}, 1e-11, "j0,2"),
        pole_near(r, {8.653727912911013, 0.0}, 1e-11, "j0,3"),
    };
}

std::vector<DemoCheck> check_zeta(const DemoRun& run) {
    const auto& r = run.result;
    const double dz = nearest_distance(r.zeros, {0.5, 14.134725141718});
    return {
        pole_near(r, {1.0, 0.0}, 1e-9, "1"),
        residue_near(r, {1.0, 0.0}, {1.0, 0.0}, 1e-7, "1"),
        make("zero near 1/2 + 14.134725141718i", dz <= 1e-9, "distance " + num(dz)),
    };
}

std::vector<DemoCheck> check_disk_tan(const DemoRun& run) {
    const auto& r = run.result;
    const std::size_t m = final_step(r);
    const TraceStep* s8 = trace_at(r, 8);
    return {
        make("reaches tolerance by m <= 12", iteration_converged(run) && m <= 12, "m = " + std::to_string(m)),
        make("type (7,7) error <= 1e-9", s8 != nullptr && s8->max_error <= 1e-9,
             s8 ? num(s8->max_error) : "no step 8"),
    };
}

std::vector<DemoCheck> check_branch_log(const DemoRun& run) {
    const double rho = geometric_rate(run.result.trace, 6, 15);
    return {make("decay rate over steps 6-15 in [5, 15]", rho >= 5.0 && rho <= 15.0, "rho = " + num(rho))};
}

std::vector<DemoCheck> check_tan_beta(const DemoRun& run, std::size_t max_degree) {
    const auto t = type_of(run.result.approximant);
    return {make("reaches tolerance with type <= (" + std::to_string(max_degree) + "," +
                     std::to_string(max_degree) + ")",
                 iteration_converged(run) && final_step(run.result) <= max_degree + 1,
                 "m = " + std::to_string(final_step(run.result)) + ", type (" +
                     std::to_string(t.numerator_degree) + "," + std::to_string(t.denominator_degree) + ")")};
}

std::vector<DemoCheck> check_sign(const DemoRun& run) {
    const auto& r = run.result;
    const std::size_t m = final_step(r);
    const std::size_t flagged = r.cleanup ? r.cleanup->doublets_before : count_spurious(r.poles);
    const std::size_t after = r.cleanup ? r.cleanup->doublets_after : count_spurious(r.poles);
    return {
        make("converges with m <= 60", iteration_converged(run) && m <= 60, "m = " + std::to_string(m)),
        make("flagged doublets <= 8", flagged <= 8 && after <= 8,
             std::to_string(flagged) + " flagged, " + std::to_string(after) + " after cleanup"),
    };
}

std::vector<DemoCheck> check_abs(const DemoRun& run) {
    std::vector<DemoCheck> out;
    for (std::size_t n = 2; n <= 7; ++n) {
        const auto r = refit(run, n + 1);
        const auto real = real_poles_in(locations(r.poles), -1.0, 1.0);
        if (n % 2 == 0) {
            out.push_back(make("n = " + std::to_string(n) + ": no pole in [-1, 1]", real.empty(),
                               std::to_string(real.size()) + " real poles in [-1, 1]"));
        } else {
            out.push_back(make("n = " + std::to_string(n) + ": a real pole in [-1, 1]", !real.empty(),
                               std::to_string(real.size()) + " real poles in [-1, 1]"));
        }
    }
    return out;
}

std::vector<DemoCheck> check_sqrt(const DemoRun& run) {
    const auto& r = run.result;
    const std::size_t m = final_step(r);
    const auto real = real_poles_in(locations(r.poles), 0.0, 1.0);
    return {
        make("error <= 1e-8 by m <= 50", r.max_error <= 1e-8 && m <= 50,
             "error " + num(r.max_error) + " at m = " + std::to_string(m)),
        make("no poles in [0, 1]", real.empty(), std::to_string(real.size()) + " real poles in [0, 1]"),
    };
}

std::vector<DemoCheck> check_exp(const DemoRun& run) {
    const double h = 1.0 / 9.28903;
    std::vector<DemoCheck> out;
    for (std::size_t n = 4; n <= 12; ++n) {
        const TraceStep* s = trace_at(run.result, n + 1);
        const double bound = 50.0 * 2.0 * std::pow(h, static_cast<double>(n) + 0.5);
        out.push_back(make("n = " + std::to_string(n) + ": error <= 50 * 2 H^(n+1/2)",
                           s != nullptr && s->max_error <= bound,
                           (s ? num(s->max_error) : std::string("no step")) + " vs " + num(bound)));
    }
    return out;
}

FitConfig with(double tol, std::size_t mmax, bool cleanup) {
    FitConfig c;
    c.tol = tol;
    c.mmax = mmax;
    c.cleanup_enabled = cleanup;
    return c;
}

}  // namespace

bool DemoRun::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const DemoCheck& c) { return c.passed; });
}

const std::vector<DemoSpec>& demos() {
    static const std::vector<DemoSpec> registry = [] {
        std::vector<DemoSpec> d;
        const FitConfig def;
        d.push_back({"spiral-tan", "tan(pi z/2) on a 1000-point spiral", "spiral-1000", "tan-pi-half", def,
                     1e4, check_spiral});
        d.push_back({"gamma", "Gamma(x) from 100 points on [-1.5, 1.5]", "interval-gamma", "gamma", def, 1e4,
                     check_gamma});
        d.push_back({"froissart", "log(2+z^4)/(1-16z^4) on 1000 roots of unity", "roots-of-unity-1000",
                     "froissart", def, 1e4, check_froissart});
        d.push_back({"bessel", "1/J0(z) on 2000 random points in a rectangle", "rectangle-random",
                     "inv-bessel-j0", def, 1e4, check_bessel});
        d.push_back({"zeta", "truncated zeta sum on [4-40i, 4+40i]", "zeta-segment", "zeta", def, std::nullopt,
                     check_zeta});
        d.push_back({"disk-tan", "tan(z) on 128 points of the unit circle", "unit-circle-128", "tan", def, 1e4,
                     check_disk_tan});
        d.push_back({"branch-log", "log(1.1 - z) on 256 roots of unity", "roots-of-unity-256", "log-branch",
                     def, 1e4, check_branch_log});
        d.push_back({"tan-4", "tan(4z) on 1000 points of the unit circle", "unit-circle-1000", "tan-4", def, 1e4,
                     [](const DemoRun& r) { return check_tan_beta(r, 22); }});
        d.push_back({"tan-16", "tan(16z) on 1000 points of the unit circle", "unit-circle-1000", "tan-16", def,
                     1e4, [](const DemoRun& r) { return check_tan_beta(r, 36); }});
        d.push_back({"tan-64", "tan(64z) on 1000 points of the unit circle", "unit-circle-1000", "tan-64", def,
                     1e4, [](const DemoRun& r) { return check_tan_beta(r, 57); }});
        d.push_back({"tan-256", "tan(256z) on 1000 points of the unit circle", "unit-circle-1000", "tan-256",
                     def, 1e4, [](const DemoRun& r) { return check_tan_beta(r, 70); }});
        d.push_back({"sign", "sign(Re z) on a square plus a circle", "square-plus-circle", "sign-re", def, 1e4,
                     check_sign});
        d.push_back({"abs", "|x| on 20000 points of [-1, 1], types (n,n) for n = 2..7", "interval-abs", "abs",
                     with(0.0, 8, false), std::nullopt, check_abs});
        d.push_back({"sqrt", "sqrt(x) on 20000 points of [0, 1]", "interval-sqrt", "sqrt", with(1e-11, 50, true),
                     std::nullopt, check_sqrt});
        d.push_back({"exp", "exp(x) on 4000 log-spaced points of [-1e4, -1e-3]", "logspace-negative", "exp",
                     with(1e-12, 100, true), 1e9, check_exp});
        return d;
    }();
    return registry;
}

const DemoSpec& find_demo(std::string_view name) {
    for (const auto& d : demos()) {
        if (d.name == name) return d;
    }
    throw InvalidInput("unknown demo '" + std::string(name) + "'");
}

SampleSet demo_samples(const DemoSpec& spec, std::uint64_t seed) {
    auto z = points::by_name(spec.point_set, seed);
    const auto& target = find_target(spec.target);
    std::vector<Complex> f;
    f.reserve(z.size());
    for (Complex p : z) f.push_back(target.f(p));
    return SampleSet(std::move(z), std::move(f), spec.defaults.symmetric);
}

DemoRun run_demo(const DemoSpec& spec, const FitConfig& config, std::uint64_t seed) {
    auto samples = demo_samples(spec, seed);
    auto result = fit(samples, config);
    DemoRun run{std::move(samples), config, std::move(result), {}};
    run.checks = spec.check(run);

    const auto& r = run.result;
    const auto up = sigma_increases(r.trace);
    std::string sigma_detail = "ok";
    if (!up.empty()) {
        const auto& now = r.trace[up.front() - 1];
        const auto& prev = r.trace[up.front() - 2];
        sigma_detail = std::to_string(up.size()) + " increase(s), first at step " + std::to_string(now.step) + ": " +
                       num(prev.sigma_min) + " -> " + num(now.sigma_min) + ", sigma_min/||A||_F = " +
                       num(now.sigma_min / now.loewner_norm);
    }
    run.checks.push_back(make("sigma_min nonincreasing", up.empty(), sigma_detail));
    const std::size_t bad = interpolation_failures(r.approximant);
    run.checks.push_back(make("exact interpolation at support points", bad == 0,
                              std::to_string(bad) + " mismatches"));

    const auto pruned = r.approximant.pruned();
    double worst_pole = 0.0;
    for (const auto& p : r.poles) {
        worst_pole = std::max(worst_pole, detail::partial_fraction_residual(pruned.support(), pruned.weights(),
                                                                            p.location));
    }
    std::vector<Complex> wf(pruned.size());
    for (std::size_t j = 0; j < pruned.size(); ++j) wf[j] = pruned.weights()[j] * pruned.values()[j];
    double worst_zero = 0.0;
    for (Complex t : r.zeros) {
        const auto& sup = pruned.support();
        if (std::find(sup.begin(), sup.end(), t) != sup.end()) continue;
        worst_zero = std::max(worst_zero, detail::partial_fraction_residual(sup, wf, t));
    }
    run.checks.push_back(make("pole residuals <= 1e-10", worst_pole <= 1e-10, num(worst_pole)));
    run.checks.push_back(make("zero residuals <= 1e-10", worst_zero <= 1e-10, num(worst_zero)));

    if (spec.max_condition && config.condition_diagnostics) {
        double worst = 0.0;
        for (const auto& s : r.trace) worst = std::max(worst, s.cauchy_condition.value_or(0.0));
        run.checks.push_back(make("Cauchy condition <= " + num(*spec.max_condition),
                                  worst <= *spec.max_condition, num(worst)));
    }
    return run;
}

}  // namespace aaa
