#include "cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "aaa/demos.hpp"
#include "aaa/errors.hpp"
#include "aaa/model_io.hpp"
#include "aaa/point_sets.hpp"
#include "aaa/samples_io.hpp"
#include "aaa/special_functions.hpp"

namespace aaa::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string opt_number(const std::optional<double>& x) {
    return x ? format_double17(*x) : std::string("none");
}

void write_convergence_csv(const fs::path& path, const FitTrace& trace) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    out << "step,sample_index,max_error,sigma_min,cauchy_condition\n";
    for (const auto& s : trace) {
        out << s.step << ',' << s.sample_index << ',' << format_double17(s.max_error) << ','
            << format_double17(s.sigma_min) << ',' << opt_number(s.cauchy_condition) << '\n';
    }
}

void write_error_csv(const fs::path& path, const SampleSet& samples, const BarycentricRational& r) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    out << "re_z,im_z,abs_error\n";
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const Complex z = samples.points()[i];
        out << format_double(z.real()) << ',' << format_double(z.imag()) << ','
            << format_double17(std::abs(samples.values()[i] - r(z))) << '\n';
    }
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json fit_summary(const FitResult& r) {
    const auto t = type_of(r.approximant);
    json poles = json::array();
    for (const auto& p : r.poles) {
        poles.push_back({{"location", complex_json(p.location)},
                         {"residue", complex_json(p.residue)},
                         {"spurious", p.spurious}});
    }
    json zeros = json::array();
    for (Complex z : r.zeros) zeros.push_back(complex_json(z));
    json out = {{"steps", r.trace.empty() ? 0 : r.trace.back().step},
                {"converged", r.converged},
                {"max_error", r.max_error},
                {"scale", r.scale},
                {"type", json::array({t.numerator_degree, t.denominator_degree})},
                {"support_indices", r.support_indices},
                {"poles", poles},
                {"zeros", zeros}};
    if (r.cleanup) {
        json flagged = json::array();
        for (const auto& p : r.cleanup->flagged_poles) flagged.push_back(complex_json(p.location));
        out["cleanup"] = {{"doublets_before", r.cleanup->doublets_before},
                          {"doublets_after", r.cleanup->doublets_after},
                          {"removed_support_indices", r.cleanup->removed_support_indices},
                          {"flagged_poles", flagged},
                          {"warning", r.cleanup->warning}};
    }
    return out;
}

void print_summary(std::ostream& out, const FitResult& r) {
    const auto t = type_of(r.approximant);
    out << "steps " << (r.trace.empty() ? 0 : r.trace.back().step) << ", type (" << t.numerator_degree << ","
        << t.denominator_degree << "), max error " << format_double(r.max_error) << " (scale "
        << format_double(r.scale) << "), " << (r.converged ? "converged" : "not converged") << '\n';
    std::size_t spurious = 0;
    for (const auto& p : r.poles) spurious += p.spurious ? 1 : 0;
    out << r.poles.size() << " poles (" << spurious << " flagged spurious), " << r.zeros.size() << " zeros\n";
    if (r.cleanup && r.cleanup->doublets_before > 0) {
        out << "cleanup removed " << r.cleanup->removed_support_indices.size() << " support points ("
            << r.cleanup->doublets_before << " doublets before, " << r.cleanup->doublets_after << " after)\n";
    }
}

void ensure_dir(const std::string& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw std::runtime_error("cannot create directory '" + dir + "': " + ec.message());
}

void add_fit_flags(CLI::App* sub, FitFlags& flags) {
    sub->add_option("--tol", flags.tol, "Relative convergence tolerance (default 1e-13)");
    sub->add_option("--mmax", flags.mmax, "Maximum number of support points (default 100)");
    sub->add_flag("--no-cleanup", flags.no_cleanup, "Skip spurious-pole cleanup");
    sub->add_option("--cleanup-tol", flags.cleanup_tol, "Relative residue threshold for cleanup (default 1e-13)");
    sub->add_flag("--symmetric", flags.symmetric, "Treat large and small values symmetrically");
    sub->add_option("--scale", flags.scale, "Symmetric-mode threshold: unit or median")
        ->check(CLI::IsMember({"unit", "median"}));
    sub->add_flag("--diag-cond", flags.diag_cond, "Record Cauchy-matrix condition numbers per step");
}

}  // namespace

FitConfig FitFlags::apply(FitConfig base) const {
    if (tol) base.tol = *tol;
    if (mmax) base.mmax = *mmax;
    if (no_cleanup) base.cleanup_enabled = false;
    if (cleanup_tol) base.cleanup_tol = *cleanup_tol;
    if (symmetric) base.symmetric = true;
    if (scale) base.symmetric_scale = *scale == "median" ? SymmetricScale::median : SymmetricScale::unit;
    if (diag_cond) base.condition_diagnostics = true;
    return base;
}

int cmd_fit(const FitCommand& cmd, std::ostream& out, std::ostream& err) {
    SampleColumns cols;
    try {
        cols = load_samples_csv(cmd.samples_path);
    } catch (const ParseError& e) {
        err << cmd.samples_path << ": " << e.what() << '\n';
        return kInputError;
    } catch (const std::exception& e) {
        err << e.what() << '\n';
        return kInputError;
    }
    if (cols.points.size() < 4) {
        err << cmd.samples_path << ": need at least 4 samples, got " << cols.points.size() << '\n';
        return kInputError;
    }
    const FitConfig config = cmd.flags.apply({});
    try {
        SampleSet samples(std::move(cols.points), std::move(cols.values), config.symmetric);
        const auto result = fit(samples, config);
        ensure_dir(cmd.out_dir);
        save_model((fs::path(cmd.out_dir) / "model.aaa").string(), make_model(result, config));
        write_convergence_csv(fs::path(cmd.out_dir) / "convergence.csv", result.trace);
        print_summary(out, result);
    } catch (const std::exception& e) {
        err << "fit failed: " << e.what() << '\n';
        return kInputError;
    }
    return kOk;
}

int cmd_eval(const EvalCommand& cmd, std::ostream& out, std::ostream& err) {
    try {
        const auto model = load_model(cmd.model_path);
        std::vector<Complex> zs;
        if (cmd.points_path) {
            std::ifstream in(*cmd.points_path);
            if (!in) throw std::runtime_error("cannot open points file '" + *cmd.points_path + "'");
            zs = read_points(in);
        }
        for (const auto& s : cmd.inline_points) zs.push_back(parse_complex(s));
        const auto values = model.approximant.evaluate(zs);
        // Adding +0.0 prints a signed zero from the arithmetic as plain 0.
        const auto cell = [](double x) { return format_double(x + 0.0); };
        out << "re_z,im_z,re_r,im_r\n";
        for (std::size_t k = 0; k < zs.size(); ++k) {
            out << cell(zs[k].real()) << ',' << cell(zs[k].imag()) << ',' << cell(values[k].real()) << ','
                << cell(values[k].imag()) << '\n';
        }
    } catch (const std::exception& e) {
        err << "eval failed: " << e.what() << '\n';
        return kInputError;
    }
    return kOk;
}

int cmd_demo(const DemoCommand& cmd, std::ostream& out, std::ostream& err) {
    const DemoSpec* spec = nullptr;
    try {
        spec = &find_demo(cmd.name);
    } catch (const InvalidInput& e) {
        err << e.what() << " (try 'aaa list')\n";
        return kUsageError;
    }
    const FitConfig config = cmd.flags.apply(spec->defaults);
    try {
        const auto run = run_demo(*spec, config, cmd.seed);
        ensure_dir(cmd.out_dir);
        const fs::path dir(cmd.out_dir);
        {
            std::ofstream s(dir / "samples.csv");
            write_samples_csv(s, run.samples.points(), run.samples.values());
        }
        save_model((dir / "model.aaa").string(), make_model(run.result, config));
        write_convergence_csv(dir / "convergence.csv", run.result.trace);
        write_error_csv(dir / "error.csv", run.samples, run.result.approximant);

        json checks = json::array();
        for (const auto& c : run.checks) {
            checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        }
        json report = {{"demo", spec->name},   {"description", spec->description},
                       {"seed", cmd.seed},     {"tol", config.tol},
                       {"mmax", config.mmax},  {"cleanup", config.cleanup_enabled},
                       {"symmetric", config.symmetric},
                       {"fit", fit_summary(run.result)},
                       {"checks", checks},     {"passed", run.passed()}};
        std::ofstream(dir / "report.json") << report.dump(2) << '\n';

        out << "demo " << spec->name << ": " << spec->description << '\n';
        print_summary(out, run.result);
        for (const auto& c : run.checks) {
            out << (c.passed ? "  PASS  " : "  FAIL  ") << c.name << "  [" << c.detail << "]\n";
        }
        return run.passed() ? kOk : kCheckFailed;
    } catch (const std::exception& e) {
        err << "demo failed: " << e.what() << '\n';
        return kInputError;
    }
}

int cmd_list(std::ostream& out) {
    out << "demos:\n";
    for (const auto& d : demos()) out << "  " << d.name << "  " << d.description << '\n';
    out << "point sets:\n";
    for (const auto& p : points::registry()) out << "  " << p.name << "  " << p.description << '\n';
    out << "targets:\n";
    for (const auto& t : targets()) out << "  " << t.name << "  " << t.description << '\n';
    return kOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"AAA rational approximation"};
    app.require_subcommand(1);

    FitCommand fit_cmd;
    auto* fit_sub = app.add_subcommand("fit", "Fit a rational approximant to sampled data");
    fit_sub->add_option("samples", fit_cmd.samples_path, "CSV file with header re_z,im_z,re_f,im_f")
        ->required();
    fit_sub->add_option("--out", fit_cmd.out_dir, "Output directory (model.aaa, convergence.csv)");
    add_fit_flags(fit_sub, fit_cmd.flags);

    EvalCommand eval_cmd;
    auto* eval_sub = app.add_subcommand("eval", "Evaluate a saved model");
    eval_sub->add_option("model", eval_cmd.model_path, "Model file written by 'fit' or 'demo'")->required();
    eval_sub->add_option("--points", eval_cmd.points_path, "File with one complex point per line");
    eval_sub->add_option("--at", eval_cmd.inline_points, "Inline points, e.g. --at 2 0.5 -3i");

    DemoCommand demo_cmd;
    auto* demo_sub = app.add_subcommand("demo", "Run a bundled demo and check its expected bounds");
    demo_sub->add_option("name", demo_cmd.name, "Demo name (see 'aaa list')")->required();
    demo_sub->add_option("--out", demo_cmd.out_dir, "Output directory");
    demo_sub->add_option("--seed", demo_cmd.seed, "Seed for random point sets");
    add_fit_flags(demo_sub, demo_cmd.flags);

    auto* list_sub = app.add_subcommand("list", "List demos, point sets and target functions");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsageError;
    }

    if (fit_sub->parsed()) return cmd_fit(fit_cmd, out, err);
    if (eval_sub->parsed()) return cmd_eval(eval_cmd, out, err);
    if (demo_sub->parsed()) return cmd_demo(demo_cmd, out, err);
    if (list_sub->parsed()) return cmd_list(out);
    return kUsageError;
}

}  // namespace aaa::cli
