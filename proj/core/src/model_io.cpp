#include "aaa/model_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "aaa/errors.hpp"
#include "aaa/samples_io.hpp"

namespace aaa {

namespace {

std::string d17(double x) { return format_double17(x); }

void write_complex(std::ostream& out, Complex z) { out << d17(z.real()) << ' ' << d17(z.imag()); }

// Line-oriented reader that skips blank lines and '#' comments.
class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    std::vector<std::string> next() {
        std::string line;
        while (std::getline(in_, line)) {
            ++lineno_;
            std::istringstream is(line);
            std::vector<std::string> tokens;
            std::string tok;
            while (is >> tok) tokens.push_back(tok);
            if (tokens.empty() || tokens.front().front() == '#') continue;
            return tokens;
        }
        ++lineno_;
        throw ParseError(lineno_, "unexpected end of model file");
    }

    std::vector<std::string> expect(const std::string& key, std::size_t n_values) {
        auto t = next();
        if (t.front() != key) throw fail("expected key '" + key + "', got '" + t.front() + "'");
        if (t.size() != n_values + 1) {
            throw fail("key '" + key + "' takes " + std::to_string(n_values) + " value(s)");
        }
        return {t.begin() + 1, t.end()};
    }

    std::vector<std::string> row(std::size_t n_values) {
        auto t = next();
        if (t.size() != n_values) throw fail("expected " + std::to_string(n_values) + " fields in row");
        return t;
    }

    double real(const std::string& s) const {
        double v = 0.0;
        std::string body = s;
        if (!body.empty() && body.front() == '+') body.erase(0, 1);
        const auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), v);
        if (ec != std::errc{} || ptr != body.data() + body.size()) throw fail("bad number '" + s + "'");
        return v;
    }

    std::size_t count(const std::string& s) const {
        std::size_t v = 0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size()) throw fail("bad count '" + s + "'");
        return v;
    }

    bool flag(const std::string& s) const {
        if (s == "0") return false;
        if (s == "1") return true;
        throw fail("expected 0 or 1, got '" + s + "'");
    }

    ParseError fail(const std::string& what) const { return ParseError(lineno_, what); }

private:
    std::istream& in_;
    std::size_t lineno_ = 0;
};

}  // namespace

ModelFile make_model(const FitResult& result, const FitConfig& config) {
    ModelMetadata meta{config, result.trace.empty() ? 0 : result.trace.back().step, result.converged,
                       result.max_error, result.scale};
    return {kModelFormatVersion, result.approximant, result.poles, result.zeros, meta, result.trace,
            result.cleanup};
}

void write_model(std::ostream& out, const ModelFile& model) {
    const auto& meta = model.metadata;
    const auto& cfg = meta.config;
    const auto& r = model.approximant;
    out << "aaa-model " << model.version << '\n';
    out << "tol " << d17(cfg.tol) << '\n';
    out << "mmax " << cfg.mmax << '\n';
    out << "cleanup_enabled " << (cfg.cleanup_enabled ? 1 : 0) << '\n';
    out << "cleanup_tol " << d17(cfg.cleanup_tol) << '\n';
    out << "symmetric " << (cfg.symmetric ? 1 : 0) << '\n';
    out << "symmetric_scale " << (cfg.symmetric_scale == SymmetricScale::median ? "median" : "unit") << '\n';
    out << "steps " << meta.steps << '\n';
    out << "converged " << (meta.converged ? 1 : 0) << '\n';
    out << "max_error " << d17(meta.max_error) << '\n';
    out << "scale " << d17(meta.scale) << '\n';

    out << "# re_z im_z re_f im_f re_w im_w\n";
    out << "support " << r.size() << '\n';
    for (std::size_t j = 0; j < r.size(); ++j) {
        write_complex(out, r.support()[j]);
        out << ' ';
        write_complex(out, r.values()[j]);
        out << ' ';
        write_complex(out, r.weights()[j]);
        out << '\n';
    }
    out << "# re im re_residue im_residue spurious\n";
    out << "poles " << model.poles.size() << '\n';
    for (const auto& p : model.poles) {
        write_complex(out, p.location);
        out << ' ';
        write_complex(out, p.residue);
        out << ' ' << (p.spurious ? 1 : 0) << '\n';
    }
    out << "zeros " << model.zeros.size() << '\n';
    for (Complex z : model.zeros) {
        write_complex(out, z);
        out << '\n';
    }
    out << "# step sample_index max_error sigma_min loewner_norm cauchy_condition\n";
    out << "trace " << model.trace.size() << '\n';
    for (const auto& s : model.trace) {
        out << s.step << ' ' << s.sample_index << ' ' << d17(s.max_error) << ' ' << d17(s.sigma_min) << ' '
            << d17(s.loewner_norm) << ' '
            << (s.cauchy_condition ? d17(*s.cauchy_condition) : std::string("none")) << '\n';
    }
    out << "cleanup " << (model.cleanup ? 1 : 0) << '\n';
    if (model.cleanup) {
        const auto& c = *model.cleanup;
        out << "cleanup_warning " << (c.warning ? 1 : 0) << '\n';
        out << "doublets_before " << c.doublets_before << '\n';
        out << "doublets_after " << c.doublets_after << '\n';
        out << "removed " << c.removed_support_indices.size() << '\n';
        for (std::size_t idx : c.removed_support_indices) out << idx << '\n';
        out << "flagged " << c.flagged_poles.size() << '\n';
        for (const auto& p : c.flagged_poles) {
            write_complex(out, p.location);
            out << ' ';
            write_complex(out, p.residue);
            out << '\n';
        }
    }
    out << "end\n";
}

ModelFile read_model(std::istream& in) {
    LineReader rd(in);
    auto head = rd.next();
    if (head.size() != 2 || head[0] != "aaa-model") throw rd.fail("not an aaa model file");
    const std::size_t version = rd.count(head[1]);
    if (version != static_cast<std::size_t>(kModelFormatVersion)) {
        throw rd.fail("unknown model format version " + head[1]);
    }
    ModelMetadata meta;
    meta.config.tol = rd.real(rd.expect("tol", 1)[0]);
    meta.config.mmax = rd.count(rd.expect("mmax", 1)[0]);
    meta.config.cleanup_enabled = rd.flag(rd.expect("cleanup_enabled", 1)[0]);
    meta.config.cleanup_tol = rd.real(rd.expect("cleanup_tol", 1)[0]);
    meta.config.symmetric = rd.flag(rd.expect("symmetric", 1)[0]);
    const auto sc = rd.expect("symmetric_scale", 1)[0];
    if (sc == "unit") {
        meta.config.symmetric_scale = SymmetricScale::unit;
    } else if (sc == "median") {
        meta.config.symmetric_scale = SymmetricScale::median;
    } else {
        throw rd.fail("symmetric_scale must be 'unit' or 'median'");
    }
    meta.steps = rd.count(rd.expect("steps", 1)[0]);
    meta.converged = rd.flag(rd.expect("converged", 1)[0]);
    meta.max_error = rd.real(rd.expect("max_error", 1)[0]);
    meta.scale = rd.real(rd.expect("scale", 1)[0]);

    const std::size_t m = rd.count(rd.expect("support", 1)[0]);
    if (m == 0) throw rd.fail("support must have at least one point");
    std::vector<Complex> z(m), f(m), w(m);
    for (std::size_t j = 0; j < m; ++j) {
        const auto t = rd.row(6);
        z[j] = {rd.real(t[0]), rd.real(t[1])};
        f[j] = {rd.real(t[2]), rd.real(t[3])};
        w[j] = {rd.real(t[4]), rd.real(t[5])};
    }
    std::optional<BarycentricRational> r;
    try {
        r.emplace(std::move(z), std::move(f), std::move(w));
    } catch (const std::invalid_argument& e) {
        throw rd.fail(e.what());
    }

    std::vector<PoleInfo> pole_list(rd.count(rd.expect("poles", 1)[0]));
    for (auto& p : pole_list) {
        const auto t = rd.row(5);
        p.location = {rd.real(t[0]), rd.real(t[1])};
        p.residue = {rd.real(t[2]), rd.real(t[3])};
        p.spurious = rd.flag(t[4]);
    }
    std::vector<Complex> zero_list(rd.count(rd.expect("zeros", 1)[0]));
    for (auto& zz : zero_list) {
        const auto t = rd.row(2);
        zz = {rd.real(t[0]), rd.real(t[1])};
    }
    FitTrace trace(rd.count(rd.expect("trace", 1)[0]));
    for (auto& s : trace) {
        const auto t = rd.row(6);
        s.step = rd.count(t[0]);
        s.sample_index = rd.count(t[1]);
        s.max_error = rd.real(t[2]);
        s.sigma_min = rd.real(t[3]);
        s.loewner_norm = rd.real(t[4]);
        if (t[5] != "none") s.cauchy_condition = rd.real(t[5]);
    }
    std::optional<CleanupReport> cleanup;
    if (rd.flag(rd.expect("cleanup", 1)[0])) {
        CleanupReport c;
        c.warning = rd.flag(rd.expect("cleanup_warning", 1)[0]);
        c.doublets_before = rd.count(rd.expect("doublets_before", 1)[0]);
        c.doublets_after = rd.count(rd.expect("doublets_after", 1)[0]);
        c.removed_support_indices.resize(rd.count(rd.expect("removed", 1)[0]));
        for (auto& idx : c.removed_support_indices) idx = rd.count(rd.row(1)[0]);
        c.flagged_poles.resize(rd.count(rd.expect("flagged", 1)[0]));
        for (auto& p : c.flagged_poles) {
            const auto t = rd.row(4);
            p.location = {rd.real(t[0]), rd.real(t[1])};
            p.residue = {rd.real(t[2]), rd.real(t[3])};
            p.spurious = true;
        }
        cleanup = std::move(c);
    }
    rd.expect("end", 0);
    return {static_cast<int>(version), std::move(*r), std::move(pole_list), std::move(zero_list), meta,
            std::move(trace), std::move(cleanup)};
}

void save_model(const std::string& path, const ModelFile& model) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write model file '" + path + "'");
    write_model(out, model);
}

ModelFile load_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open model file '" + path + "'");
    return read_model(in);
}

}  // namespace aaa
