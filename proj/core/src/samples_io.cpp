#include "aaa/samples_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "aaa/errors.hpp"

namespace aaa {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

bool parse_real(std::string text, double& out) {
    text = trim(text);
    if (!text.empty() && text.front() == '+') text.erase(0, 1);
    if (text.empty()) return false;
    const char* first = text.data();
    const char* last = first + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last;
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(line);
    while (std::getline(is, cur, sep)) out.push_back(trim(cur));
    if (!line.empty() && line.back() == sep) out.emplace_back();
    return out;
}

}  // namespace

std::string format_double(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

std::string format_double17(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::scientific, 16);
    return std::string(buf, res.ptr);
}

SampleColumns read_samples_csv(std::istream& in) {
    SampleColumns out;
    std::string line;
    std::size_t lineno = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (lineno == 1 && line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) line.erase(0, 3);
        const std::string t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        if (!header_seen) {
            const auto cols = split(t, ',');
            if (cols != std::vector<std::string>{"re_z", "im_z", "re_f", "im_f"}) {
                throw ParseError(lineno, "expected header 're_z,im_z,re_f,im_f'");
            }
            header_seen = true;
            continue;
        }
        const auto cols = split(t, ',');
        if (cols.size() != 4) {
            throw ParseError(lineno, "expected 4 comma-separated fields, got " + std::to_string(cols.size()));
        }
        double v[4];
        for (int k = 0; k < 4; ++k) {
            if (!parse_real(cols[static_cast<std::size_t>(k)], v[k])) {
                throw ParseError(lineno, "cannot parse number '" + cols[static_cast<std::size_t>(k)] + "'");
            }
        }
        out.points.emplace_back(v[0], v[1]);
        out.values.emplace_back(v[2], v[3]);
    }
    if (!header_seen) throw ParseError(lineno == 0 ? 1 : lineno, "missing header 're_z,im_z,re_f,im_f'");
    return out;
}

SampleColumns load_samples_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open samples file '" + path + "'");
    return read_samples_csv(in);
}

void write_samples_csv(std::ostream& out, std::span<const Complex> points, std::span<const Complex> values) {
    if (points.size() != values.size()) throw ShapeError("write_samples_csv: length mismatch");
    out << "re_z,im_z,re_f,im_f\n";
    for (std::size_t i = 0; i < points.size(); ++i) {
        out << format_double(points[i].real()) << ',' << format_double(points[i].imag()) << ','
            << format_double(values[i].real()) << ',' << format_double(values[i].imag()) << '\n';
    }
}

Complex parse_complex(const std::string& text) {
    std::string s;
    for (char c : text) {
        if (c != ' ' && c != '\t' && c != '\r') s.push_back(c);
    }
    if (s.empty()) throw InvalidInput("empty complex literal");
    const auto bad = [&] { return InvalidInput("cannot parse complex literal '" + text + "'"); };
    const char last = s.back();
    if (last != 'i' && last != 'j') {
        double re = 0.0;
        if (!parse_real(s, re)) throw bad();
        return {re, 0.0};
    }
    s.pop_back();
    std::size_t split_at = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
            split_at = k;
            break;
        }
    }
    const auto imag_part = [&](const std::string& t) {
        if (t.empty() || t == "+") return 1.0;
        if (t == "-") return -1.0;
        double v = 0.0;
        if (!parse_real(t, v)) throw bad();
        return v;
    };
    if (split_at == std::string::npos) return {0.0, imag_part(s)};
    double re = 0.0;
    if (!parse_real(s.substr(0, split_at), re)) throw bad();
    return {re, imag_part(s.substr(split_at))};
}

std::vector<Complex> read_points(std::istream& in) {
    std::vector<Complex> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t.front() == '#' || t == "re_z,im_z") continue;
        try {
            std::string body = t;
            for (char& c : body) {
                if (c == '\t') c = ' ';
            }
            const auto comma = body.find(',');
            const auto space = body.find(' ');
            if (comma != std::string::npos || space != std::string::npos) {
                const auto at = comma != std::string::npos ? comma : space;
                double re = 0.0;
                double im = 0.0;
                if (!parse_real(body.substr(0, at), re) || !parse_real(body.substr(at + 1), im)) {
                    throw InvalidInput("expected 're,im'");
                }
                out.emplace_back(re, im);
            } else {
                out.push_back(parse_complex(body));
            }
        } catch (const InvalidInput& e) {
            throw ParseError(lineno, e.what());
        }
    }
    return out;
}

}  // namespace aaa
