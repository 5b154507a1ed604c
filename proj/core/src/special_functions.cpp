#include "aaa/special_functions.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "aaa/errors.hpp"

namespace aaa {

namespace {

using std::numbers::pi;

// sin(pi z) with the real part reduced to [-1/2, 1/2] first, so integer
// arguments give exact zeros and nearby arguments keep full relative accuracy.
Complex sin_pi(Complex z) {
    const double n = std::round(z.real());
    const Complex frac{z.real() - n, z.imag()};
    const Complex s = std::sin(pi * frac);
    return std::fmod(std::abs(n), 2.0) == 0.0 ? s : -s;
}

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7,
};

}  // namespace

Complex bessel_j0(Complex z) {
    if (!(std::abs(z) <= 12.0)) throw OutOfDomain("bessel_j0: |z| > 12 is outside the validated domain");
    using LComplex = std::complex<long double>;
    const LComplex q = -LComplex(z) * LComplex(z) / 4.0L;
    LComplex term = 1.0L;
    LComplex sum = 1.0L;
    const long double peak = std::abs(q);
    for (int k = 1; k < 200; ++k) {
        term *= q / static_cast<long double>(k * k);
        sum += term;
        const auto kk = static_cast<long double>(k) * k;
        if (kk > peak && std::abs(term) < 1e-18L * std::abs(sum)) break;
    }
    return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

Complex zeta_partial(Complex z) {
    Complex sum{0.0, 0.0};
    for (int k = 100000; k >= 1; --k) sum += std::exp(-z * std::log(static_cast<double>(k)));
    return sum;
}

Complex gamma_fn(Complex x) {
    if (x.imag() == 0.0 && x.real() <= 0.0 && x.real() == std::round(x.real())) {
        return {std::numeric_limits<double>::infinity(), 0.0};
    }
    if (x.real() < 0.5) return pi / (sin_pi(x) * gamma_fn(1.0 - x));
    const Complex z = x - 1.0;
    Complex acc = kLanczos[0];
    for (std::size_t k = 1; k < kLanczos.size(); ++k) acc += kLanczos[k] / (z + static_cast<double>(k));
    const Complex t = z + kLanczosG + 0.5;
    return std::sqrt(2.0 * pi) * std::pow(t, z + 0.5) * std::exp(-t) * acc;
}

const std::vector<Target>& targets() {
    static const std::vector<Target> registry = [] {
        std::vector<Target> t;
        t.push_back({"tan-pi-half", "tan(pi z / 2)", [](Complex z) { return std::tan(pi * z / 2.0); }});
        t.push_back({"tan", "tan(z)", [](Complex z) { return std::tan(z); }});
        for (int beta : {4, 16, 64, 256}) {
            t.push_back({"tan-" + std::to_string(beta), "tan(" + std::to_string(beta) + " z)",
                         [beta](Complex z) { return std::tan(static_cast<double>(beta) * z); }});
        }
        t.push_back({"exp", "exp(z)", [](Complex z) { return std::exp(z); }});
        t.push_back({"log-branch", "log(1.1 - z)", [](Complex z) { return std::log(1.1 - z); }});
        t.push_back({"froissart", "log(2 + z^4) / (1 - 16 z^4)", [](Complex z) {
                         const Complex z4 = z * z * z * z;
                         return std::log(2.0 + z4) / (1.0 - 16.0 * z4);
                     }});
        t.push_back({"sign-re", "sign(Re z)", [](Complex z) {
                         return Complex{z.real() > 0.0 ? 1.0 : (z.real() < 0.0 ? -1.0 : 0.0), 0.0};
                     }});
        t.push_back({"abs", "|x| (absolute value of the real part)",
                     [](Complex z) { return Complex{std::abs(z.real()), 0.0}; }});
        t.push_back({"sqrt", "sqrt(z), principal branch", [](Complex z) { return std::sqrt(z); }});
        t.push_back({"gamma", "Gamma(z)", [](Complex z) { return gamma_fn(z); }});
        t.push_back({"inv-bessel-j0", "1 / J0(z)", [](Complex z) { return 1.0 / bessel_j0(z); }});
        t.push_back({"zeta", "sum_{k=1}^{1e5} k^-z", [](Complex z) { return zeta_partial(z); }});
        return t;
    }();
    return registry;
}

const Target& find_target(std::string_view name) {
    for (const auto& t : targets()) {
        if (t.name == name) return t;
    }
    throw InvalidInput("unknown target function '" + std::string(name) + "'");
}

}  // namespace aaa
