#include "aaa/point_sets.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "aaa/errors.hpp"

namespace aaa::points {

using std::numbers::pi;

std::vector<Complex> linspace(Complex a, Complex b, std::size_t n) {
    std::vector<Complex> out(n);
    if (n == 0) return out;
    if (n == 1) {
        out[0] = b;
        return out;
    }
    const Complex step = (b - a) / static_cast<double>(n - 1);
    for (std::size_t k = 0; k + 1 < n; ++k) out[k] = a + static_cast<double>(k) * step;
    out[n - 1] = b;
    return out;
}

std::vector<Complex> spiral(std::size_t n) {
    auto out = linspace({-0.5, 0.0}, {0.5, 15.0 * pi}, n);
    for (auto& z : out) z = std::exp(z);
    return out;
}

std::vector<Complex> roots_of_unity(std::size_t n) {
    std::vector<Complex> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        if ((4 * k) % n == 0) {
            static constexpr Complex quarter[] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
            out[k] = quarter[(4 * k) / n];
        } else {
            out[k] = std::polar(1.0, 2.0 * pi * static_cast<double>(k) / static_cast<double>(n));
        }
    }
    return out;
}

std::vector<Complex> unit_circle(std::size_t n) { return roots_of_unity(n); }

std::vector<Complex> rectangle_random(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> x(0.0, 10.0);
    std::uniform_real_distribution<double> y(-1.0, 1.0);
    std::vector<Complex> out;
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double re = x(gen);
        const double im = y(gen);
        out.emplace_back(re, im);
    }
    return out;
}

std::vector<Complex> square_plus_circle(std::size_t n_each) {
    std::vector<Complex> out;
    out.reserve(2 * n_each);
    // Perimeter of length 8 walked counterclockwise from the corner -2.5 - i.
    const Complex corners[] = {{-2.5, -1.0}, {-0.5, -1.0}, {-0.5, 1.0}, {-2.5, 1.0}};
    for (std::size_t k = 0; k < n_each; ++k) {
        const double s = 4.0 * static_cast<double>(k) / static_cast<double>(n_each);
        const auto side = static_cast<std::size_t>(s);
        const double frac = s - static_cast<double>(side);
        const Complex from = corners[side];
        const Complex to = corners[(side + 1) % 4];
        out.push_back(from + frac * (to - from));
    }
    for (std::size_t k = 0; k < n_each; ++k) {
        out.push_back(Complex{1.5, 0.0} +
                      std::polar(1.0, 2.0 * pi * static_cast<double>(k) / static_cast<double>(n_each)));
    }
    return out;
}

std::vector<Complex> equispaced_interval(std::size_t n, double a, double b) {
    return linspace({a, 0.0}, {b, 0.0}, n);
}

std::vector<Complex> logspace_negative(std::size_t n, double hi_exp, double lo_exp) {
    auto t = linspace({hi_exp, 0.0}, {lo_exp, 0.0}, n);
    std::vector<Complex> out(n);
    for (std::size_t k = 0; k < n; ++k) out[k] = -std::pow(10.0, t[k].real());
    return out;
}

std::vector<Complex> zeta_segment(std::size_t n) { return linspace({4.0, -40.0}, {4.0, 40.0}, n); }

const std::vector<PointSetInfo>& registry() {
    static const std::vector<PointSetInfo> sets = {
        {"spiral-1000", "exp(linspace(-0.5, 0.5 + 15 pi i, 1000)), 7.5 turns"},
        {"unit-circle-128", "128 equispaced points on |z| = 1"},
        {"roots-of-unity-256", "256th roots of unity"},
        {"roots-of-unity-1000", "1000th roots of unity"},
        {"unit-circle-1000", "1000 equispaced points on |z| = 1"},
        {"rectangle-random", "2000 seeded uniform points in [0, 10] x [-1, 1]"},
        {"square-plus-circle", "1000 points on a square around -1.5 and 1000 on a circle around 1.5"},
        {"interval-gamma", "100 equispaced points on [-1.5, 1.5]"},
        {"interval-abs", "20000 equispaced points on [-1, 1]"},
        {"interval-sqrt", "20000 equispaced points on [0, 1]"},
        {"logspace-negative", "4000 points logarithmically spaced from -1e4 to -1e-3"},
        {"zeta-segment", "100 points on [4 - 40i, 4 + 40i]"},
    };
    return sets;
}

std::vector<Complex> by_name(std::string_view name, std::uint64_t seed) {
    if (name == "spiral-1000") return spiral(1000);
    if (name == "unit-circle-128") return unit_circle(128);
    if (name == "roots-of-unity-256") return roots_of_unity(256);
    if (name == "roots-of-unity-1000") return roots_of_unity(1000);
    if (name == "unit-circle-1000") return unit_circle(1000);
    if (name == "rectangle-random") return rectangle_random(2000, seed);
    if (name == "square-plus-circle") return square_plus_circle(1000);
    if (name == "interval-gamma") return equispaced_interval(100, -1.5, 1.5);
    if (name == "interval-abs") return equispaced_interval(20000, -1.0, 1.0);
    if (name == "interval-sqrt") return equispaced_interval(20000, 0.0, 1.0);
    if (name == "logspace-negative") return logspace_negative(4000);
    if (name == "zeta-segment") return zeta_segment(100);
    throw InvalidInput("unknown point set '" + std::string(name) + "'");
}

}  // namespace aaa::points
