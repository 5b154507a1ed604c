#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "aaa/linalg.hpp"

namespace aaa::points {

/// n points a + k (b - a)/(n - 1), k = 0..n-1, last point exactly b.
std::vector<Complex> linspace(Complex a, Complex b, std::size_t n);

/// exp(linspace(-0.5, 0.5 + 15 pi i, n)): a spiral winding 7.5 times.
std::vector<Complex> spiral(std::size_t n = 1000);

/// exp(2 pi i k / n), k = 0..n-1. Quarter-turn points are exact.
std::vector<Complex> roots_of_unity(std::size_t n);

/// Same set as roots_of_unity.
std::vector<Complex> unit_circle(std::size_t n);

/// n uniform random points in the rectangle with corners -i, 10 - i, 10 + i, i.
/// Deterministic for a given seed with this build's standard library.
std::vector<Complex> rectangle_random(std::size_t n, std::uint64_t seed);

/// n_each points equally spaced around the square centred at -1.5 with side 2,
/// followed by n_each points on the circle centred at 1.5 with radius 1.
std::vector<Complex> square_plus_circle(std::size_t n_each = 1000);

/// n real points equally spaced on [a, b].
std::vector<Complex> equispaced_interval(std::size_t n, double a, double b);

/// n real points -10^t with t equally spaced from hi_exp down to lo_exp.
std::vector<Complex> logspace_negative(std::size_t n = 4000, double hi_exp = 4.0, double lo_exp = -3.0);

/// linspace(4 - 40i, 4 + 40i, n).
std::vector<Complex> zeta_segment(std::size_t n = 100);

struct PointSetInfo {
    std::string name;
    std::string description;
};

const std::vector<PointSetInfo>& registry();

/// Named point set with its default parameters. Throws InvalidInput for an
/// unknown name.
std::vector<Complex> by_name(std::string_view name, std::uint64_t seed = 0);

}  // namespace aaa::points
