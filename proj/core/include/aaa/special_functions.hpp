#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "aaa/linalg.hpp"

namespace aaa {

/// Bessel function J0 by its power series, summed in extended precision.
/// Validated for |z| <= 12; throws OutOfDomain beyond that.
Complex bessel_j0(Complex z);

/// Truncated zeta sum over k = 100000 down to 1 of k^-z.
Complex zeta_partial(Complex z);

/// Gamma function: Lanczos approximation (g = 7, 9 terms) with reflection
/// for Re(x) < 1/2. Non-finite at the poles 0, -1, -2, ...
Complex gamma_fn(Complex x);

using TargetFunction = std::function<Complex(Complex)>;

struct Target {
    std::string name;
    std::string description;
    TargetFunction f;
};

/// Registered target functions, in a fixed order.
const std::vector<Target>& targets();

/// Throws InvalidInput for an unknown name.
const Target& find_target(std::string_view name);

}  // namespace aaa
