#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "aaa/linalg.hpp"

namespace aaa {

/// Rational function in barycentric form
///
///            sum_j w_j f_j / (z - z_j)
///     r(z) = -------------------------
///            sum_j w_j     / (z - z_j)
///
/// of type (m-1, m-1), where m counts the nonzero weights. Immutable once
/// constructed; the constructor enforces equal lengths, distinct finite
/// support points, finite values and weights, and at least one nonzero weight.
class BarycentricRational {
public:
    BarycentricRational(std::vector<Complex> support, std::vector<Complex> values,
                        std::vector<Complex> weights);

    const std::vector<Complex>& support() const noexcept { return support_; }
    const std::vector<Complex>& values() const noexcept { return values_; }
    const std::vector<Complex>& weights() const noexcept { return weights_; }
    std::size_t size() const noexcept { return support_.size(); }

    /// r(z). Returns f_j exactly when z == z_j and w_j != 0; otherwise the
    /// quotient of the two partial-fraction sums. Zero-weight terms are skipped.
    Complex operator()(Complex z) const;

    std::vector<Complex> evaluate(std::span<const Complex> zs) const;

    Complex numerator(Complex z) const;
    Complex denominator(Complex z) const;
    /// d'(z) = -sum_j w_j / (z - z_j)^2
    Complex denominator_derivative(Complex z) const;

    /// Copy without the zero-weight terms.
    BarycentricRational pruned() const;

private:
    std::vector<Complex> support_;
    std::vector<Complex> values_;
    std::vector<Complex> weights_;
};

struct PoleInfo {
    Complex location;
    Complex residue;
    bool spurious = false;
};

struct RationalType {
    std::size_t numerator_degree = 0;
    std::size_t denominator_degree = 0;
    friend bool operator==(const RationalType&, const RationalType&) = default;
};

/// Zeros of d, via the arrowhead pencil on the nonzero-weight terms.
std::vector<Complex> poles(const BarycentricRational& r);

/// Same as poles() but also reports how many pencil eigenvalues were discarded.
ArrowheadSpectrum pole_spectrum(const BarycentricRational& r);

/// Zeros of n, plus the support points that interpolate the value zero.
std::vector<Complex> zeros(const BarycentricRational& r);

/// n(t)/d'(t) at each simple pole t. Throws DegeneratePole if d'(t) == 0.
std::vector<Complex> residues(const BarycentricRational& r, std::span<const Complex> pole_list);

RationalType type_of(const BarycentricRational& r);

}  // namespace aaa
