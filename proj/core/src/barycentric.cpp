#include "aaa/barycentric.hpp"

#include <algorithm>
#include <cmath>

#include "aaa/errors.hpp"

namespace aaa {

namespace {

bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

BarycentricRational::BarycentricRational(std::vector<Complex> support, std::vector<Complex> values,
                                         std::vector<Complex> weights)
    : support_(std::move(support)), values_(std::move(values)), weights_(std::move(weights)) {
    const std::size_t m = support_.size();
    if (m == 0) throw InvalidInput("BarycentricRational: empty support");
    if (values_.size() != m || weights_.size() != m) {
        throw ShapeError("BarycentricRational: support, values and weights differ in length");
    }
    bool any_nonzero = false;
    for (std::size_t j = 0; j < m; ++j) {
        if (!is_finite(support_[j]) || !is_finite(values_[j]) || !is_finite(weights_[j])) {
            throw InvalidInput("BarycentricRational: non-finite entry at index " + std::to_string(j));
        }
        any_nonzero = any_nonzero || weights_[j] != Complex{};
    }
    if (!any_nonzero) throw InvalidInput("BarycentricRational: all weights are zero");
    std::vector<Complex> sorted(support_);
    std::sort(sorted.begin(), sorted.end(), [](Complex a, Complex b) {
        return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
    });
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw InvalidInput("BarycentricRational: support points must be distinct");
    }
}

Complex BarycentricRational::operator()(Complex z) const {
    Complex num{0.0, 0.0};
    Complex den{0.0, 0.0};
    for (std::size_t j = 0; j < support_.size(); ++j) {
        if (weights_[j] == Complex{}) continue;
        if (z == support_[j]) return values_[j];
        const Complex c = weights_[j] / (z - support_[j]);
        num += c * values_[j];
        den += c;
    }
    return num / den;
}

std::vector<Complex> BarycentricRational::evaluate(std::span<const Complex> zs) const {
    std::vector<Complex> out;
    out.reserve(zs.size());
    for (Complex z : zs) out.push_back((*this)(z));
    return out;
}

Complex BarycentricRational::numerator(Complex z) const {
    Complex num{0.0, 0.0};
    for (std::size_t j = 0; j < support_.size(); ++j) {
        if (weights_[j] == Complex{}) continue;
        num += weights_[j] * values_[j] / (z - support_[j]);
    }
    return num;
}

Complex BarycentricRational::denominator(Complex z) const {
    Complex den{0.0, 0.0};
    for (std::size_t j = 0; j < support_.size(); ++j) {
        if (weights_[j] == Complex{}) continue;
        den += weights_[j] / (z - support_[j]);
    }
    return den;
}

Complex BarycentricRational::denominator_derivative(Complex z) const {
    Complex d{0.0, 0.0};
    for (std::size_t j = 0; j < support_.size(); ++j) {
        if (weights_[j] == Complex{}) continue;
        const Complex dz = z - support_[j];
        d -= weights_[j] / (dz * dz);
    }
    return d;
}

BarycentricRational BarycentricRational::pruned() const {
    std::vector<Complex> z;
    std::vector<Complex> f;
    std::vector<Complex> w;
    for (std::size_t j = 0; j < support_.size(); ++j) {
        if (weights_[j] == Complex{}) continue;
        z.push_back(support_[j]);
        f.push_back(values_[j]);
        w.push_back(weights_[j]);
    }
    return {std::move(z), std::move(f), std::move(w)};
}

ArrowheadSpectrum pole_spectrum(const BarycentricRational& r) {
    const auto p = r.pruned();
    if (p.size() == 1) return {{}, 2};
    return arrowhead_spectrum(p.support(), p.weights());
}

std::vector<Complex> poles(const BarycentricRational& r) { return pole_spectrum(r).finite; }

std::vector<Complex> zeros(const BarycentricRational& r) {
    const auto p = r.pruned();
    std::vector<Complex> nodes;
    std::vector<Complex> coeffs;
    std::vector<Complex> out;
    for (std::size_t j = 0; j < p.size(); ++j) {
        const Complex wf = p.weights()[j] * p.values()[j];
        if (wf == Complex{}) {
            // n has no term here, but r interpolates 0 at this support point.
            if (p.values()[j] == Complex{}) out.push_back(p.support()[j]);
            continue;
        }
        nodes.push_back(p.support()[j]);
        coeffs.push_back(wf);
    }
    if (nodes.size() >= 2) {
        for (Complex t : arrowhead_finite_eigenvalues(nodes, coeffs)) {
            if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
        }
    }
    return out;
}

std::vector<Complex> residues(const BarycentricRational& r, std::span<const Complex> pole_list) {
    const auto p = r.pruned();
    std::vector<Complex> out;
    out.reserve(pole_list.size());
    for (Complex t : pole_list) {
        const Complex dprime = p.denominator_derivative(t);
        if (dprime == Complex{} || !std::isfinite(std::abs(dprime))) {
            throw DegeneratePole("residues: d'(t) is zero or non-finite at a requested pole");
        }
        out.push_back(p.numerator(t) / dprime);
    }
    return out;
}

RationalType type_of(const BarycentricRational& r) {
    const auto m = static_cast<std::size_t>(
        std::count_if(r.weights().begin(), r.weights().end(), [](Complex w) { return w != Complex{}; }));
    return {m - 1, m - 1};
}

}  // namespace aaa
