#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include <Eigen/Eigenvalues>

namespace oracle {

MinSingular min_singular(const ComplexMatrix& a) {
    const ComplexMatrix gram = a.adjoint() * a;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(gram);
    MinSingular out;
    out.sigma = std::sqrt(std::max(eig.eigenvalues()(0), 0.0));
    out.v = eig.eigenvectors().col(0);
    return out;
}

std::vector<Complex> partial_fraction_zeros(const std::vector<Complex>& nodes,
                                            const std::vector<Complex>& coeffs, double rel_drop) {
    const std::size_t m = nodes.size();
    // p[k] is the coefficient of z^k.
    std::vector<Complex> p(m, Complex{});
    for (std::size_t j = 0; j < m; ++j) {
        std::vector<Complex> q{Complex{1.0, 0.0}};
        for (std::size_t k = 0; k < m; ++k) {
            if (k == j) continue;
            std::vector<Complex> next(q.size() + 1, Complex{});
            for (std::size_t i = 0; i < q.size(); ++i) {
                next[i + 1] += q[i];
                next[i] -= nodes[k] * q[i];
            }
            q = std::move(next);
        }
        for (std::size_t i = 0; i < q.size(); ++i) p[i] += coeffs[j] * q[i];
    }
    double big = 0.0;
    for (Complex c : p) big = std::max(big, std::abs(c));
    while (!p.empty() && std::abs(p.back()) <= rel_drop * big) p.pop_back();
    if (p.size() < 2) return {};
    const auto deg = static_cast<Eigen::Index>(p.size() - 1);
    ComplexMatrix companion = ComplexMatrix::Zero(deg, deg);
    for (Eigen::Index i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
    for (Eigen::Index i = 0; i < deg; ++i) companion(i, deg - 1) = -p[static_cast<std::size_t>(i)] / p.back();
    Eigen::ComplexEigenSolver<ComplexMatrix> eig(companion);
    std::vector<Complex> out(eig.eigenvalues().data(), eig.eigenvalues().data() + deg);
    return out;
}

Complex bessel_j0_series(Complex z) {
    const Complex q = -z * z / 4.0;
    Complex term{1.0, 0.0};
    Complex sum = term;
    for (int k = 1; k < 50; ++k) {
        term *= q / static_cast<double>(k * k);
        sum += term;
    }
    return sum;
}

double gamma_trapezoid(double x) {
    if (x < 1.0) return gamma_trapezoid(x + 1.0) / x;
    // The integrand decays like e^{x s} to the left and doubly exponentially to
    // the right, and is analytic in a strip, so the trapezoidal rule converges
    // geometrically in 1/h.
    const double h = 0.02;
    double sum = 0.0;
    for (double s = -60.0; s <= 6.0; s += h) sum += std::exp(x * s - std::exp(s));
    return h * sum;
}

ComplexMatrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::normal_distribution<double> nd;
    ComplexMatrix a(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
        for (Eigen::Index i = 0; i < a.rows(); ++i) a(i, j) = {nd(gen), nd(gen)};
    }
    return a;
}

std::vector<Complex> random_points(std::size_t n, std::uint64_t seed, double radius) {
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> ud(-radius, radius);
    std::vector<Complex> out(n);
    for (auto& z : out) z = {ud(gen), ud(gen)};
    return out;
}

double hausdorff(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    const auto one_way = [](const std::vector<Complex>& x, const std::vector<Complex>& y) {
        double worst = 0.0;
        for (Complex p : x) {
            double best = std::numeric_limits<double>::infinity();
            for (Complex q : y) best = std::min(best, std::abs(p - q));
            worst = std::max(worst, best);
        }
        return worst;
    };
    return std::max(one_way(a, b), one_way(b, a));
}

}  // namespace oracle
