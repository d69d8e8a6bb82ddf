#include "ptc/seed_heuristic.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>

namespace ptc::detail {

namespace {

std::complex<double> to_complex(const GaussianRational& z) {
    return {z.re.to_double(), z.im.to_double()};
}

std::complex<double> horner(const std::vector<std::complex<double>>& c, std::complex<double> z) {
    std::complex<double> acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = acc * z + *it;
    return acc;
}

} // namespace

std::vector<std::complex<double>> approximate_roots(const RationalPolynomial& f) {
    const std::size_t n = f.degree();

    std::vector<std::complex<double>> coeffs(n + 1);
    for (std::size_t j = 0; j < n; ++j)
        coeffs[j] = to_complex(f.coeff(j));
    coeffs[n] = 1.0;
    std::vector<std::complex<double>> dcoeffs(n);
    for (std::size_t j = 1; j <= n; ++j)
        dcoeffs[j - 1] = static_cast<double>(j) * coeffs[j];

    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
    for (std::size_t i = 1; i < n; ++i)
        companion(i, i - 1) = 1.0;
    for (std::size_t i = 0; i < n; ++i)
        companion(i, n - 1) = -coeffs[i];

    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, /*computeEigenvectors=*/false);

    std::vector<std::complex<double>> roots(n);
    for (std::size_t i = 0; i < n; ++i)
        roots[i] = solver.eigenvalues()(static_cast<Eigen::Index>(i));

    // Newton polish; eigenvalue accuracy is usually fine, this cheaply
    // tightens the seeds certification starts from.
    for (auto& z : roots) {
        for (int step = 0; step < 32; ++step) {
            std::complex<double> value = horner(coeffs, z);
            std::complex<double> slope = horner(dcoeffs, z);
            if (!(std::abs(slope) > 0)) break;
            std::complex<double> next = z - value / slope;
            if (!std::isfinite(next.real()) || !std::isfinite(next.imag())) break;
            if (std::abs(next - z) <= 1e-16 * (1.0 + std::abs(z))) {
                z = next;
                break;
            }
            z = next;
        }
    }

    std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return roots;
}

} // namespace ptc::detail
