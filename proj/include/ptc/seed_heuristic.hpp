#pragma once

#include <complex>
#include <vector>

#include "ptc/polynomial.hpp"

namespace ptc::detail {

/// Floating-point root guesses for a monic polynomial: companion-matrix
/// eigenvalues polished by a few double-precision Newton steps, sorted by
/// (re, im).  Heuristic only; every output must pass exact certification
/// before anything downstream trusts it.
std::vector<std::complex<double>> approximate_roots(const RationalPolynomial& f);

} // namespace ptc::detail
