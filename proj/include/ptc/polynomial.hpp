#pragma once

#include <vector>

#include "ptc/gaussian.hpp"
#include "ptc/oracle.hpp"

namespace ptc {

/// Dense polynomial over Q[i], not necessarily monic; c[j] is the
/// coefficient of X^j.  The zero polynomial has an empty coefficient list.
struct GaussianPoly {
    std::vector<GaussianRational> c;

    GaussianPoly() = default;
    explicit GaussianPoly(std::vector<GaussianRational> coeffs) : c(std::move(coeffs)) {
        trim();
    }

    bool is_zero() const { return c.empty(); }
    /// Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c.size()) - 1; }
    const GaussianRational& leading() const { return c.back(); }

    GaussianRational eval(const GaussianRational& z) const;
    GaussianPoly derivative() const;

    void trim();
};

/// Euclidean division a = q*b + r with deg r < deg b; b must be nonzero.
std::pair<GaussianPoly, GaussianPoly> poly_divmod(const GaussianPoly& a, const GaussianPoly& b);

/// Monic gcd over the field Q[i].
GaussianPoly poly_gcd(GaussianPoly a, GaussianPoly b);

/// Monic polynomial over Q[i] of degree n >= 1: X^n + a_{n-1} X^{n-1} + ...
/// + a_0, storing only the lower coefficients a_0..a_{n-1}.
class RationalPolynomial {
public:
    explicit RationalPolynomial(std::vector<GaussianRational> lower);

    std::size_t degree() const { return lower_.size(); }
    const std::vector<GaussianRational>& lower() const { return lower_; }
    const GaussianRational& coeff(std::size_t j) const { return lower_[j]; }

    /// Exact Horner evaluation (implicit leading 1).
    GaussianRational eval(const GaussianRational& z) const;

    GaussianPoly full() const;
    GaussianPoly derivative() const { return full().derivative(); }

    /// gcd(f, f') has degree 0.
    bool is_squarefree() const;

private:
    std::vector<GaussianRational> lower_;
};

/// Monic polynomial of degree n >= 1 whose lower coefficients are lazy
/// numbers; the input to root extraction.
class Polynomial {
public:
    explicit Polynomial(std::vector<PTCNumber> lower);

    std::size_t degree() const { return lower_.size(); }
    const PTCNumber& coeff(std::size_t j) const { return lower_[j]; }

    static Polynomial from_rational(const RationalPolynomial& f);

private:
    std::vector<PTCNumber> lower_;
};

} // namespace ptc
