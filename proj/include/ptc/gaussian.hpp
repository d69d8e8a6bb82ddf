#pragma once

#include <iosfwd>
#include <string>

#include "ptc/rational.hpp"

namespace ptc {

/// Element of Q[i]: exact complex number with rational real and imaginary
/// parts.  Field operations are exact; there is no ordering, only equality.
struct GaussianRational {
    BigRational re;
    BigRational im;

    GaussianRational() = default;
    GaussianRational(BigRational r) : re(std::move(r)) {}
    GaussianRational(BigRational r, BigRational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_real() const { return im.is_zero(); }

    /// |z|^2 = re^2 + im^2, exact.  The workhorse for distance comparisons:
    /// |z| <= t  <=>  norm(z) <= t^2 avoids irrational square roots.
    BigRational norm() const { return re * re + im * im; }

    GaussianRational conj() const { return {re, -im}; }

    GaussianRational operator-() const { return {-re, -im}; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    /// Exact division; b must be nonzero.
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b);

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
        return !(a == b);
    }

    /// "p/q" for real values, "p/q + r/s i" / "p/q - r/s i" otherwise.
    std::string to_string() const;
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

/// Rational upper bound of |z| within tol.
BigRational abs_upper(const GaussianRational& z, const BigRational& tol);

} // namespace ptc
