#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>

#include "ptc/op_counter.hpp"

namespace ptc {

using BigInt = mpz_class;

/// Arbitrary-precision rational, always in canonical form: gcd(num, den) = 1
/// and den > 0.  Arithmetic is exact; the four arithmetic operators tick the
/// active OpCounter scope (one op plus the operands' bit mass), which is the
/// cost model used by the complexity measurements.
class BigRational {
public:
    BigRational() : q_(0) {}
    BigRational(int v) : q_(v) {}
    BigRational(long v) : q_(v) {}
    BigRational(const BigInt& v) : q_(v) {}
    BigRational(const BigInt& num, const BigInt& den);

    const mpq_class& raw() const { return q_; }

    BigInt num() const { return BigInt(q_.get_num()); }
    BigInt den() const { return BigInt(q_.get_den()); }

    bool is_zero() const { return sgn(q_) == 0; }
    int sign() const { return sgn(q_); }
    bool is_integer() const { return q_.get_den() == 1; }

    /// Bits in numerator plus denominator; the operand mass fed to the
    /// bit-complexity proxy.
    std::uint64_t bit_size() const;

    double to_double() const { return q_.get_d(); }

    BigRational operator-() const;
    BigRational abs() const;
    /// Exact reciprocal; the value must be nonzero.
    BigRational reciprocal() const;

    friend BigRational operator+(const BigRational& a, const BigRational& b);
    friend BigRational operator-(const BigRational& a, const BigRational& b);
    friend BigRational operator*(const BigRational& a, const BigRational& b);
    /// Exact division; b must be nonzero.
    friend BigRational operator/(const BigRational& a, const BigRational& b);

    BigRational& operator+=(const BigRational& b) { return *this = *this + b; }
    BigRational& operator-=(const BigRational& b) { return *this = *this - b; }
    BigRational& operator*=(const BigRational& b) { return *this = *this * b; }
    BigRational& operator/=(const BigRational& b) { return *this = *this / b; }

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const BigRational& a, const BigRational& b) { return a.q_ != b.q_; }
    friend bool operator<(const BigRational& a, const BigRational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const BigRational& a, const BigRational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const BigRational& a, const BigRational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const BigRational& a, const BigRational& b) { return a.q_ >= b.q_; }

    /// "p/q", or just "p" for integers.
    std::string to_string() const;

private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const BigRational& q);

/// Nearest integer, ties to even: 7/2 -> 4, -1/3 -> 0, 15/16 -> 1, 1/2 -> 0.
BigInt round_nearest(const BigRational& q);

BigInt floor_int(const BigRational& q);
BigInt ceil_int(const BigRational& q);

/// q^e by exact repeated squaring, e >= 0.
BigRational pow_rational(const BigRational& q, std::uint64_t e);

/// Rational lower bound of sqrt(q): result^2 <= q and sqrt(q) - result <= tol.
/// Requires q >= 0 and tol > 0.  Exact when q is a perfect rational square.
BigRational sqrt_lower(const BigRational& q, const BigRational& tol);

/// Rational upper bound of sqrt(q): result^2 >= q and result - sqrt(q) <= tol.
BigRational sqrt_upper(const BigRational& q, const BigRational& tol);

/// Rational upper bound of q^(1/j): result^j >= q and result - q^(1/j) <= tol.
/// Requires q >= 0, j >= 1, tol > 0.
BigRational root_upper(const BigRational& q, std::uint64_t j, const BigRational& tol);

/// Exact rational from a decimal literal such as "1.25", "-0.5", "3".
/// Throws std::invalid_argument on malformed input.
BigRational rational_from_decimal(const std::string& text);

} // namespace ptc
