#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>

#include "ptc/gaussian.hpp"
#include "ptc/op_counter.hpp"
#include "ptc/rational.hpp"

namespace ptc {

namespace detail {

/// A lazy integer-approximation oracle for one complex number z:
/// compute(n) returns integers (f(n), g(n)) with |z - (f(n)+g(n)i)/n| <= 1/n
/// for every n >= 1.  Evaluations are memoized per n and the node accumulates
/// the rational-op cost of everything computed on its behalf.
class OracleNode {
public:
    virtual ~OracleNode() = default;

    std::pair<BigInt, BigInt> numerators(const BigInt& n);
    OpCounter stats_snapshot() const;

    bool real_flag = false;

protected:
    virtual std::pair<BigInt, BigInt> compute(const BigInt& n) = 0;

private:
    std::map<BigInt, std::pair<BigInt, BigInt>> memo_;
    mutable std::mutex mu_;
    OpCounter stats_;
};

using NodePtr = std::shared_ptr<OracleNode>;

} // namespace detail

/// Approximation scheme with rational outputs: |z - (F(n) + G(n)i)| <= 1/n
/// for every n >= 1.
struct RationalApproxOracle {
    std::function<BigRational(const BigInt&)> F;
    std::function<BigRational(const BigInt&)> G;
};

/// A polynomially increasing index sequence s_0 < s_1 < ... with the gap
/// bound s_{i+1} <= p(s_i), where p has non-negative integer coefficients
/// (gap_poly[j] is the coefficient of X^j).  The growth invariant is
/// spot-checked on a prefix when the sequence is first used.
struct PolyIncreasingSequence {
    std::function<BigInt(const BigInt&)> at; // index -> element
    std::vector<BigInt> gap_poly;
};

/// Handle to a polynomial-time-computable complex number.  Immutable and
/// cheap to copy; evaluation is lazy, memoized, and internally synchronized.
class PTCNumber {
public:
    explicit PTCNumber(detail::NodePtr node) : node_(std::move(node)) {}

    /// (f(n) + g(n)i)/n as an exact Gaussian rational; |z - eval(n)| <= 1/n.
    /// Requires n >= 1.
    GaussianRational eval(const BigInt& n) const;

    /// The raw integer numerators (f(n), g(n)).  Requires n >= 1.
    std::pair<BigInt, BigInt> numerators(const BigInt& n) const;

    /// True when the number is real by construction (imaginary oracle
    /// identically zero).  Structural: a complex-built number whose value
    /// happens to be real does not carry the flag.
    bool is_real() const { return node_->real_flag; }

    /// Accumulated cost of all oracle work performed for this number.
    OpCounter stats() const { return node_->stats_snapshot(); }

    detail::NodePtr node() const { return node_; }

private:
    detail::NodePtr node_;
};

/// The number with constant value z; the oracle rounds n*z to nearest.
PTCNumber constant(const GaussianRational& z);
PTCNumber constant(const BigRational& x);

/// Wrap raw integer oracles satisfying the 1/n contract.  `is_real` asserts
/// that g is identically zero.
PTCNumber from_integer_oracle(std::function<BigInt(const BigInt&)> f,
                              std::function<BigInt(const BigInt&)> g,
                              bool is_real = false);

/// Rational-to-integer oracle conversion: f(n) = round_nearest(n * F(4n)),
/// and likewise for g.  Error <= 1/(4n) from the source oracle plus
/// 1/(sqrt(2) n) from component rounding, total < 1/n.
PTCNumber from_rational_oracle(RationalApproxOracle oracle, bool is_real = false);

/// Totalize an oracle defined only on the elements of S.  On S the values
/// pass through; off S, the smallest n in S with n >= ceil((2+sqrt(2))*m)
/// (using the rational upper bound 34143/10000 for 2+sqrt(2)) is selected
/// and f(m) = round_nearest(fh(n)*m/n).  Error <= 1/n + 1/(sqrt(2) m) <= 1/m.
/// Throws MalformedSequenceError if the sequence fails its prefix check or
/// the index search exceeds `index_cap`.
PTCNumber from_partial_oracle(std::function<BigInt(const BigInt&)> fh,
                              std::function<BigInt(const BigInt&)> gh,
                              PolyIncreasingSequence seq,
                              BigInt index_cap = BigInt(1) << 40,
                              bool is_real = false);

/// Fixed-point decimal rendering with |printed - z| <= 10^-digits: evaluates
/// at n = 2*10^digits (error <= 1/(2*10^digits)) and rounds the result to
/// `digits` places (ties to even, another <= 1/(2*10^digits)).  Prints the
/// imaginary part only when it is nonzero at this precision.  digits >= 1.
std::string to_decimal(const PTCNumber& z, unsigned digits);

} // namespace ptc
