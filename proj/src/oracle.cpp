#include "ptc/oracle.hpp"

#include <stdexcept>

#include "ptc/errors.hpp"

namespace ptc {

namespace detail {

std::pair<BigInt, BigInt> OracleNode::numerators(const BigInt& n) {
    if (n < 1) throw std::domain_error("PTCNumber: precision index must be >= 1");
    std::lock_guard<std::mutex> lock(mu_);
    auto it = memo_.find(n);
    if (it != memo_.end()) return it->second;
    std::pair<BigInt, BigInt> value;
    {
        CountScope scope(stats_);
        value = compute(n);
    }
    memo_.emplace(n, value);
    return value;
}

OpCounter OracleNode::stats_snapshot() const {
    std::lock_guard<std::mutex> lock(mu_);
    return stats_;
}

namespace {

class ConstantNode final : public OracleNode {
public:
    explicit ConstantNode(GaussianRational z) : z_(std::move(z)) {
        real_flag = z_.is_real();
    }

protected:
    std::pair<BigInt, BigInt> compute(const BigInt& n) override {
        // Component rounding leaves error at most (1/2 + 1/2 i)/n in the
        // worst case, modulus <= 1/(sqrt(2) n) < 1/n.
        BigRational nn{BigInt(n)};
        return {round_nearest(nn * z_.re), round_nearest(nn * z_.im)};
    }

private:
    GaussianRational z_;
};

class FunctionNode final : public OracleNode {
public:
    FunctionNode(std::function<BigInt(const BigInt&)> f,
                 std::function<BigInt(const BigInt&)> g,
                 bool is_real)
        : f_(std::move(f)), g_(std::move(g)) {
        real_flag = is_real;
    }

protected:
    std::pair<BigInt, BigInt> compute(const BigInt& n) override {
        if (real_flag) return {f_(n), BigInt(0)};
        return {f_(n), g_(n)};
    }

private:
    std::function<BigInt(const BigInt&)> f_, g_;
};

class RationalOracleNode final : public OracleNode {
public:
    RationalOracleNode(RationalApproxOracle oracle, bool is_real)
        : oracle_(std::move(oracle)) {
        real_flag = is_real;
    }

protected:
    std::pair<BigInt, BigInt> compute(const BigInt& n) override {
        BigRational nn{BigInt(n)};
        BigInt m = 4 * n;
        BigInt f = round_nearest(nn * oracle_.F(m));
        BigInt g = real_flag ? BigInt(0) : round_nearest(nn * oracle_.G(m));
        return {f, g};
    }

private:
    RationalApproxOracle oracle_;
};

class PartialOracleNode final : public OracleNode {
public:
    PartialOracleNode(std::function<BigInt(const BigInt&)> fh,
                      std::function<BigInt(const BigInt&)> gh,
                      PolyIncreasingSequence seq, BigInt index_cap, bool is_real)
        : fh_(std::move(fh)), gh_(std::move(gh)), seq_(std::move(seq)),
          index_cap_(std::move(index_cap)) {
        real_flag = is_real;
        validate_prefix();
    }

protected:
    std::pair<BigInt, BigInt> compute(const BigInt& m) override {
        BigInt n = smallest_element_at_least(m);
        if (n == m) {
            // m is an element of S: pass the partial oracle's values through.
            return {fh_(m), real_flag ? BigInt(0) : gh_(m)};
        }
        // Off S: query at the smallest element n >= ceil((2+sqrt(2)) m) and
        // rescale.  34143/10000 > 2+sqrt(2), so 1/n + 1/(sqrt(2) m) <= 1/m
        // still holds; rounding up only helps.
        BigInt threshold = ceil_int(BigRational(m * 34143, BigInt(10000)));
        n = smallest_element_at_least(threshold);
        BigInt f = round_nearest(BigRational(fh_(n) * m, n));
        BigInt g = real_flag ? BigInt(0) : round_nearest(BigRational(gh_(n) * m, n));
        return {f, g};
    }

private:
    BigInt gap_bound(const BigInt& s) const {
        BigInt acc = 0;
        for (auto it = seq_.gap_poly.rbegin(); it != seq_.gap_poly.rend(); ++it)
            acc = acc * s + *it;
        return acc;
    }

    void validate_prefix() {
        if (!seq_.at) throw MalformedSequenceError("partial oracle: missing sequence");
        for (const BigInt& c : seq_.gap_poly)
            if (c < 0)
                throw MalformedSequenceError("partial oracle: gap polynomial has a negative coefficient");
        BigInt prev = seq_.at(0);
        if (prev < 1)
            throw MalformedSequenceError("partial oracle: sequence must start at 1 or above");
        for (int i = 1; i <= 16; ++i) {
            BigInt cur = seq_.at(BigInt(i));
            if (cur <= prev)
                throw MalformedSequenceError("partial oracle: sequence not strictly increasing");
            if (cur > gap_bound(prev))
                throw MalformedSequenceError("partial oracle: sequence jumps past its gap bound");
            prev = cur;
        }
    }

    // Smallest sequence element >= target, by doubling then binary search on
    // the (validated-increasing) index space.
    BigInt smallest_element_at_least(const BigInt& target) {
        if (seq_.at(0) >= target) return seq_.at(0);
        BigInt lo = 0, hi = 1;
        while (seq_.at(hi) < target) {
            lo = hi;
            hi *= 2;
            if (hi > index_cap_)
                throw MalformedSequenceError(
                    "partial oracle: search cap exhausted before reaching threshold");
        }
        // Invariant: at(lo) < target <= at(hi).
        while (hi - lo > 1) {
            BigInt mid = (lo + hi) / 2;
            if (seq_.at(mid) < target)
                lo = mid;
            else
                hi = mid;
        }
        return seq_.at(hi);
    }

    std::function<BigInt(const BigInt&)> fh_, gh_;
    PolyIncreasingSequence seq_;
    BigInt index_cap_;
};

} // namespace

} // namespace detail

GaussianRational PTCNumber::eval(const BigInt& n) const {
    auto [f, g] = node_->numerators(n);
    return {BigRational(f, n), BigRational(g, n)};
}

std::pair<BigInt, BigInt> PTCNumber::numerators(const BigInt& n) const {
    return node_->numerators(n);
}

PTCNumber constant(const GaussianRational& z) {
    return PTCNumber(std::make_shared<detail::ConstantNode>(z));
}

PTCNumber constant(const BigRational& x) {
    return constant(GaussianRational(x));
}

PTCNumber from_integer_oracle(std::function<BigInt(const BigInt&)> f,
                              std::function<BigInt(const BigInt&)> g,
                              bool is_real) {
    return PTCNumber(std::make_shared<detail::FunctionNode>(std::move(f), std::move(g), is_real));
}

PTCNumber from_rational_oracle(RationalApproxOracle oracle, bool is_real) {
    return PTCNumber(std::make_shared<detail::RationalOracleNode>(std::move(oracle), is_real));
}

PTCNumber from_partial_oracle(std::function<BigInt(const BigInt&)> fh,
                              std::function<BigInt(const BigInt&)> gh,
                              PolyIncreasingSequence seq, BigInt index_cap, bool is_real) {
    return PTCNumber(std::make_shared<detail::PartialOracleNode>(
        std::move(fh), std::move(gh), std::move(seq), std::move(index_cap), is_real));
}

namespace {

std::string fixed_point(const BigInt& scaled, unsigned digits) {
    BigInt ten_d;
    mpz_ui_pow_ui(ten_d.get_mpz_t(), 10, digits);
    BigInt mag = ::abs(scaled);
    BigInt ipart = mag / ten_d;
    BigInt fpart = mag % ten_d;
    std::string frac = fpart.get_str();
    frac.insert(0, digits - frac.size(), '0');
    std::string s = sgn(scaled) < 0 ? "-" : "";
    return s + ipart.get_str() + "." + frac;
}

} // namespace

std::string to_decimal(const PTCNumber& z, unsigned digits) {
    if (digits < 1) throw std::domain_error("to_decimal: digits must be >= 1");
    BigInt ten_d;
    mpz_ui_pow_ui(ten_d.get_mpz_t(), 10, digits);
    GaussianRational v = z.eval(2 * ten_d);
    BigRational scale{ten_d};
    BigInt re_scaled = round_nearest(v.re * scale);
    BigInt im_scaled = round_nearest(v.im * scale);
    std::string out = fixed_point(re_scaled, digits);
    if (im_scaled != 0) {
        if (sgn(im_scaled) < 0)
            out += " - " + fixed_point(-im_scaled, digits) + "i";
        else
            out += " + " + fixed_point(im_scaled, digits) + "i";
    }
    return out;
}

} // namespace ptc
