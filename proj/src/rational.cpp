#include "ptc/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace ptc {

namespace {

std::uint64_t int_bits(const mpz_class& z) {
    if (sgn(z) == 0) return 1;
    return mpz_sizeinbase(z.get_mpz_t(), 2);
}

void tick(const BigRational& a, const BigRational& b) {
    detail::count_rational_op(a.bit_size() + b.bit_size());
}

} // namespace

BigRational::BigRational(const BigInt& num, const BigInt& den) {
    if (sgn(den) == 0) throw std::domain_error("BigRational: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

std::uint64_t BigRational::bit_size() const {
    return int_bits(q_.get_num()) + int_bits(q_.get_den());
}

BigRational BigRational::operator-() const {
    BigRational r;
    r.q_ = -q_;
    return r;
}

BigRational BigRational::abs() const {
    BigRational r;
    r.q_ = ::abs(q_);
    return r;
}

BigRational BigRational::reciprocal() const {
    if (is_zero()) throw std::domain_error("BigRational: reciprocal of zero");
    BigRational r;
    r.q_ = 1 / q_;
    return r;
}

BigRational operator+(const BigRational& a, const BigRational& b) {
    tick(a, b);
    BigRational r;
    r.q_ = a.q_ + b.q_;
    return r;
}

BigRational operator-(const BigRational& a, const BigRational& b) {
    tick(a, b);
    BigRational r;
    r.q_ = a.q_ - b.q_;
    return r;
}

BigRational operator*(const BigRational& a, const BigRational& b) {
    tick(a, b);
    BigRational r;
    r.q_ = a.q_ * b.q_;
    return r;
}

BigRational operator/(const BigRational& a, const BigRational& b) {
    if (b.is_zero()) throw std::domain_error("BigRational: division by zero");
    tick(a, b);
    BigRational r;
    r.q_ = a.q_ / b.q_;
    return r;
}

std::string BigRational::to_string() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const BigRational& q) {
    return os << q.to_string();
}

BigInt round_nearest(const BigRational& q) {
    detail::count_rational_op(q.bit_size());
    BigInt num = q.num();
    BigInt den = q.den();
    BigInt quot, rem;
    // Floor division: 0 <= rem < den, so the fractional part is rem/den.
    mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    BigInt twice = 2 * rem;
    int c = cmp(twice, den);
    if (c < 0) return quot;
    if (c > 0) return quot + 1;
    // Exact half: round to the even neighbor.
    return mpz_even_p(quot.get_mpz_t()) ? quot : BigInt(quot + 1);
}

BigInt floor_int(const BigRational& q) {
    BigInt r;
    mpz_fdiv_q(r.get_mpz_t(), q.num().get_mpz_t(), q.den().get_mpz_t());
    return r;
}

BigInt ceil_int(const BigRational& q) {
    BigInt r;
    mpz_cdiv_q(r.get_mpz_t(), q.num().get_mpz_t(), q.den().get_mpz_t());
    return r;
}

BigRational pow_rational(const BigRational& q, std::uint64_t e) {
    BigRational result(1);
    BigRational base = q;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

namespace {

// Smallest B with 2^-B <= tol, i.e. 2^B >= 1/tol.
unsigned long scale_bits_for(const BigRational& tol) {
    BigRational inv = tol.reciprocal();
    if (inv <= BigRational(1)) return 1;
    // ceil(log2(num/den)) <= bits(num) - bits(den) + 1
    long b = static_cast<long>(mpz_sizeinbase(inv.num().get_mpz_t(), 2)) -
             static_cast<long>(mpz_sizeinbase(inv.den().get_mpz_t(), 2)) + 1;
    return b < 1 ? 1 : static_cast<unsigned long>(b);
}

// Exact square root when num and den are both perfect squares.
bool exact_sqrt(const BigRational& q, BigRational& out) {
    BigInt num = q.num(), den = q.den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return false;
    BigInt rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    out = BigRational(rn, rd);
    return true;
}

// Enclosure [lo, hi] of sqrt(q) with hi - lo <= 2^-B:
//   sqrt(q) = sqrt(num*den)/den, and with s = isqrt(num*den*4^B),
//   s/(den*2^B) <= sqrt(q) <= (s+1)/(den*2^B).
std::pair<BigRational, BigRational> sqrt_enclosure(const BigRational& q, unsigned long bits) {
    detail::count_rational_op(q.bit_size());
    BigInt num = q.num(), den = q.den();
    BigInt t = num * den;
    mpz_mul_2exp(t.get_mpz_t(), t.get_mpz_t(), 2 * bits);
    BigInt s;
    mpz_sqrt(s.get_mpz_t(), t.get_mpz_t());
    BigInt d;
    mpz_mul_2exp(d.get_mpz_t(), den.get_mpz_t(), bits);
    return {BigRational(s, d), BigRational(s + 1, d)};
}

void require_sqrt_args(const BigRational& q, const BigRational& tol, const char* who) {
    if (q.sign() < 0) throw std::domain_error(std::string(who) + ": negative argument");
    if (tol.sign() <= 0) throw std::domain_error(std::string(who) + ": tolerance must be positive");
}

} // namespace

BigRational sqrt_lower(const BigRational& q, const BigRational& tol) {
    require_sqrt_args(q, tol, "sqrt_lower");
    if (q.is_zero()) return BigRational(0);
    BigRational exact;
    if (exact_sqrt(q, exact)) return exact;
    return sqrt_enclosure(q, scale_bits_for(tol)).first;
}

BigRational sqrt_upper(const BigRational& q, const BigRational& tol) {
    require_sqrt_args(q, tol, "sqrt_upper");
    if (q.is_zero()) return BigRational(0);
    BigRational exact;
    if (exact_sqrt(q, exact)) return exact;
    return sqrt_enclosure(q, scale_bits_for(tol)).second;
}

BigRational root_upper(const BigRational& q, std::uint64_t j, const BigRational& tol) {
    if (j == 0) throw std::domain_error("root_upper: j must be >= 1");
    require_sqrt_args(q, tol, "root_upper");
    if (q.is_zero()) return BigRational(0);
    if (j == 1) return q;
    if (q == BigRational(1)) return q;

    // Exact j-th root when num and den are both perfect j-th powers.
    {
        BigInt num = q.num(), den = q.den();
        BigInt rn, rd;
        int en = mpz_root(rn.get_mpz_t(), num.get_mpz_t(), j);
        int ed = mpz_root(rd.get_mpz_t(), den.get_mpz_t(), j);
        if (en != 0 && ed != 0) return BigRational(rn, rd);
    }

    // Bisection on the invariant lo^j <= q <= hi^j, exact comparisons.
    BigRational lo(0);
    BigRational hi = q > BigRational(1) ? q : BigRational(1);
    while (hi - lo > tol) {
        detail::count_rational_op(hi.bit_size());
        BigRational mid = (lo + hi) / BigRational(2);
        if (pow_rational(mid, j) >= q)
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

BigRational rational_from_decimal(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("rational_from_decimal: empty string");
    std::size_t pos = 0;
    bool negative = false;
    if (text[pos] == '-' || text[pos] == '+') {
        negative = text[pos] == '-';
        ++pos;
    }
    std::string int_part, frac_part;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        int_part += text[pos++];
    if (pos < text.size() && text[pos] == '.') {
        ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            frac_part += text[pos++];
    }
    if (pos != text.size() || (int_part.empty() && frac_part.empty()))
        throw std::invalid_argument("rational_from_decimal: malformed literal '" + text + "'");
    BigInt num(int_part.empty() ? std::string("0") : int_part);
    BigInt den(1);
    for (char c : frac_part) {
        num = num * 10 + (c - '0');
        den *= 10;
    }
    if (negative) num = -num;
    return BigRational(num, den);
}

} // namespace ptc
