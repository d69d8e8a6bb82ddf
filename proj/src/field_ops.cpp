#include "ptc/field_ops.hpp"

#include <optional>
#include <stdexcept>

#include "ptc/errors.hpp"

namespace ptc {

namespace detail {

PTCNumber real_add(const PTCNumber& x, const PTCNumber& y) {
    RationalApproxOracle o;
    o.F = [x, y](const BigInt& n) {
        BigInt m = 2 * n;
        BigInt fx = x.numerators(m).first;
        BigInt fy = y.numerators(m).first;
        // |(x+y) - (fx+fy)/(2n)| <= 1/(2n) + 1/(2n) = 1/n.
        return BigRational(fx + fy, m);
    };
    return from_rational_oracle(std::move(o), /*is_real=*/true);
}

PTCNumber real_sub(const PTCNumber& x, const PTCNumber& y) {
    return real_add(x, negate(y));
}

PTCNumber real_multiply(const PTCNumber& x, const PTCNumber& y) {
    // The scale is fixed by coarse evaluations of both factors; it is found
    // on first use so that building expressions stays cheap.  compute() runs
    // under the node lock, which serializes access to the cache.
    auto scale = std::make_shared<std::optional<BigInt>>();
    RationalApproxOracle o;
    o.F = [x, y, scale](const BigInt& n) {
        if (!scale->has_value()) {
            BigInt c = abs(x.numerators(1).first) + abs(y.numerators(1).first) + 4;
            *scale = c;
        }
        const BigInt& c = **scale;
        BigInt m = c * n;
        BigInt fx = x.numerators(m).first;
        BigInt fy = y.numerators(m).first;
        // With c >= |f(1)| + |g(1)| + 4 both factors obey |f(cn)/(cn)| <=
        // |f(1)| + 3/2, and the product error telescopes to
        // (|f(1)| + |g(1)| + 3) / (cn) < 1/n.
        return BigRational(fx * fy, m * m);
    };
    return from_rational_oracle(std::move(o), /*is_real=*/true);
}

PTCNumber real_invert(const PTCNumber& x, const BigInt& k_search_cap) {
    BigInt cap = k_search_cap;
    auto witness = std::make_shared<std::optional<BigInt>>();
    RationalApproxOracle o;
    o.F = [x, cap, witness](const BigInt& n) {
        if (!witness->has_value()) {
            BigInt k(1);
            while (abs(x.numerators(k).first) <= 1) {
                k *= 2;
                if (k > cap)
                    throw PossiblyZeroError(
                        "invert: no nonzero witness up to k = " + cap.get_str());
            }
            *witness = k;
        }
        const BigInt& k = **witness;
        // p(X) = 2k^2 X + k.  |f(k)| > 1 pins |value| >= (|f(k)|-1)/k > 0,
        // which makes |f(p(n))| >= 2kn >= 2; the quotient error is at most
        // k^2 p(n)/(p(n)-k)^2 * 1/p(n) <= 3/(4n) < 1/n.
        BigInt p = 2 * k * k * n + k;
        BigInt fp = x.numerators(p).first;
        return BigRational(p, fp);
    };
    return from_rational_oracle(std::move(o), /*is_real=*/true);
}

} // namespace detail

PTCNumber add(const PTCNumber& x, const PTCNumber& y) {
    // Real + real has no imaginary side to assemble, so the combiner step
    // drops out and the sum stays real by construction.
    if (x.is_real() && y.is_real()) return detail::real_add(x, y);
    return combine_complex(detail::real_add(re_part(x), re_part(y)),
                           detail::real_add(im_part(x), im_part(y)));
}

PTCNumber negate(const PTCNumber& x) {
    auto node = x.node();
    return from_integer_oracle(
        [node](const BigInt& n) { return BigInt(-node->numerators(n).first); },
        [node](const BigInt& n) { return BigInt(-node->numerators(n).second); },
        x.is_real());
}

PTCNumber multiply(const PTCNumber& x, const PTCNumber& y) {
    if (x.is_real() && y.is_real()) return detail::real_multiply(x, y);
    PTCNumber xr = re_part(x), xi = im_part(x);
    PTCNumber yr = re_part(y), yi = im_part(y);
    PTCNumber re = detail::real_sub(detail::real_multiply(xr, yr),
                                    detail::real_multiply(xi, yi));
    PTCNumber im = detail::real_add(detail::real_multiply(xr, yi),
                                    detail::real_multiply(xi, yr));
    return combine_complex(re, im);
}

PTCNumber invert(const PTCNumber& x, const BigInt& k_search_cap) {
    if (x.is_real()) return detail::real_invert(x, k_search_cap);
    PTCNumber xr = re_part(x), xi = im_part(x);
    PTCNumber norm = detail::real_add(detail::real_multiply(xr, xr),
                                      detail::real_multiply(xi, xi));
    PTCNumber inv_norm = detail::real_invert(norm, k_search_cap);
    return combine_complex(detail::real_multiply(xr, inv_norm),
                           negate(detail::real_multiply(xi, inv_norm)));
}

PTCNumber combine_complex(const PTCNumber& x, const PTCNumber& y) {
    if (!x.is_real() || !y.is_real())
        throw std::invalid_argument("combine_complex: operands must be real by construction");
    auto shifted_third = [](const BigInt& f3n) {
        BigInt r;
        mpz_mod_ui(r.get_mpz_t(), f3n.get_mpz_t(), 3);
        BigInt kappa = r == 0 ? BigInt(0) : (r == 1 ? BigInt(-1) : BigInt(1));
        return BigInt((f3n + kappa) / 3);
    };
    auto xn = x.node();
    auto yn = y.node();
    return from_integer_oracle(
        [xn, shifted_third](const BigInt& n) {
            return shifted_third(xn->numerators(3 * n).first);
        },
        [yn, shifted_third](const BigInt& n) {
            return shifted_third(yn->numerators(3 * n).first);
        },
        /*is_real=*/false);
}

PTCNumber re_part(const PTCNumber& z) {
    if (z.is_real()) return z;
    auto node = z.node();
    return from_integer_oracle(
        [node](const BigInt& n) { return node->numerators(n).first; },
        {}, /*is_real=*/true);
}

PTCNumber im_part(const PTCNumber& z) {
    if (z.is_real()) return constant(BigRational(0));
    auto node = z.node();
    return from_integer_oracle(
        [node](const BigInt& n) { return node->numerators(n).second; },
        {}, /*is_real=*/true);
}

PTCNumber scalar_multiply(const BigInt& s, const PTCNumber& x) {
    if (s == 0) return constant(BigRational(0));
    if (s < 0) return negate(scalar_multiply(BigInt(-s), x));
    auto node = x.node();
    BigInt sc = s;
    return from_integer_oracle(
        [node, sc](const BigInt& n) { return node->numerators(sc * n).first; },
        [node, sc](const BigInt& n) { return node->numerators(sc * n).second; },
        x.is_real());
}

} // namespace ptc
