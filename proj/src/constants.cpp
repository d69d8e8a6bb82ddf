#include "ptc/constants.hpp"

#include <stdexcept>

namespace ptc {

BigRational arctan_tail_bound(unsigned long k, std::uint64_t m) {
    BigInt kpow;
    mpz_ui_pow_ui(kpow.get_mpz_t(), k, 2 * m + 1);
    return BigRational(BigInt(1), BigInt(2 * m + 1) * kpow);
}

ArctanPlan arctan_plan(unsigned long k, const BigInt& n) {
    if (k < 2) throw std::domain_error("arctan_plan: k must be >= 2");
    if (n < 1) throw std::domain_error("arctan_plan: n must be >= 1");
    // tail(m) <= 1/(2n)  <=>  (2m+1) k^(2m+1) >= 2n; the left side grows by
    // a factor >= k^2 per step, so the search is logarithmic in n.
    BigInt target = 2 * n;
    std::uint64_t m = 1;
    BigInt kpow;
    mpz_ui_pow_ui(kpow.get_mpz_t(), k, 3);
    while (BigInt(2 * m + 1) * kpow < target) {
        ++m;
        kpow *= static_cast<unsigned long>(k) * k;
    }
    return {k, n, m};
}

PTCNumber arctan_inv(unsigned long k) {
    if (k < 2) throw std::domain_error("arctan_inv: k must be >= 2");
    RationalApproxOracle o;
    o.F = [k](const BigInt& n) {
        ArctanPlan plan = arctan_plan(k, n);
        // sum_{i=0}^{terms-1} (-1)^i / ((2i+1) k^(2i+1)), exactly.
        BigRational sum(0);
        BigInt kpow(static_cast<unsigned long>(k)); // k^(2i+1)
        for (std::uint64_t i = 0; i < plan.terms; ++i) {
            BigRational term(BigInt(1), BigInt(2 * i + 1) * kpow);
            sum = (i % 2 == 0) ? sum + term : sum - term;
            kpow *= static_cast<unsigned long>(k) * k;
        }
        return sum;
    };
    return from_rational_oracle(std::move(o), /*is_real=*/true);
}

const std::vector<MachinTerm>& machin_terms() {
    static const std::vector<MachinTerm> terms = {{16, 5}, {-4, 239}};
    return terms;
}

PTCNumber pi() {
    PTCNumber acc = constant(BigRational(0));
    bool first = true;
    for (const MachinTerm& t : machin_terms()) {
        PTCNumber scaled = scalar_multiply(BigInt(t.coefficient), arctan_inv(t.k));
        acc = first ? scaled : add(acc, scaled);
        first = false;
    }
    return acc;
}

} // namespace ptc
