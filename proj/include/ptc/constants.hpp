#pragma once

#include <cstdint>
#include <vector>

#include "ptc/field_ops.hpp"
#include "ptc/oracle.hpp"

namespace ptc {

/// Term-count plan for one arctan(1/k) evaluation: summing `terms` Taylor
/// terms leaves a tail of at most 1/((2*terms+1) * k^(2*terms+1)) <= 1/(2n),
/// and `terms` is minimal with that property.
struct ArctanPlan {
    unsigned long k = 0;
    BigInt n;
    std::uint64_t terms = 0;
};

/// First omitted term of the alternating series, k^-(2m+1)/(2m+1); an upper
/// bound for the truncation error after m terms.
BigRational arctan_tail_bound(unsigned long k, std::uint64_t m);

/// Minimal positive number of terms with arctan_tail_bound(k, m) <= 1/(2n)
/// (a zero-term sum is never planned, so terms >= 1).
ArctanPlan arctan_plan(unsigned long k, const BigInt& n);

/// arctan(1/k) for integer k >= 2, as a real lazy number.  Each evaluation
/// sums the alternating Taylor series exactly per arctan_plan; the 1/(2n)
/// tail budget leaves room for the rational-to-integer conversion on top.
PTCNumber arctan_inv(unsigned long k);

struct MachinTerm {
    long coefficient;
    unsigned long k;
};

/// pi = 16*arctan(1/5) - 4*arctan(1/239).
const std::vector<MachinTerm>& machin_terms();

/// pi assembled from machin_terms() with exact integer scaling and real
/// addition.  A fresh lazy number per call (no shared memo between calls).
PTCNumber pi();

} // namespace ptc
