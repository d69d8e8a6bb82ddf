#pragma once

#include <cstdint>

namespace ptc {

/// Cost model for complexity measurements: one tick per rational arithmetic
/// operation, plus a proxy for bit complexity (sum of operand bit lengths per
/// operation).  Counters are per-computation: a CountScope installs the
/// counters it should feed, nothing is recorded outside a scope.
struct OpCounter {
    std::uint64_t rational_ops = 0;
    std::uint64_t bit_ops_proxy = 0;

    void reset() { rational_ops = 0; bit_ops_proxy = 0; }
};

/// RAII guard that routes rational-op ticks into a counter for the duration
/// of a computation.  Scopes nest: every active counter on the current
/// thread's stack receives the ticks, so an outer measurement sees the total
/// work of its sub-computations.
class CountScope {
public:
    explicit CountScope(OpCounter& target);
    ~CountScope();

    CountScope(const CountScope&) = delete;
    CountScope& operator=(const CountScope&) = delete;

private:
    OpCounter* target_;
};

namespace detail {
/// Record one rational operation with the given operand bit mass on every
/// counter currently in scope on this thread.  No-op when no scope is active.
void count_rational_op(std::uint64_t operand_bits);
}

} // namespace ptc
