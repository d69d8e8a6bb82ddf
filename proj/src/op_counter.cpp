#include "ptc/op_counter.hpp"

#include <vector>

namespace ptc {

namespace {
thread_local std::vector<OpCounter*> active_counters;
}

CountScope::CountScope(OpCounter& target) : target_(&target) {
    active_counters.push_back(target_);
}

CountScope::~CountScope() {
    active_counters.pop_back();
}

namespace detail {

void count_rational_op(std::uint64_t operand_bits) {
    for (OpCounter* c : active_counters) {
        c->rational_ops += 1;
        c->bit_ops_proxy += operand_bits;
    }
}

} // namespace detail

} // namespace ptc
