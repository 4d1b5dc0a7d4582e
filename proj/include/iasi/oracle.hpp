#pragma once

#include <cstdint>

#include "iasi/ap_set.hpp"

namespace iasi {

// Brute-force reference implementations. Deliberately naive and kept
// independent of the setcore fast paths: these expand descriptors with raw
// loops and count through ordered containers, sharing no code with
// ap_sumset_cardinality or the compatibility decomposition. Audits
// re-verify every counterexample against these before reporting it.

std::uint64_t oracle_sumset_cardinality(const APSetDescriptor& p, const APSetDescriptor& q);

struct OracleMaximalClass {
    std::size_t size;
    std::uint64_t witness_sum;  // smallest sum value achieving `size`
};

OracleMaximalClass oracle_maximal_class(const APSetDescriptor& p, const APSetDescriptor& q);

}  // namespace iasi
