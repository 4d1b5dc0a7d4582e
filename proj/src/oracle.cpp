#include "iasi/oracle.hpp"

#include <map>
#include <set>

namespace iasi {

std::uint64_t oracle_sumset_cardinality(const APSetDescriptor& p, const APSetDescriptor& q) {
    std::set<std::uint64_t> sums;
    for (std::size_t r = 0; r < p.length; ++r) {
        for (std::size_t s = 0; s < q.length; ++s) {
            sums.insert(p.first + r * p.difference + q.first + s * q.difference);
        }
    }
    return sums.size();
}

OracleMaximalClass oracle_maximal_class(const APSetDescriptor& p, const APSetDescriptor& q) {
    std::map<std::uint64_t, std::size_t> class_sizes;
    for (std::size_t r = 0; r < p.length; ++r) {
        for (std::size_t s = 0; s < q.length; ++s) {
            ++class_sizes[p.first + r * p.difference + q.first + s * q.difference];
        }
    }
    OracleMaximalClass best{0, 0};
    for (const auto& [sum, count] : class_sizes) {
        if (count > best.size) best = OracleMaximalClass{count, sum};
    }
    return best;
}

}  // namespace iasi
