#include "iasi/compatibility.hpp"

#include <algorithm>
#include <map>

namespace iasi {

CompatibilityDecomposition compatibility_decomposition(const IntegerSet& a,
                                                       const IntegerSet& b) {
    std::map<std::uint64_t, std::vector<std::pair<std::uint64_t, std::uint64_t>>> by_sum;
    for (std::uint64_t x : a.elements()) {
        for (std::uint64_t y : b.elements()) {
            by_sum[x + y].emplace_back(x, y);
        }
    }
    CompatibilityDecomposition result{a, b, {}};
    result.classes.reserve(by_sum.size());
    for (auto& [sum, pairs] : by_sum) {
        std::sort(pairs.begin(), pairs.end());
        result.classes.push_back(CompatibilityClass{sum, std::move(pairs)});
    }
    return result;
}

std::size_t compatibility_index(const IntegerSet& a, const IntegerSet& b) {
    return compatibility_decomposition(a, b).class_count();
}

std::size_t maximal_class_size(const IntegerSet& a, const IntegerSet& b) {
    std::size_t best = 0;
    for (const auto& cls : compatibility_decomposition(a, b).classes) {
        best = std::max(best, cls.size());
    }
    return best;
}

std::vector<CompatibilityClass> saturated_classes(const IntegerSet& a,
                                                  const IntegerSet& b) {
    const std::size_t bound = std::min(a.size(), b.size());
    std::vector<CompatibilityClass> result;
    for (auto& cls : compatibility_decomposition(a, b).classes) {
        if (cls.size() == bound) result.push_back(std::move(cls));
    }
    return result;
}

}  // namespace iasi
