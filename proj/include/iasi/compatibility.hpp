#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "iasi/integer_set.hpp"

namespace iasi {

// One compatibility class: every ordered pair (a, b) in A x B with
// a + b == sum. A class is trivial when it holds a single pair and
// saturated when it reaches the min(|A|, |B|) bound.
struct CompatibilityClass {
    std::uint64_t sum;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;  // ascending by a

    std::size_t size() const { return pairs.size(); }
};

// Eager decomposition of A x B into compatibility classes, ordered by sum.
// The number of classes equals |A + B|.
struct CompatibilityDecomposition {
    IntegerSet left;
    IntegerSet right;
    std::vector<CompatibilityClass> classes;

    std::size_t class_count() const { return classes.size(); }
};

CompatibilityDecomposition compatibility_decomposition(const IntegerSet& a,
                                                       const IntegerSet& b);

// |A + B|, counted through the class decomposition.
std::size_t compatibility_index(const IntegerSet& a, const IntegerSet& b);

// Cardinality of the largest compatibility class.
std::size_t maximal_class_size(const IntegerSet& a, const IntegerSet& b);

// All classes whose size reaches min(|A|, |B|). May be empty.
std::vector<CompatibilityClass> saturated_classes(const IntegerSet& a,
                                                  const IntegerSet& b);

}  // namespace iasi
