#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

#include "iasi/integer_set.hpp"

namespace iasi {

// Descriptor of an arithmetic-progression set
// {first + r*difference : 0 <= r < length}.
struct APSetDescriptor {
    APSetDescriptor(std::uint64_t first, std::uint64_t difference, std::size_t length);

    std::uint64_t first;
    std::uint64_t difference;  // >= 1, the deterministic index of the set
    std::size_t length;        // >= 1

    std::uint64_t last() const { return first + (length - 1) * difference; }
    IntegerSet expand() const;
    std::string to_string() const;  // "(first,difference,length)"

    friend auto operator<=>(const APSetDescriptor&, const APSetDescriptor&) = default;
};

// Recognizes whether `s` is an AP-set. Singletons are reported with
// difference 1 by convention; two-element sets with their gap.
std::optional<APSetDescriptor> recognize_ap(const IntegerSet& s);

// |expand(p) + expand(q)|, via the row-arrangement closed form when one
// difference divides the other and explicit enumeration otherwise.
std::uint64_t ap_sumset_cardinality(const APSetDescriptor& p, const APSetDescriptor& q);

}  // namespace iasi
