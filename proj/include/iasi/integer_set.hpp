#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace iasi {

// A finite non-empty set of non-negative integers, stored sorted and
// duplicate-free. Elements are capped at 2^62 so that any pairwise sum
// fits in a uint64 with room to spare.
class IntegerSet {
public:
    static constexpr std::uint64_t kMaxElement = std::uint64_t{1} << 62;

    explicit IntegerSet(std::vector<std::uint64_t> elements);
    IntegerSet(std::initializer_list<std::uint64_t> elements);

    // Parses the text form "{0, 4, 8}". Whitespace is ignored.
    static IntegerSet parse(std::string_view text);

    const std::vector<std::uint64_t>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    std::uint64_t min() const { return elements_.front(); }
    std::uint64_t max() const { return elements_.back(); }
    bool contains(std::uint64_t value) const;

    std::string to_string() const;  // "{0,4,8}"

    friend auto operator<=>(const IntegerSet&, const IntegerSet&) = default;

private:
    std::vector<std::uint64_t> elements_;
};

// All pairwise sums a + b with a in `a`, b in `b`.
IntegerSet sumset(const IntegerSet& a, const IntegerSet& b);

}  // namespace iasi
