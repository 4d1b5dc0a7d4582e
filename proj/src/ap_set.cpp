#include "iasi/ap_set.hpp"

#include <sstream>

#include "iasi/errors.hpp"

namespace iasi {

APSetDescriptor::APSetDescriptor(std::uint64_t first_, std::uint64_t difference_,
                                 std::size_t length_)
    : first(first_), difference(difference_), length(length_) {
    if (difference == 0) throw InvalidArgumentError("AP difference must be >= 1");
    if (length == 0) throw InvalidArgumentError("AP length must be >= 1");
    unsigned __int128 top = static_cast<unsigned __int128>(first) +
                            static_cast<unsigned __int128>(length - 1) * difference;
    if (top > IntegerSet::kMaxElement) {
        throw InvalidArgumentError("AP descriptor expands past the 2^62 element cap");
    }
}

IntegerSet APSetDescriptor::expand() const {
    std::vector<std::uint64_t> elements;
    elements.reserve(length);
    for (std::size_t r = 0; r < length; ++r) {
        elements.push_back(first + r * difference);
    }
    return IntegerSet(std::move(elements));
}

std::string APSetDescriptor::to_string() const {
    std::ostringstream out;
    out << '(' << first << ',' << difference << ',' << length << ')';
    return out.str();
}

std::optional<APSetDescriptor> recognize_ap(const IntegerSet& s) {
    const auto& e = s.elements();
    if (e.size() == 1) return APSetDescriptor(e[0], 1, 1);
    std::uint64_t gap = e[1] - e[0];
    for (std::size_t i = 2; i < e.size(); ++i) {
        if (e[i] - e[i - 1] != gap) return std::nullopt;
    }
    return APSetDescriptor(e[0], gap, e.size());
}

std::uint64_t ap_sumset_cardinality(const APSetDescriptor& p, const APSetDescriptor& q) {
    if (p.length == 1) return q.length;
    if (q.length == 1) return p.length;
    const APSetDescriptor& small = p.difference <= q.difference ? p : q;
    const APSetDescriptor& large = p.difference <= q.difference ? q : p;
    if (large.difference % small.difference == 0) {
        // Row arrangement: one shifted copy of the small-difference set per
        // element of the large-difference set, rows spaced k small-steps.
        std::uint64_t k = large.difference / small.difference;
        std::uint64_t m = small.length;
        std::uint64_t n = large.length;
        if (k <= m) return (n - 1) * k + m;  // rows fuse into one progression
        return m * n;                        // rows are pairwise disjoint
    }
    // Incommensurate differences: no closed form, enumerate.
    return sumset(p.expand(), q.expand()).size();
}

}  // namespace iasi
