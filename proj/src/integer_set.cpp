#include "iasi/integer_set.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "iasi/errors.hpp"

namespace iasi {

namespace {

std::vector<std::uint64_t> normalized(std::vector<std::uint64_t> elements) {
    if (elements.empty()) {
        throw InvalidArgumentError("integer set must be non-empty");
    }
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    if (elements.back() > IntegerSet::kMaxElement) {
        std::ostringstream msg;
        msg << "element " << elements.back() << " exceeds the 2^62 cap";
        throw InvalidArgumentError(msg.str());
    }
    return elements;
}

}  // namespace

IntegerSet::IntegerSet(std::vector<std::uint64_t> elements)
    : elements_(normalized(std::move(elements))) {}

IntegerSet::IntegerSet(std::initializer_list<std::uint64_t> elements)
    : elements_(normalized(std::vector<std::uint64_t>(elements))) {}

IntegerSet IntegerSet::parse(std::string_view text) {
    std::size_t i = 0;
    auto skip_space = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto fail = [&](const std::string& what) {
        return ParseError(what, 1, static_cast<int>(i) + 1);
    };

    skip_space();
    if (i >= text.size() || text[i] != '{') throw fail("expected '{'");
    ++i;

    std::vector<std::uint64_t> elements;
    while (true) {
        skip_space();
        if (i >= text.size()) throw fail("unterminated set literal");
        if (text[i] == '}') {
            ++i;
            break;
        }
        if (!elements.empty()) {
            if (text[i] != ',') throw fail("expected ',' or '}'");
            ++i;
            skip_space();
        }
        if (i >= text.size()) throw fail("unterminated set literal");
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
        if (ec == std::errc::result_out_of_range) throw fail("integer out of range");
        if (ec != std::errc() || ptr == text.data() + i) {
            throw fail("expected a non-negative integer");
        }
        i = static_cast<std::size_t>(ptr - text.data());
        elements.push_back(value);
    }
    skip_space();
    if (i != text.size()) throw fail("trailing characters after '}'");
    if (elements.empty()) throw fail("set literal must contain at least one element");
    return IntegerSet(std::move(elements));
}

bool IntegerSet::contains(std::uint64_t value) const {
    return std::binary_search(elements_.begin(), elements_.end(), value);
}

std::string IntegerSet::to_string() const {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (i > 0) out << ',';
        out << elements_[i];
    }
    out << '}';
    return out.str();
}

IntegerSet sumset(const IntegerSet& a, const IntegerSet& b) {
    std::vector<std::uint64_t> sums;
    sums.reserve(a.size() * b.size());
    for (std::uint64_t x : a.elements()) {
        for (std::uint64_t y : b.elements()) {
            sums.push_back(x + y);
        }
    }
    return IntegerSet(std::move(sums));
}

}  // namespace iasi
