#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "iasi/ap_set.hpp"
#include "iasi/graph.hpp"
#include "iasi/labeling.hpp"

namespace iasi {

// Relation between the common differences of an arithmetic vertex pair.
enum class EdgeRelation {
    equal_difference,          // d_small == d_large
    arithmetic_multiple,       // d_large = k * d_small, 1 < k <= len(small-diff set)
    first_kind,                // d_large = k * d_small, k > len(small-diff set)
    second_kind_coprime,       // no divisibility, gcd(d_a, d_b) == 1
    second_kind_common_factor  // no divisibility, gcd(d_a, d_b) > 1
};

std::string to_string(EdgeRelation relation);

struct EdgeKind {
    EdgeRelation relation;
    std::optional<std::uint64_t> k;  // ratio, present iff the differences divide
    std::uint64_t d_small = 0;
    std::uint64_t d_large = 0;
};

// Classifies the relation between two arithmetic endpoint sets.  Both must
// have at least three elements; smaller sets have no well-defined common
// difference for this purpose.
EdgeKind edge_kind(const APSetDescriptor& a, const APSetDescriptor& b);

struct PerEdgeReport {
    std::optional<EdgeKind> kind;  // absent when an endpoint set is not arithmetic
    std::size_t set_indexing_number = 0;
    bool strong = false;
    bool edge_label_is_ap = false;
};

std::string edge_report_key(const std::string& u, const std::string& v);

struct ClassificationReport {
    bool vertex_arithmetic = false;
    bool edge_arithmetic = false;
    bool arithmetic = false;
    bool isoarithmetic = false;
    bool biarithmetic = false;
    bool semi_arithmetic_first_kind = false;
    bool semi_arithmetic_second_kind = false;
    bool strong = false;
    std::optional<std::size_t> edge_uniform_k;   // common |f+(uv)| if one exists
    std::optional<std::size_t> vertex_uniform_l; // common |f(v)| if one exists
    std::map<std::string, PerEdgeReport> per_edge;
};

// Full predicate battery for a verified set-labeling.  Throws
// PreconditionError if the labeling is not a valid set-indexer of g.
ClassificationReport classify(const Graph& g, const SetLabeling& f);

}  // namespace iasi
