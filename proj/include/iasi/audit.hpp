#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "iasi/ap_set.hpp"
#include "iasi/graph.hpp"

namespace iasi {

// Bounded descriptor space the pair audits sweep exhaustively.
struct SearchBounds {
    std::uint64_t first_max = 3;  // first terms 0..first_max
    std::uint64_t diff_max = 6;   // differences 1..diff_max
    std::size_t len_min = 3;      // arithmetic set-labels need >= 3 elements
    std::size_t len_max = 5;
};

void validate(const SearchBounds& b);  // throws InvalidArgumentError

// Claim registry. Ids name the audited statements; they are opaque tokens
// shared with the CLI's --theorem flag.
enum class TheoremId { T1_3, T2_3, C2_4, P2_6, T2_7, T2_8, T2_9 };

TheoremId parse_theorem_id(const std::string& token);  // "T2.3" etc.
std::string to_string(TheoremId id);
std::vector<TheoremId> all_theorem_ids();

enum class ExecutionMode { serial, parallel };

struct Counterexample {
    std::string p;  // first descriptor (or instance name), as text
    std::string q;  // second descriptor (or parameter set), as text
    std::string expected;
    std::string observed;
};

// Agreement tally for one documented reading of an ambiguous formula.
struct ReadingStats {
    std::string reading;
    std::uint64_t checked = 0;
    std::uint64_t agreements = 0;
};

struct AuditReport {
    std::string theorem;
    SearchBounds bounds;
    std::uint64_t checked = 0;  // in-scope instances evaluated
    std::vector<Counterexample> counterexamples;
    std::string verdict;  // "consistent" | "counterexamples-found"
    std::vector<ReadingStats> readings;  // only for ambiguous claims (T2.9)
};

// All descriptors within bounds, ordered by (first, difference, length).
std::vector<APSetDescriptor> enumerate_descriptors(const SearchBounds& b);

// All ordered descriptor pairs, first component major.
std::vector<std::pair<APSetDescriptor, APSetDescriptor>> enumerate_ap_pairs(
    const SearchBounds& b);

// Instances the audit will visit (pairs, or family graphs for T2.7); the CLI
// reports this before running.
std::uint64_t search_space_size(TheoremId id, const SearchBounds& b);

// Sweeps the claim over its in-scope instances, evaluating hypothesis and
// conclusion with setcore primitives and re-verifying every counterexample
// against the naive oracles before listing it (a disagreement between the
// two is a logic error). Reports are byte-identical across execution modes.
AuditReport audit(TheoremId id, const SearchBounds& bounds = {},
                  ExecutionMode mode = ExecutionMode::parallel);

struct NamedGraph {
    std::string name;
    Graph graph;
};

// Fixed fixture: paths, even cycles, stars, and complete bipartite graphs
// up to 6 vertices. Used by the T2.7 audit and the transform round-trips.
std::vector<NamedGraph> audit_graph_family();

}  // namespace iasi
