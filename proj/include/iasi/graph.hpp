#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace iasi {

// A finite simple graph over opaque string vertex ids. Vertices keep their
// insertion order — it is part of the graph's identity and what makes the
// labeling constructors deterministic. Edges are unordered pairs; loops and
// parallels are rejected.
class Graph {
public:
    Graph() = default;

    // Adds the vertex if new; either way returns its index.
    std::size_t add_vertex(const std::string& id);
    // Adds missing endpoints first. Loops are errors; duplicates are no-ops.
    void add_edge(const std::string& u, const std::string& v);

    bool has_vertex(const std::string& id) const;
    bool has_edge(const std::string& u, const std::string& v) const;

    const std::vector<std::string>& vertices() const { return ids_; }
    std::size_t vertex_count() const { return ids_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    // Edges in insertion order, endpoints in lexicographic order.
    std::vector<std::pair<std::string, std::string>> edges() const;
    // Canonical form: endpoint-normalized and lexicographically sorted.
    std::vector<std::pair<std::string, std::string>> sorted_edges() const;

    // Neighbours in edge-insertion order.
    std::vector<std::string> neighbors(const std::string& id) const;
    std::size_t degree(const std::string& id) const;

    // Rejects the empty graph, and isolated vertices unless allowed.
    void validate(bool allow_isolated = false) const;

    // Copy with every vertex id passed through `mapping` (ids absent from
    // the map are kept). Rejects mappings that merge vertices.
    Graph relabeled(const std::map<std::string, std::string>& mapping) const;

    // Structural equality: same vertex set and edge set, order-free.
    friend bool operator==(const Graph& a, const Graph& b);

    // Edge-list text form: one "u v" per line, '#' starts a comment.
    // Parse errors carry 1-based line/column positions.
    static Graph parse_edge_list(std::istream& in);
    static Graph parse_edge_list_text(std::string_view text);
    std::string to_edge_list() const;  // canonical sorted order

private:
    std::size_t index_of(const std::string& id) const;  // throws NotFoundError
    static std::uint64_t edge_key(std::size_t a, std::size_t b);

    std::vector<std::string> ids_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<std::vector<std::size_t>> adjacency_;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;  // (lo, hi) by index
    std::unordered_set<std::uint64_t> edge_keys_;
};

// Two-coloring found by breadth-first layering in vertex order; each
// component's first vertex lands in part_x. Parts list vertices in the
// graph's vertex order.
struct Bipartition {
    std::vector<std::string> part_x;
    std::vector<std::string> part_y;
};

std::optional<Bipartition> is_bipartite(const Graph& g);

}  // namespace iasi
