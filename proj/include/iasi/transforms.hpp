#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "iasi/graph.hpp"

namespace iasi {

// Where a derived vertex came from: an original vertex or an original edge.
struct ElementOrigin {
    enum class Kind { vertex, edge };
    Kind kind;
    std::string u;  // the vertex id, or the edge's lexicographically first endpoint
    std::string v;  // the edge's other endpoint; empty for vertices
};

// Total map from derived vertex ids to their origins.
using ElementCorrespondence = std::map<std::string, ElementOrigin>;

struct DerivedGraph {
    Graph graph;
    ElementCorrespondence correspondence;
};

// Stable id of the derived vertex standing for edge {u, v}: "e:u-v" with
// the endpoints in lexicographic order.
std::string edge_vertex_id(const std::string& u, const std::string& v);

// L(G): one vertex per edge of G, adjacent when the underlying edges share
// an endpoint. Requires at least one edge.
DerivedGraph line_graph(const Graph& g);

// T(G): all vertices and edge-vertices of G; adjacency joins adjacent
// vertices, edges sharing an endpoint, and incident vertex/edge pairs.
DerivedGraph total_graph(const Graph& g);

struct VertexAddition {
    Graph graph;
    std::string new_vertex;
};
struct VertexMerge {
    Graph graph;
    std::string merged_vertex;
};

// Replaces edge {u, v} by the path u - s:k - v, where k is the smallest
// index such that "s:k" is unused.
VertexAddition subdivide(const Graph& g, const std::string& u, const std::string& v);

// Contracts edge {u, v} into "c:u+v" (endpoints in lexicographic order),
// dropping the contracted edge and merging any parallel edges that arise.
VertexMerge contract(const Graph& g, const std::string& u, const std::string& v);

// Elementary topological reduction: deletes a degree-2 vertex whose two
// neighbours are non-adjacent, joining those neighbours directly.
Graph topological_reduction(const Graph& g, const std::string& v);

// The subgraph on `vertex_ids` carrying exactly `edge_list`; every listed
// edge must exist in g with both endpoints kept. May leave isolated
// vertices (validate(false) flags them).
Graph subgraph(const Graph& g, const std::vector<std::string>& vertex_ids,
               const std::vector<std::pair<std::string, std::string>>& edge_list);

}  // namespace iasi
