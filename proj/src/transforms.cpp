#include "iasi/transforms.hpp"

#include <algorithm>
#include <set>

#include "iasi/errors.hpp"

namespace iasi {

namespace {

void require_edge(const Graph& g, const std::string& u, const std::string& v) {
    if (!g.has_edge(u, v)) throw NotFoundError("edge '" + u + " " + v + "' not in graph");
}

ElementOrigin vertex_origin(const std::string& id) {
    return ElementOrigin{ElementOrigin::Kind::vertex, id, ""};
}

ElementOrigin edge_origin(const std::string& u, const std::string& v) {
    return ElementOrigin{ElementOrigin::Kind::edge, std::min(u, v), std::max(u, v)};
}

}  // namespace

std::string edge_vertex_id(const std::string& u, const std::string& v) {
    return "e:" + std::min(u, v) + "-" + std::max(u, v);
}

DerivedGraph line_graph(const Graph& g) {
    if (g.edge_count() == 0) {
        throw InvalidArgumentError("line graph requires at least one edge");
    }
    DerivedGraph result;
    const auto edges = g.edges();
    for (const auto& [u, v] : edges) {
        const std::string id = edge_vertex_id(u, v);
        result.graph.add_vertex(id);
        result.correspondence.emplace(id, edge_origin(u, v));
    }
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const auto& [a, b] = edges[i];
            const auto& [c, d] = edges[j];
            if (a == c || a == d || b == c || b == d) {
                result.graph.add_edge(edge_vertex_id(a, b), edge_vertex_id(c, d));
            }
        }
    }
    return result;
}

DerivedGraph total_graph(const Graph& g) {
    DerivedGraph result;
    for (const std::string& id : g.vertices()) {
        result.graph.add_vertex(id);
        result.correspondence.emplace(id, vertex_origin(id));
    }
    const auto edges = g.edges();
    for (const auto& [u, v] : edges) {
        const std::string id = edge_vertex_id(u, v);
        result.graph.add_vertex(id);
        result.correspondence.emplace(id, edge_origin(u, v));
    }
    // Adjacent vertices of G.
    for (const auto& [u, v] : edges) result.graph.add_edge(u, v);
    // Adjacent edges of G.
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const auto& [a, b] = edges[i];
            const auto& [c, d] = edges[j];
            if (a == c || a == d || b == c || b == d) {
                result.graph.add_edge(edge_vertex_id(a, b), edge_vertex_id(c, d));
            }
        }
    }
    // Incident vertex/edge pairs.
    for (const auto& [u, v] : edges) {
        result.graph.add_edge(u, edge_vertex_id(u, v));
        result.graph.add_edge(v, edge_vertex_id(u, v));
    }
    return result;
}

VertexAddition subdivide(const Graph& g, const std::string& u, const std::string& v) {
    require_edge(g, u, v);
    std::string fresh;
    for (std::size_t k = 0;; ++k) {
        fresh = "s:" + std::to_string(k);
        if (!g.has_vertex(fresh)) break;
    }
    Graph derived;
    for (const std::string& id : g.vertices()) derived.add_vertex(id);
    derived.add_vertex(fresh);
    for (const auto& [a, b] : g.edges()) {
        if ((a == u && b == v) || (a == v && b == u)) continue;
        derived.add_edge(a, b);
    }
    derived.add_edge(u, fresh);
    derived.add_edge(fresh, v);
    return VertexAddition{std::move(derived), std::move(fresh)};
}

VertexMerge contract(const Graph& g, const std::string& u, const std::string& v) {
    require_edge(g, u, v);
    const std::string merged = "c:" + std::min(u, v) + "+" + std::max(u, v);
    if (g.has_vertex(merged)) {
        throw InvalidArgumentError("contraction id '" + merged + "' already taken");
    }
    Graph derived;
    for (const std::string& id : g.vertices()) {
        derived.add_vertex(id == u || id == v ? merged : id);
    }
    for (const auto& [a, b] : g.edges()) {
        if ((a == u && b == v) || (a == v && b == u)) continue;  // the contracted edge
        const std::string& from = (a == u || a == v) ? merged : a;
        const std::string& to = (b == u || b == v) ? merged : b;
        derived.add_edge(from, to);  // parallels merge via set semantics
    }
    return VertexMerge{std::move(derived), merged};
}

Graph topological_reduction(const Graph& g, const std::string& v) {
    if (g.degree(v) != 2) {
        throw PreconditionError("vertex '" + v + "' must have degree 2, has " +
                                std::to_string(g.degree(v)));
    }
    const auto around = g.neighbors(v);
    const std::string& u = around[0];
    const std::string& w = around[1];
    if (g.has_edge(u, w)) {
        throw PreconditionError("neighbours '" + u + "' and '" + w +
                                "' of '" + v + "' are adjacent");
    }
    Graph derived;
    for (const std::string& id : g.vertices()) {
        if (id != v) derived.add_vertex(id);
    }
    for (const auto& [a, b] : g.edges()) {
        if (a == v || b == v) continue;
        derived.add_edge(a, b);
    }
    derived.add_edge(u, w);
    return derived;
}

Graph subgraph(const Graph& g, const std::vector<std::string>& vertex_ids,
               const std::vector<std::pair<std::string, std::string>>& edge_list) {
    Graph derived;
    std::set<std::string> kept;
    for (const std::string& id : vertex_ids) {
        if (!g.has_vertex(id)) throw NotFoundError("vertex '" + id + "' not in graph");
        if (!kept.insert(id).second) {
            throw InvalidArgumentError("duplicate subgraph vertex '" + id + "'");
        }
        derived.add_vertex(id);
    }
    for (const auto& [u, v] : edge_list) {
        if (!g.has_edge(u, v)) throw NotFoundError("edge '" + u + " " + v + "' not in graph");
        if (!kept.count(u) || !kept.count(v)) {
            throw InvalidArgumentError("subgraph edge '" + u + " " + v +
                                       "' has an endpoint outside the vertex list");
        }
        derived.add_edge(u, v);
    }
    return derived;
}

}  // namespace iasi
