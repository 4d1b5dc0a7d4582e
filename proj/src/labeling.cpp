#include "iasi/labeling.hpp"

#include <map>
#include <utility>
#include <vector>

#include "iasi/errors.hpp"

namespace iasi {

void SetLabeling::assign(const std::string& vertex, IntegerSet label) {
    labels_.insert_or_assign(vertex, std::move(label));
}

bool SetLabeling::has(const std::string& vertex) const {
    return labels_.count(vertex) > 0;
}

const IntegerSet& SetLabeling::at(const std::string& vertex) const {
    auto it = labels_.find(vertex);
    if (it == labels_.end()) {
        throw MissingLabelError("vertex '" + vertex + "' has no label");
    }
    return it->second;
}

IntegerSet induced_edge_label(const SetLabeling& f, const std::string& u,
                              const std::string& v) {
    return sumset(f.at(u), f.at(v));
}

Verdict verify_iasi(const Graph& g, const SetLabeling& f) {
    for (const auto& [vertex, label] : f.assignments()) {
        (void)label;
        if (!g.has_vertex(vertex)) {
            throw InvalidArgumentError("label assigned to unknown vertex '" + vertex + "'");
        }
    }

    // Vertex injectivity: any two vertices sharing a label.
    std::map<IntegerSet, std::string> seen_vertex_labels;
    for (const std::string& vertex : g.vertices()) {
        const IntegerSet& label = f.at(vertex);  // throws if missing
        auto [it, inserted] = seen_vertex_labels.try_emplace(label, vertex);
        if (!inserted) {
            return Verdict{false, "vertices '" + it->second + "' and '" + vertex +
                                      "' share label " + label.to_string()};
        }
    }

    // Edge injectivity: any two edges inducing the same sumset.
    std::map<IntegerSet, std::pair<std::string, std::string>> seen_edge_labels;
    for (const auto& [u, v] : g.edges()) {
        IntegerSet label = induced_edge_label(f, u, v);
        auto [it, inserted] = seen_edge_labels.try_emplace(std::move(label), std::make_pair(u, v));
        if (!inserted) {
            const auto& [pu, pv] = it->second;
            return Verdict{false, "edges '" + pu + " " + pv + "' and '" + u + " " + v +
                                      "' share label " + induced_edge_label(f, u, v).to_string()};
        }
    }
    return Verdict{};
}

std::size_t set_indexing_number(const SetLabeling& f, const std::string& vertex) {
    return f.at(vertex).size();
}

std::size_t edge_set_indexing_number(const SetLabeling& f, const std::string& u,
                                     const std::string& v) {
    return induced_edge_label(f, u, v).size();
}

bool is_strong_edge(const IntegerSet& a, const IntegerSet& b) {
    return sumset(a, b).size() == a.size() * b.size();
}

}  // namespace iasi
