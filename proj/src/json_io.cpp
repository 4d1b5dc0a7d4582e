#include "iasi/json_io.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "iasi/errors.hpp"
#include "json.hpp"

namespace iasi {

namespace {

using ordered_json = nlohmann::ordered_json;

// Translate a nlohmann byte offset into the 1-based line/column scheme the
// rest of the parsers use.
ParseError to_parse_error(const std::string& text, const nlohmann::json::exception& e,
                          std::size_t byte) {
    int line = 1;
    int column = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return ParseError(e.what(), line, byte == 0 ? 0 : column);
}

ordered_json parse_document(const std::string& text) {
    try {
        return ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw to_parse_error(text, e, e.byte);
    }
}

}  // namespace

SetLabeling parse_labeling_json(const std::string& text) {
    ordered_json doc = parse_document(text);
    if (!doc.is_object()) {
        throw ParseError("labeling must be a JSON object mapping vertex to integer array",
                         1, 0);
    }
    SetLabeling f;
    for (const auto& [vertex, value] : doc.items()) {
        if (!value.is_array()) {
            throw ParseError("label of vertex '" + vertex + "' must be an integer array",
                             1, 0);
        }
        std::vector<std::uint64_t> elements;
        for (const auto& item : value) {
            if (!item.is_number_unsigned()) {
                throw ParseError("label of vertex '" + vertex +
                                     "' must hold non-negative integers",
                                 1, 0);
            }
            elements.push_back(item.get<std::uint64_t>());
        }
        try {
            f.assign(vertex, IntegerSet(elements));
        } catch (const Error& e) {
            throw ParseError("label of vertex '" + vertex + "': " + e.what(), 1, 0);
        }
    }
    return f;
}

std::string labeling_to_json(const SetLabeling& f) {
    ordered_json doc = ordered_json::object();
    for (const auto& [vertex, label] : f.assignments()) {
        doc[vertex] = label.elements();
    }
    return doc.dump(2);
}

std::string graph_to_json(const Graph& g) {
    std::vector<std::string> vertices = g.vertices();
    std::sort(vertices.begin(), vertices.end());
    ordered_json doc = ordered_json::object();
    doc["vertices"] = vertices;
    ordered_json edges = ordered_json::array();
    for (const auto& [u, v] : g.sorted_edges()) {
        edges.push_back(ordered_json::array({u, v}));
    }
    doc["edges"] = edges;
    return doc.dump(2);
}

Graph parse_graph_json(const std::string& text) {
    ordered_json doc = parse_document(text);
    if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges") ||
        !doc["vertices"].is_array() || !doc["edges"].is_array()) {
        throw ParseError("graph must be an object with vertices and edges arrays", 1, 0);
    }
    Graph g;
    try {
        for (const auto& v : doc["vertices"]) {
            if (!v.is_string()) throw ParseError("vertex ids must be strings", 1, 0);
            g.add_vertex(v.get<std::string>());
        }
        for (const auto& e : doc["edges"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
                throw ParseError("each edge must be a [u, v] string pair", 1, 0);
            }
            g.add_edge(e[0].get<std::string>(), e[1].get<std::string>());
        }
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(e.what(), 1, 0);
    }
    return g;
}

std::string classification_to_json(const ClassificationReport& report) {
    ordered_json doc = ordered_json::object();
    doc["vertex_arithmetic"] = report.vertex_arithmetic;
    doc["edge_arithmetic"] = report.edge_arithmetic;
    doc["arithmetic"] = report.arithmetic;
    doc["isoarithmetic"] = report.isoarithmetic;
    doc["biarithmetic"] = report.biarithmetic;
    doc["semi_arithmetic_first_kind"] = report.semi_arithmetic_first_kind;
    doc["semi_arithmetic_second_kind"] = report.semi_arithmetic_second_kind;
    doc["strong"] = report.strong;
    if (report.edge_uniform_k) {
        doc["edge_uniform_k"] = *report.edge_uniform_k;
    } else {
        doc["edge_uniform_k"] = nullptr;
    }
    if (report.vertex_uniform_l) {
        doc["vertex_uniform_l"] = *report.vertex_uniform_l;
    } else {
        doc["vertex_uniform_l"] = nullptr;
    }
    ordered_json per_edge = ordered_json::object();
    for (const auto& [edge, detail] : report.per_edge) {
        ordered_json entry = ordered_json::object();
        if (detail.kind) {
            ordered_json kind = ordered_json::object();
            kind["relation"] = to_string(detail.kind->relation);
            if (detail.kind->k) {
                kind["k"] = *detail.kind->k;
            } else {
                kind["k"] = nullptr;
            }
            kind["d_small"] = detail.kind->d_small;
            kind["d_large"] = detail.kind->d_large;
            entry["kind"] = kind;
        } else {
            entry["kind"] = nullptr;
        }
        entry["set_indexing_number"] = detail.set_indexing_number;
        entry["strong"] = detail.strong;
        entry["edge_label_is_ap"] = detail.edge_label_is_ap;
        per_edge[edge] = entry;
    }
    doc["per_edge"] = per_edge;
    return doc.dump(2);
}

std::string audit_report_to_json(const AuditReport& report) {
    ordered_json doc = ordered_json::object();
    doc["theorem"] = report.theorem;
    ordered_json bounds = ordered_json::object();
    bounds["first_max"] = report.bounds.first_max;
    bounds["diff_max"] = report.bounds.diff_max;
    bounds["len_min"] = report.bounds.len_min;
    bounds["len_max"] = report.bounds.len_max;
    doc["bounds"] = bounds;
    doc["checked"] = report.checked;
    ordered_json ces = ordered_json::array();
    for (const Counterexample& ce : report.counterexamples) {
        ordered_json entry = ordered_json::object();
        entry["p"] = ce.p;
        entry["q"] = ce.q;
        entry["expected"] = ce.expected;
        entry["observed"] = ce.observed;
        ces.push_back(entry);
    }
    doc["counterexamples"] = ces;
    doc["verdict"] = report.verdict;
    if (!report.readings.empty()) {
        ordered_json readings = ordered_json::array();
        for (const ReadingStats& stats : report.readings) {
            ordered_json entry = ordered_json::object();
            entry["reading"] = stats.reading;
            entry["checked"] = stats.checked;
            entry["agreements"] = stats.agreements;
            entry["rate"] = stats.checked == 0
                                ? 0.0
                                : static_cast<double>(stats.agreements) /
                                      static_cast<double>(stats.checked);
            readings.push_back(entry);
        }
        doc["readings"] = readings;
    }
    return doc.dump(2);
}

}  // namespace iasi
