#include "iasi/classify.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "iasi/errors.hpp"

namespace iasi {

std::string to_string(EdgeRelation relation) {
    switch (relation) {
        case EdgeRelation::equal_difference: return "equal-difference";
        case EdgeRelation::arithmetic_multiple: return "arithmetic-multiple";
        case EdgeRelation::first_kind: return "first-kind";
        case EdgeRelation::second_kind_coprime: return "second-kind-coprime";
        case EdgeRelation::second_kind_common_factor: return "second-kind-common-factor";
    }
    throw Error("unreachable edge relation");
}

EdgeKind edge_kind(const APSetDescriptor& a, const APSetDescriptor& b) {
    if (a.length < 3 || b.length < 3) {
        throw PreconditionError("edge_kind requires both sets to have at least 3 elements");
    }
    const APSetDescriptor& small = (a.difference <= b.difference) ? a : b;
    const APSetDescriptor& large = (a.difference <= b.difference) ? b : a;

    EdgeKind kind;
    kind.d_small = small.difference;
    kind.d_large = large.difference;
    if (large.difference % small.difference == 0) {
        std::uint64_t k = large.difference / small.difference;
        kind.k = k;
        if (k == 1) {
            kind.relation = EdgeRelation::equal_difference;
        } else if (k <= small.length) {
            kind.relation = EdgeRelation::arithmetic_multiple;
        } else {
            kind.relation = EdgeRelation::first_kind;
        }
    } else {
        std::uint64_t g = std::gcd(small.difference, large.difference);
        kind.relation = (g == 1) ? EdgeRelation::second_kind_coprime
                                 : EdgeRelation::second_kind_common_factor;
    }
    return kind;
}

std::string edge_report_key(const std::string& u, const std::string& v) {
    return (u <= v) ? u + "," + v : v + "," + u;
}

ClassificationReport classify(const Graph& g, const SetLabeling& f) {
    g.validate(/*allow_isolated=*/true);
    Verdict verdict = verify_iasi(g, f);
    if (!verdict.ok) {
        throw PreconditionError("labeling is not a set-indexer: " + verdict.violation);
    }

    ClassificationReport report;

    // Vertex side.
    std::map<std::string, std::optional<APSetDescriptor>> vertex_ap;
    bool vertex_arithmetic = true;
    std::optional<std::size_t> vertex_uniform_l;
    bool vertex_sizes_uniform = true;
    for (const std::string& vertex : g.vertices()) {
        const IntegerSet& label = f.at(vertex);
        auto ap = recognize_ap(label);
        vertex_ap.emplace(vertex, ap);
        if (!ap || label.size() < 3) {
            vertex_arithmetic = false;
        }
        if (!vertex_uniform_l) {
            vertex_uniform_l = label.size();
        } else if (*vertex_uniform_l != label.size()) {
            vertex_sizes_uniform = false;
        }
    }
    if (!vertex_sizes_uniform) {
        vertex_uniform_l.reset();
    }

    // Edge side.
    bool edge_arithmetic = true;
    bool all_edges_strong = true;
    bool all_multiple = true;        // every edge an arithmetic multiple, ratio > 1
    bool all_first_kind = true;
    bool all_second_kind = true;
    std::optional<std::size_t> edge_uniform_k;
    bool edge_sizes_uniform = true;
    std::vector<std::uint64_t> differences;  // vertex + edge differences, for isoarithmetic

    for (const auto& [u, v] : g.edges()) {
        IntegerSet label = induced_edge_label(f, u, v);
        PerEdgeReport per;
        per.set_indexing_number = label.size();
        per.strong = label.size() == f.at(u).size() * f.at(v).size();
        auto edge_ap = recognize_ap(label);
        per.edge_label_is_ap = edge_ap.has_value();
        if (!edge_ap || label.size() < 3) {
            edge_arithmetic = false;
        }
        if (edge_ap && label.size() >= 3) {
            differences.push_back(edge_ap->difference);
        }

        const auto& au = vertex_ap.at(u);
        const auto& av = vertex_ap.at(v);
        if (au && av && au->length >= 3 && av->length >= 3) {
            per.kind = edge_kind(*au, *av);
            EdgeRelation rel = per.kind->relation;
            all_multiple = all_multiple && rel == EdgeRelation::arithmetic_multiple;
            all_first_kind = all_first_kind && rel == EdgeRelation::first_kind;
            all_second_kind = all_second_kind && (rel == EdgeRelation::second_kind_coprime ||
                                                  rel == EdgeRelation::second_kind_common_factor);
        } else {
            all_multiple = all_first_kind = all_second_kind = false;
        }

        all_edges_strong = all_edges_strong && per.strong;
        if (!edge_uniform_k) {
            edge_uniform_k = per.set_indexing_number;
        } else if (*edge_uniform_k != per.set_indexing_number) {
            edge_sizes_uniform = false;
        }
        report.per_edge.emplace(edge_report_key(u, v), std::move(per));
    }
    if (!edge_sizes_uniform) {
        edge_uniform_k.reset();
    }

    report.vertex_arithmetic = vertex_arithmetic;
    report.edge_arithmetic = edge_arithmetic;
    report.arithmetic = vertex_arithmetic && edge_arithmetic;
    report.strong = all_edges_strong;
    report.edge_uniform_k = edge_uniform_k;
    report.vertex_uniform_l = vertex_uniform_l;
    report.biarithmetic = vertex_arithmetic && all_multiple;
    report.semi_arithmetic_first_kind = vertex_arithmetic && all_first_kind;
    report.semi_arithmetic_second_kind = vertex_arithmetic && all_second_kind;

    bool iso = report.arithmetic;
    if (iso) {
        for (const auto& [vertex, ap] : vertex_ap) {
            (void)vertex;
            differences.push_back(ap->difference);
        }
        iso = std::all_of(differences.begin(), differences.end(),
                          [&](std::uint64_t d) { return d == differences.front(); });
    }
    report.isoarithmetic = iso;
    return report;
}

}  // namespace iasi
