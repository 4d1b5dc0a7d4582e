#include "iasi/transport.hpp"

#include "iasi/errors.hpp"

namespace iasi {

std::string to_string(TransformKind kind) {
    switch (kind) {
        case TransformKind::line: return "line";
        case TransformKind::total: return "total";
        case TransformKind::contract: return "contract";
        case TransformKind::subdivide: return "subdivide";
        case TransformKind::reduce: return "reduce";
    }
    throw Error("unreachable transform kind");
}

TransformKind parse_transform_kind(const std::string& name) {
    if (name == "line") return TransformKind::line;
    if (name == "total") return TransformKind::total;
    if (name == "contract") return TransformKind::contract;
    if (name == "subdivide") return TransformKind::subdivide;
    if (name == "reduce") return TransformKind::reduce;
    throw InvalidArgumentError("unknown transform '" + name +
                               "' (expected line, total, contract, subdivide, or reduce)");
}

namespace {

SetLabeling copy_except(const SetLabeling& f, const Graph& derived) {
    SetLabeling h;
    for (const auto& [vertex, label] : f.assignments()) {
        if (derived.has_vertex(vertex)) {
            h.assign(vertex, label);
        }
    }
    return h;
}

const std::pair<std::string, std::string>& require_edge(const TransformArgs& args,
                                                        TransformKind kind) {
    if (args.vertex) {
        throw InvalidArgumentError(to_string(kind) + " takes an edge, not a vertex");
    }
    if (!args.edge) {
        throw InvalidArgumentError(to_string(kind) + " requires an edge argument");
    }
    return *args.edge;
}

}  // namespace

TransportResult transport_labeling(const Graph& g, const SetLabeling& f, TransformKind kind,
                                   const TransformArgs& args) {
    Verdict input = verify_iasi(g, f);
    if (!input.ok) {
        throw PreconditionError("input labeling is not a set-indexer: " + input.violation);
    }

    TransportResult result;
    switch (kind) {
        case TransformKind::line: {
            if (args.edge || args.vertex) {
                throw InvalidArgumentError("line takes no edge or vertex argument");
            }
            DerivedGraph lg = line_graph(g);
            result.graph = std::move(lg.graph);
            for (const auto& [id, origin] : lg.correspondence) {
                result.labeling.assign(id, induced_edge_label(f, origin.u, origin.v));
            }
            break;
        }
        case TransformKind::total: {
            if (args.edge || args.vertex) {
                throw InvalidArgumentError("total takes no edge or vertex argument");
            }
            DerivedGraph tg = total_graph(g);
            result.graph = std::move(tg.graph);
            for (const auto& [id, origin] : tg.correspondence) {
                if (origin.kind == ElementOrigin::Kind::vertex) {
                    result.labeling.assign(id, f.at(origin.u));
                } else {
                    result.labeling.assign(id, induced_edge_label(f, origin.u, origin.v));
                }
            }
            break;
        }
        case TransformKind::contract: {
            const auto& [u, v] = require_edge(args, kind);
            VertexMerge merge = contract(g, u, v);
            result.labeling = copy_except(f, merge.graph);
            result.labeling.assign(merge.merged_vertex, induced_edge_label(f, u, v));
            result.graph = std::move(merge.graph);
            result.new_vertex = merge.merged_vertex;
            break;
        }
        case TransformKind::subdivide: {
            const auto& [u, v] = require_edge(args, kind);
            VertexAddition addition = subdivide(g, u, v);
            result.labeling = copy_except(f, addition.graph);
            result.labeling.assign(addition.new_vertex, induced_edge_label(f, u, v));
            result.graph = std::move(addition.graph);
            result.new_vertex = addition.new_vertex;
            break;
        }
        case TransformKind::reduce: {
            if (args.edge) {
                throw InvalidArgumentError("reduce takes a vertex, not an edge");
            }
            if (!args.vertex) {
                throw InvalidArgumentError("reduce requires a vertex argument");
            }
            result.graph = topological_reduction(g, *args.vertex);
            result.labeling = copy_except(f, result.graph);
            break;
        }
    }

    result.verdict = verify_iasi(result.graph, result.labeling);
    return result;
}

}  // namespace iasi
