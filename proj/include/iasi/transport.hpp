#pragma once

#include <optional>
#include <string>
#include <utility>

#include "iasi/graph.hpp"
#include "iasi/labeling.hpp"
#include "iasi/transforms.hpp"

namespace iasi {

enum class TransformKind { line, total, contract, subdivide, reduce };

std::string to_string(TransformKind kind);
TransformKind parse_transform_kind(const std::string& name);  // throws InvalidArgumentError

struct TransformArgs {
    std::optional<std::pair<std::string, std::string>> edge;  // contract, subdivide
    std::optional<std::string> vertex;                        // reduce
};

struct TransportResult {
    Graph graph;
    SetLabeling labeling;
    Verdict verdict;                        // of the derived labeling on the derived graph
    std::optional<std::string> new_vertex;  // the vertex introduced by contract/subdivide
};

// Applies the transform to g and carries f across it: edge-vertices receive
// the induced label of their edge, merged vertices the induced label of the
// contracted edge, removed vertices drop their labels, surviving vertices
// keep theirs. The input labeling must be a valid set-indexer of g
// (PreconditionError otherwise); whether the derived labeling still is one
// is reported in the verdict, not thrown.
TransportResult transport_labeling(const Graph& g, const SetLabeling& f, TransformKind kind,
                                   const TransformArgs& args = {});

}  // namespace iasi
