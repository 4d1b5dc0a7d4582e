#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "iasi/graph.hpp"
#include "iasi/labeling.hpp"

namespace iasi {

struct ConstructionParams {
    std::size_t m = 3;               // label size on the X side
    std::size_t n = 3;               // label size on the Y side
    std::uint64_t d = 1;             // base common difference
    std::optional<std::uint64_t> k;  // difference ratio; defaults to m + 1
};

// Builds a set-indexer whose every edge joins differences in ratio k > m:
// bipartite graphs get m-element difference-d sets on one side and n-element
// difference-k*d sets on the other; non-bipartite graphs need m == n and use
// differences d*k^c per greedy color c. Colliding labels are repaired by
// shifting starts. Throws InvalidArgumentError for bad parameters and
// ConstructionImpossibleError for non-bipartite graphs with m != n.
SetLabeling construct_first_kind(const Graph& g, const ConstructionParams& params = {});

// Builds a set-indexer in which every vertex and every induced edge label is
// an arithmetic progression with the same difference d. sizes gives one
// label length (>= 3) per vertex in vertex order. Collision-free by
// construction; requires at most 62 vertices.
SetLabeling construct_isoarithmetic(const Graph& g, std::uint64_t d,
                                    const std::vector<std::size_t>& sizes);

// Builds a set-indexer whose every edge joins 3-element sets with coprime,
// non-dividing differences: vertices are greedily colored and color c takes
// the c-th difference from `diffs` (pairwise coprime, each >= 2; when empty,
// the first primes). Throws ConstructionImpossibleError when the coloring
// needs more differences than supplied.
SetLabeling construct_second_kind(const Graph& g, std::vector<std::uint64_t> diffs = {});

}  // namespace iasi
