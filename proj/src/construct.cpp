#include "iasi/construct.hpp"

#include <numeric>
#include <set>
#include <string>

#include "iasi/ap_set.hpp"
#include "iasi/errors.hpp"

namespace iasi {

namespace {

struct LabelPlan {
    std::string vertex;
    std::uint64_t start;
    std::uint64_t difference;
    std::size_t length;
    std::uint64_t stride;  // applied to the start until the label fits
};

// Assigns the planned labels in order. Each vertex keeps its planned
// difference and length; its start is shifted by whole strides until the
// label collides with no earlier vertex label and its edges to already
// labeled neighbours collide with no earlier edge label (nor each other).
SetLabeling assemble(const Graph& g, const std::vector<LabelPlan>& plans) {
    SetLabeling f;
    std::set<IntegerSet> vertex_labels;
    std::set<IntegerSet> edge_labels;
    const std::uint64_t span = g.vertex_count() + g.edge_count() + 2;
    const std::uint64_t attempts = 4 * span * span;

    for (const LabelPlan& plan : plans) {
        std::vector<std::string> labeled_neighbors;
        for (const std::string& nb : g.neighbors(plan.vertex)) {
            if (f.has(nb)) labeled_neighbors.push_back(nb);
        }

        bool placed = false;
        for (std::uint64_t shift = 0; shift < attempts && !placed; ++shift) {
            APSetDescriptor candidate(plan.start + shift * plan.stride, plan.difference,
                                      plan.length);
            IntegerSet label = candidate.expand();
            if (vertex_labels.count(label)) continue;

            std::set<IntegerSet> new_edge_labels;
            bool clash = false;
            for (const std::string& nb : labeled_neighbors) {
                IntegerSet edge_label = sumset(label, f.at(nb));
                if (edge_labels.count(edge_label) || !new_edge_labels.insert(edge_label).second) {
                    clash = true;
                    break;
                }
            }
            if (clash) continue;

            f.assign(plan.vertex, label);
            vertex_labels.insert(std::move(label));
            edge_labels.merge(new_edge_labels);
            placed = true;
        }
        if (!placed) {
            throw Error("internal: no collision-free label found for vertex '" + plan.vertex +
                        "'");
        }
    }

    Verdict verdict = verify_iasi(g, f);
    if (!verdict.ok) {
        throw Error("internal: constructed labeling failed verification: " + verdict.violation);
    }
    return f;
}

// Proper coloring, smallest free color in vertex order; colors are returned
// aligned with g.vertices().
std::pair<std::vector<std::size_t>, std::size_t> greedy_coloring(const Graph& g) {
    std::vector<std::size_t> colors(g.vertex_count(), 0);
    std::map<std::string, std::size_t> assigned;
    std::size_t color_count = 0;
    const auto& ids = g.vertices();
    for (std::size_t i = 0; i < ids.size(); ++i) {
        std::set<std::size_t> taken;
        for (const std::string& nb : g.neighbors(ids[i])) {
            auto it = assigned.find(nb);
            if (it != assigned.end()) taken.insert(it->second);
        }
        std::size_t c = 0;
        while (taken.count(c)) ++c;
        colors[i] = c;
        assigned[ids[i]] = c;
        color_count = std::max(color_count, c + 1);
    }
    return {colors, color_count};
}

std::vector<std::uint64_t> first_primes(std::size_t count) {
    std::vector<std::uint64_t> primes;
    for (std::uint64_t candidate = 2; primes.size() < count; ++candidate) {
        bool prime = true;
        for (std::uint64_t p : primes) {
            if (p * p > candidate) break;
            if (candidate % p == 0) {
                prime = false;
                break;
            }
        }
        if (prime) primes.push_back(candidate);
    }
    return primes;
}

std::uint64_t power(std::uint64_t base, std::size_t exp) {
    std::uint64_t result = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (result > IntegerSet::kMaxElement / base) {
            throw InvalidArgumentError("difference ratio overflows the element cap");
        }
        result *= base;
    }
    return result;
}

}  // namespace

SetLabeling construct_first_kind(const Graph& g, const ConstructionParams& params) {
    if (params.m < 3 || params.n < 3) {
        throw InvalidArgumentError("label sizes must be at least 3");
    }
    if (params.d == 0) {
        throw InvalidArgumentError("difference must be positive");
    }
    const std::uint64_t k = params.k.value_or(params.m + 1);
    if (k <= params.m) {
        throw InvalidArgumentError("ratio k must exceed the X-side label size");
    }
    g.validate(/*allow_isolated=*/true);

    const std::uint64_t stride = params.m * params.n * k * params.d;
    std::vector<LabelPlan> plans;
    if (auto bip = is_bipartite(g)) {
        for (std::size_t i = 0; i < bip->part_x.size(); ++i) {
            plans.push_back({bip->part_x[i], i * params.d, params.d, params.m, stride});
        }
        for (std::size_t j = 0; j < bip->part_y.size(); ++j) {
            plans.push_back({bip->part_y[j], j * params.d, k * params.d, params.n, stride});
        }
    } else if (params.m == params.n) {
        auto [colors, color_count] = greedy_coloring(g);
        (void)color_count;
        std::map<std::size_t, std::size_t> within_color;
        const auto& ids = g.vertices();
        for (std::size_t i = 0; i < ids.size(); ++i) {
            std::size_t index = within_color[colors[i]]++;
            plans.push_back(
                {ids[i], index * params.d, params.d * power(k, colors[i]), params.m, stride});
        }
    } else {
        throw ConstructionImpossibleError(
            "graph is not bipartite, so the two label sizes must be equal");
    }
    return assemble(g, plans);
}

SetLabeling construct_isoarithmetic(const Graph& g, std::uint64_t d,
                                    const std::vector<std::size_t>& sizes) {
    g.validate(/*allow_isolated=*/true);
    if (d == 0) {
        throw InvalidArgumentError("difference must be positive");
    }
    if (g.vertex_count() > 62) {
        throw InvalidArgumentError("isoarithmetic construction supports at most 62 vertices");
    }
    if (sizes.size() != g.vertex_count()) {
        throw InvalidArgumentError("need exactly one label size per vertex");
    }
    for (std::size_t size : sizes) {
        if (size < 3) throw InvalidArgumentError("label sizes must be at least 3");
    }

    // Starts 2^p - 1 make every vertex label minimum, and every edge label
    // minimum 2^p + 2^q - 2, unique; with a shared difference that is enough
    // for injectivity.
    SetLabeling f;
    const auto& ids = g.vertices();
    for (std::size_t p = 0; p < ids.size(); ++p) {
        f.assign(ids[p], APSetDescriptor((std::uint64_t{1} << p) - 1, d, sizes[p]).expand());
    }
    Verdict verdict = verify_iasi(g, f);
    if (!verdict.ok) {
        throw Error("internal: constructed labeling failed verification: " + verdict.violation);
    }
    return f;
}

SetLabeling construct_second_kind(const Graph& g, std::vector<std::uint64_t> diffs) {
    g.validate(/*allow_isolated=*/true);
    auto [colors, color_count] = greedy_coloring(g);
    if (diffs.empty()) {
        diffs = first_primes(color_count);
    } else {
        for (std::uint64_t d : diffs) {
            if (d < 2) throw InvalidArgumentError("differences must be at least 2");
        }
        for (std::size_t i = 0; i < diffs.size(); ++i) {
            for (std::size_t j = i + 1; j < diffs.size(); ++j) {
                if (std::gcd(diffs[i], diffs[j]) != 1) {
                    throw InvalidArgumentError("differences must be pairwise coprime");
                }
            }
        }
        if (diffs.size() < color_count) {
            throw ConstructionImpossibleError(
                "greedy coloring needs " + std::to_string(color_count) +
                " differences, got " + std::to_string(diffs.size()));
        }
    }

    std::vector<LabelPlan> plans;
    const auto& ids = g.vertices();
    for (std::size_t i = 0; i < ids.size(); ++i) {
        plans.push_back({ids[i], 0, diffs[colors[i]], 3, 1});
    }
    return assemble(g, plans);
}

}  // namespace iasi
