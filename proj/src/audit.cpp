#include "iasi/audit.hpp"

#include <algorithm>
#include <array>
#include <iterator>
#include <numeric>
#include <optional>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "iasi/classify.hpp"
#include "iasi/compatibility.hpp"
#include "iasi/construct.hpp"
#include "iasi/errors.hpp"
#include "iasi/labeling.hpp"
#include "iasi/oracle.hpp"

namespace iasi {

void validate(const SearchBounds& b) {
    if (b.len_min < 3) {
        throw InvalidArgumentError("len_min must be at least 3");
    }
    if (b.len_max < b.len_min) {
        throw InvalidArgumentError("len_max must not be below len_min");
    }
    if (b.diff_max < 1) {
        throw InvalidArgumentError("diff_max must be at least 1");
    }
}

std::string to_string(TheoremId id) {
    switch (id) {
        case TheoremId::T1_3: return "T1.3";
        case TheoremId::T2_3: return "T2.3";
        case TheoremId::C2_4: return "C2.4";
        case TheoremId::P2_6: return "P2.6";
        case TheoremId::T2_7: return "T2.7";
        case TheoremId::T2_8: return "T2.8";
        case TheoremId::T2_9: return "T2.9";
    }
    throw Error("unreachable theorem id");
}

std::vector<TheoremId> all_theorem_ids() {
    return {TheoremId::T1_3, TheoremId::T2_3, TheoremId::C2_4, TheoremId::P2_6,
            TheoremId::T2_7, TheoremId::T2_8, TheoremId::T2_9};
}

TheoremId parse_theorem_id(const std::string& token) {
    for (TheoremId id : all_theorem_ids()) {
        if (to_string(id) == token) return id;
    }
    throw InvalidArgumentError("unknown theorem id '" + token + "'");
}

std::vector<APSetDescriptor> enumerate_descriptors(const SearchBounds& b) {
    validate(b);
    std::vector<APSetDescriptor> out;
    for (std::uint64_t first = 0; first <= b.first_max; ++first) {
        for (std::uint64_t diff = 1; diff <= b.diff_max; ++diff) {
            for (std::size_t len = b.len_min; len <= b.len_max; ++len) {
                out.emplace_back(first, diff, len);
            }
        }
    }
    return out;
}

std::vector<std::pair<APSetDescriptor, APSetDescriptor>> enumerate_ap_pairs(
    const SearchBounds& b) {
    auto descriptors = enumerate_descriptors(b);
    std::vector<std::pair<APSetDescriptor, APSetDescriptor>> pairs;
    pairs.reserve(descriptors.size() * descriptors.size());
    for (const auto& p : descriptors) {
        for (const auto& q : descriptors) {
            pairs.emplace_back(p, q);
        }
    }
    return pairs;
}

std::uint64_t search_space_size(TheoremId id, const SearchBounds& b) {
    validate(b);
    if (id == TheoremId::T2_7) {
        return audit_graph_family().size();
    }
    std::uint64_t d_count = (b.first_max + 1) * b.diff_max * (b.len_max - b.len_min + 1);
    return d_count * d_count;
}

namespace {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

bool is_second_kind(EdgeRelation relation) {
    return relation == EdgeRelation::second_kind_coprime ||
           relation == EdgeRelation::second_kind_common_factor;
}

constexpr std::array<const char*, 3> kReadingNames = {"statement", "proof", "index"};

struct PairEval {
    bool in_scope = false;
    std::array<bool, 3> reading_agrees{};
    std::optional<Counterexample> ce;
};

void require_oracle_sumset(const APSetDescriptor& p, const APSetDescriptor& q,
                           std::uint64_t setcore_size) {
    if (oracle_sumset_cardinality(p, q) != setcore_size) {
        throw std::logic_error("sumset size disagrees with the oracle for " + p.to_string() +
                               ", " + q.to_string());
    }
}

void require_oracle_max_class(const APSetDescriptor& p, const APSetDescriptor& q,
                              std::size_t setcore_size) {
    if (oracle_maximal_class(p, q).size != setcore_size) {
        throw std::logic_error("maximal class size disagrees with the oracle for " +
                               p.to_string() + ", " + q.to_string());
    }
}

Counterexample make_ce(const APSetDescriptor& p, const APSetDescriptor& q, std::string expected,
                       std::string observed) {
    return Counterexample{p.to_string(), q.to_string(), std::move(expected),
                          std::move(observed)};
}

// Divisible differences with ratio at most the small set's length: the
// sumset must be an AP with the small difference.
PairEval evaluate_t1_3(const APSetDescriptor& p, const APSetDescriptor& q) {
    PairEval eval;
    EdgeKind kind = edge_kind(p, q);
    if (kind.relation != EdgeRelation::equal_difference &&
        kind.relation != EdgeRelation::arithmetic_multiple) {
        return eval;
    }
    eval.in_scope = true;
    IntegerSet sum = sumset(p.expand(), q.expand());
    auto ap = recognize_ap(sum);
    if (!ap || ap->difference != kind.d_small) {
        require_oracle_sumset(p, q, sum.size());
        eval.ce = make_ce(p, q,
                          "AP sumset with difference " + std::to_string(kind.d_small),
                          ap ? "AP with difference " + std::to_string(ap->difference)
                             : "not an AP (" + std::to_string(sum.size()) + " elements)");
    }
    return eval;
}

// First-kind pairs must be strong: |P+Q| = |P|*|Q|.
PairEval evaluate_t2_3(const APSetDescriptor& p, const APSetDescriptor& q) {
    PairEval eval;
    if (edge_kind(p, q).relation != EdgeRelation::first_kind) return eval;
    eval.in_scope = true;
    std::uint64_t observed = sumset(p.expand(), q.expand()).size();
    std::uint64_t expected = p.length * q.length;
    if (observed != expected) {
        require_oracle_sumset(p, q, observed);
        eval.ce = make_ce(p, q, std::to_string(expected) + " distinct sums (strong)",
                          std::to_string(observed) + " distinct sums");
    }
    return eval;
}

// First-kind pairs must have only trivial compatibility classes.
PairEval evaluate_c2_4(const APSetDescriptor& p, const APSetDescriptor& q) {
    PairEval eval;
    if (edge_kind(p, q).relation != EdgeRelation::first_kind) return eval;
    eval.in_scope = true;
    std::size_t observed = maximal_class_size(p.expand(), q.expand());
    if (observed != 1) {
        require_oracle_max_class(p, q, observed);
        eval.ce = make_ce(p, q, "all compatibility classes trivial",
                          "maximal class size " + std::to_string(observed));
    }
    return eval;
}

// First-kind pairs never have a prime set-indexing number.
PairEval evaluate_p2_6(const APSetDescriptor& p, const APSetDescriptor& q) {
    PairEval eval;
    if (edge_kind(p, q).relation != EdgeRelation::first_kind) return eval;
    eval.in_scope = true;
    std::uint64_t index = sumset(p.expand(), q.expand()).size();
    if (is_prime(index)) {
        require_oracle_sumset(p, q, index);
        eval.ce = make_ce(p, q, "composite set-indexing number",
                          "prime set-indexing number " + std::to_string(index));
    }
    return eval;
}

// Second-kind pairs with |Q| = q|P| + r, r != 0: strong iff q > |P| or
// gcd of the differences is 1. Evaluated as written; mismatches are
// evidence, not verdicts about which side errs.
PairEval evaluate_t2_8(const APSetDescriptor& p, const APSetDescriptor& q) {
    PairEval eval;
    if (!is_second_kind(edge_kind(p, q).relation)) return eval;
    const std::uint64_t r = q.length % p.length;
    if (r == 0) return eval;
    eval.in_scope = true;
    const std::uint64_t quotient = q.length / p.length;
    const std::uint64_t g = std::gcd(p.difference, q.difference);
    const bool expected_strong = quotient > p.length || g == 1;
    IntegerSet sum = sumset(p.expand(), q.expand());
    const bool observed_strong = sum.size() == p.length * q.length;
    if (expected_strong != observed_strong) {
        require_oracle_sumset(p, q, sum.size());
        std::string hypothesis = "(q=" + std::to_string(quotient) + ", r=" + std::to_string(r) +
                                 ", gcd=" + std::to_string(g) + ")";
        std::string outcome = "(" + std::to_string(sum.size()) + " of " +
                              std::to_string(p.length * q.length) + " sums distinct)";
        eval.ce = make_ce(p, q, (expected_strong ? "strong " : "not strong ") + hypothesis,
                          (observed_strong ? "strong " : "not strong ") + outcome);
    }
    return eval;
}

// Same scope; the maximal-class-size formula floor(|Q|/q1) under each
// documented reading of q1. A pair is a counterexample only when no
// reading predicts the observed size.
PairEval evaluate_t2_9(const APSetDescriptor& p, const APSetDescriptor& q) {
    PairEval eval;
    if (!is_second_kind(edge_kind(p, q).relation)) return eval;
    const std::uint64_t r = q.length % p.length;
    if (r == 0) return eval;
    eval.in_scope = true;

    const std::uint64_t n = q.length;
    const std::uint64_t g = std::gcd(p.difference, q.difference);
    const std::uint64_t dj_reduced = q.difference / g;
    // Least positive q1 with q1*x divisible by y is y / gcd(x, y).
    const std::array<std::uint64_t, 3> q1 = {
        r / std::gcd(n, r),                                // q1*|Q| = q2*r, as stated
        r / std::gcd(p.difference, r),                     // q1*d_i = r1*r, as proved
        dj_reduced / std::gcd(p.difference, dj_reduced),   // q1*d_i = r1*d_j/gcd
    };

    const std::size_t observed = maximal_class_size(p.expand(), q.expand());
    bool any_agrees = false;
    std::array<std::uint64_t, 3> predicted{};
    for (std::size_t i = 0; i < q1.size(); ++i) {
        predicted[i] = n / q1[i];
        eval.reading_agrees[i] = predicted[i] == observed;
        any_agrees = any_agrees || eval.reading_agrees[i];
    }
    if (!any_agrees) {
        require_oracle_max_class(p, q, observed);
        std::string expected;
        for (std::size_t i = 0; i < q1.size(); ++i) {
            if (i) expected += ", ";
            expected += std::string(kReadingNames[i]) + "=" + std::to_string(predicted[i]);
        }
        eval.ce = make_ce(p, q, "maximal class size " + expected,
                          "maximal class size " + std::to_string(observed));
    }
    return eval;
}

PairEval evaluate_pair(TheoremId id, const APSetDescriptor& p, const APSetDescriptor& q) {
    switch (id) {
        case TheoremId::T1_3: return evaluate_t1_3(p, q);
        case TheoremId::T2_3: return evaluate_t2_3(p, q);
        case TheoremId::C2_4: return evaluate_c2_4(p, q);
        case TheoremId::P2_6: return evaluate_p2_6(p, q);
        case TheoremId::T2_8: return evaluate_t2_8(p, q);
        case TheoremId::T2_9: return evaluate_t2_9(p, q);
        case TheoremId::T2_7: break;
    }
    throw Error("theorem has no pair evaluator");
}

// T2.7 is audited constructively: build the first-kind labeling on each
// family graph and check uniformity plus the bipartition-by-cardinality
// argument (size-m and size-n labels must split V with no inner edges).
AuditReport audit_family_construction(const SearchBounds& bounds) {
    AuditReport report;
    report.theorem = to_string(TheoremId::T2_7);
    report.bounds = bounds;
    const ConstructionParams params{3, 4, 1, 4};
    for (const NamedGraph& entry : audit_graph_family()) {
        ++report.checked;
        SetLabeling f = construct_first_kind(entry.graph, params);
        ClassificationReport cls = classify(entry.graph, f);
        std::vector<std::string> problems;
        if (!cls.semi_arithmetic_first_kind) {
            problems.push_back("not first-kind semi-arithmetic");
        }
        if (!(cls.edge_uniform_k == params.m * params.n)) {
            problems.push_back("edge set-indexing numbers not uniformly " +
                               std::to_string(params.m * params.n));
        }
        for (const std::string& vertex : entry.graph.vertices()) {
            std::size_t size = f.at(vertex).size();
            if (size != params.m && size != params.n) {
                problems.push_back("vertex '" + vertex + "' has label size " +
                                   std::to_string(size));
            }
        }
        for (const auto& [u, v] : entry.graph.edges()) {
            if (f.at(u).size() == f.at(v).size()) {
                problems.push_back("edge '" + u + " " + v +
                                   "' joins equal label sizes, breaking the bipartition");
            }
        }
        if (!problems.empty()) {
            std::string observed;
            for (std::size_t i = 0; i < problems.size(); ++i) {
                if (i) observed += "; ";
                observed += problems[i];
            }
            report.counterexamples.push_back(
                Counterexample{entry.name, "(m=3,n=4,d=1,k=4)",
                               "first-kind semi-arithmetic, uniformly 12-indexed, "
                               "label sizes bipartition the graph",
                               observed});
        }
    }
    report.verdict =
        report.counterexamples.empty() ? "consistent" : "counterexamples-found";
    return report;
}

}  // namespace

AuditReport audit(TheoremId id, const SearchBounds& bounds, ExecutionMode mode) {
    validate(bounds);
    if (id == TheoremId::T2_7) {
        return audit_family_construction(bounds);
    }

    AuditReport report;
    report.theorem = to_string(id);
    report.bounds = bounds;

    const std::vector<APSetDescriptor> descriptors = enumerate_descriptors(bounds);
    const std::uint64_t d_count = descriptors.size();
    const std::int64_t total = static_cast<std::int64_t>(d_count * d_count);

    std::vector<std::pair<std::uint64_t, Counterexample>> found;
    std::uint64_t checked = 0;
    std::array<std::uint64_t, 3> agreements{};

#ifdef _OPENMP
    if (mode == ExecutionMode::parallel) {
        const int thread_count = omp_get_max_threads();
        std::vector<std::vector<std::pair<std::uint64_t, Counterexample>>> found_by(
            thread_count);
        std::vector<std::uint64_t> checked_by(thread_count, 0);
        std::vector<std::array<std::uint64_t, 3>> agreements_by(
            thread_count, std::array<std::uint64_t, 3>{});
#pragma omp parallel for schedule(static)
        for (std::int64_t index = 0; index < total; ++index) {
            const int t = omp_get_thread_num();
            PairEval eval = evaluate_pair(id, descriptors[index / d_count],
                                          descriptors[index % d_count]);
            if (!eval.in_scope) continue;
            ++checked_by[t];
            for (std::size_t i = 0; i < agreements_by[t].size(); ++i) {
                agreements_by[t][i] += eval.reading_agrees[i] ? 1 : 0;
            }
            if (eval.ce) found_by[t].emplace_back(index, std::move(*eval.ce));
        }
        for (int t = 0; t < thread_count; ++t) {
            checked += checked_by[t];
            for (std::size_t i = 0; i < agreements.size(); ++i) {
                agreements[i] += agreements_by[t][i];
            }
            std::move(found_by[t].begin(), found_by[t].end(), std::back_inserter(found));
        }
        std::sort(found.begin(), found.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
    } else
#else
    (void)mode;
#endif
    {
        for (std::int64_t index = 0; index < total; ++index) {
            PairEval eval = evaluate_pair(id, descriptors[index / d_count],
                                          descriptors[index % d_count]);
            if (!eval.in_scope) continue;
            ++checked;
            for (std::size_t i = 0; i < agreements.size(); ++i) {
                agreements[i] += eval.reading_agrees[i] ? 1 : 0;
            }
            if (eval.ce) found.emplace_back(index, std::move(*eval.ce));
        }
    }

    report.checked = checked;
    report.counterexamples.reserve(found.size());
    for (auto& [index, ce] : found) {
        (void)index;
        report.counterexamples.push_back(std::move(ce));
    }
    if (id == TheoremId::T2_9) {
        for (std::size_t i = 0; i < kReadingNames.size(); ++i) {
            report.readings.push_back(ReadingStats{kReadingNames[i], checked, agreements[i]});
        }
    }
    report.verdict =
        report.counterexamples.empty() ? "consistent" : "counterexamples-found";
    return report;
}

std::vector<NamedGraph> audit_graph_family() {
    auto path = [](int n) {
        Graph g;
        for (int i = 0; i + 1 < n; ++i) {
            g.add_edge("v" + std::to_string(i), "v" + std::to_string(i + 1));
        }
        return g;
    };
    auto cycle = [&path](int n) {
        Graph g = path(n);
        g.add_edge("v" + std::to_string(n - 1), "v0");
        return g;
    };
    auto star = [](int leaves) {
        Graph g;
        for (int i = 0; i < leaves; ++i) g.add_edge("c", "l" + std::to_string(i));
        return g;
    };
    auto complete_bipartite = [](int a, int b) {
        Graph g;
        for (int i = 0; i < a; ++i) {
            for (int j = 0; j < b; ++j) {
                g.add_edge("x" + std::to_string(i), "y" + std::to_string(j));
            }
        }
        return g;
    };

    std::vector<NamedGraph> family;
    for (int n = 2; n <= 6; ++n) {
        family.push_back({"P" + std::to_string(n), path(n)});
    }
    family.push_back({"C4", cycle(4)});
    family.push_back({"C6", cycle(6)});
    for (int leaves = 2; leaves <= 5; ++leaves) {
        family.push_back({"K1," + std::to_string(leaves), star(leaves)});
    }
    family.push_back({"K2,2", complete_bipartite(2, 2)});
    family.push_back({"K2,3", complete_bipartite(2, 3)});
    family.push_back({"K2,4", complete_bipartite(2, 4)});
    family.push_back({"K3,3", complete_bipartite(3, 3)});
    return family;
}

}  // namespace iasi
