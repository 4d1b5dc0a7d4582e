#include <algorithm>
#include <initializer_list>
#include <string>

#include "doctest.h"
#include "iasi/audit.hpp"
#include "iasi/classify.hpp"
#include "iasi/compatibility.hpp"
#include "iasi/construct.hpp"
#include "iasi/errors.hpp"
#include "iasi/oracle.hpp"
#include "iasi/transport.hpp"

using namespace iasi;

namespace {

bool reports_equal(const AuditReport& a, const AuditReport& b) {
    if (a.theorem != b.theorem || a.checked != b.checked || a.verdict != b.verdict) {
        return false;
    }
    if (a.bounds.first_max != b.bounds.first_max || a.bounds.diff_max != b.bounds.diff_max ||
        a.bounds.len_min != b.bounds.len_min || a.bounds.len_max != b.bounds.len_max) {
        return false;
    }
    if (a.counterexamples.size() != b.counterexamples.size()) return false;
    for (std::size_t i = 0; i < a.counterexamples.size(); ++i) {
        const Counterexample& x = a.counterexamples[i];
        const Counterexample& y = b.counterexamples[i];
        if (x.p != y.p || x.q != y.q || x.expected != y.expected || x.observed != y.observed) {
            return false;
        }
    }
    if (a.readings.size() != b.readings.size()) return false;
    for (std::size_t i = 0; i < a.readings.size(); ++i) {
        const ReadingStats& x = a.readings[i];
        const ReadingStats& y = b.readings[i];
        if (x.reading != y.reading || x.checked != y.checked ||
            x.agreements != y.agreements) {
            return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("descriptor enumeration matches the counting examples") {
    CHECK(enumerate_ap_pairs(SearchBounds{0, 1, 3, 3}).size() == 1);
    auto single = enumerate_ap_pairs(SearchBounds{0, 1, 3, 3}).front();
    CHECK(single.first == APSetDescriptor(0, 1, 3));
    CHECK(single.second == APSetDescriptor(0, 1, 3));
    CHECK(enumerate_ap_pairs(SearchBounds{1, 1, 3, 3}).size() == 4);
    CHECK(enumerate_ap_pairs(SearchBounds{0, 2, 3, 4}).size() == 16);
    CHECK(enumerate_descriptors(SearchBounds{}).size() == 72);
    CHECK(enumerate_ap_pairs(SearchBounds{}).size() == 5184);
    CHECK(search_space_size(TheoremId::T2_3, SearchBounds{}) == 5184);
    CHECK(search_space_size(TheoremId::T2_7, SearchBounds{}) == 15);
}

TEST_CASE("search bounds are validated") {
    CHECK_THROWS_AS(enumerate_descriptors(SearchBounds{3, 6, 2, 5}), InvalidArgumentError);
    CHECK_THROWS_AS(enumerate_descriptors(SearchBounds{3, 6, 4, 3}), InvalidArgumentError);
    CHECK_THROWS_AS(enumerate_descriptors(SearchBounds{3, 0, 3, 5}), InvalidArgumentError);
    CHECK_THROWS_AS(audit(TheoremId::T2_3, SearchBounds{3, 6, 1, 5}), InvalidArgumentError);
}

TEST_CASE("theorem ids round-trip and reject unknowns") {
    for (TheoremId id : all_theorem_ids()) {
        CHECK(parse_theorem_id(to_string(id)) == id);
    }
    CHECK(all_theorem_ids().size() == 7);
    CHECK_THROWS_AS(parse_theorem_id("T9.9"), InvalidArgumentError);
}

TEST_CASE("first-kind audits are consistent within default bounds") {
    for (TheoremId id : {TheoremId::T2_3, TheoremId::C2_4, TheoremId::P2_6}) {
        auto report = audit(id);
        // 576 first-kind ordered pairs: diff pairs {1,4},{1,5},{1,6} with the
        // small-difference length below the ratio, both directions, 16 first
        // combinations each.
        CHECK(report.checked == 576);
        CHECK(report.verdict == "consistent");
        CHECK(report.counterexamples.empty());
    }
}

TEST_CASE("divisible-ratio sumsets are APs within default bounds") {
    auto report = audit(TheoremId::T1_3);
    // 864 equal-difference pairs plus 1728 arithmetic-multiple pairs.
    CHECK(report.checked == 2592);
    CHECK(report.verdict == "consistent");
    CHECK(report.counterexamples.empty());
}

TEST_CASE("T2.8 audit surfaces the hypothesis/conclusion mismatch candidate") {
    auto report = audit(TheoremId::T2_8);
    // 7 non-divisible difference pairs, both directions, 6 of 9 length
    // combinations leave a nonzero remainder, 16 first combinations.
    CHECK(report.checked == 1344);
    CHECK(report.verdict == "counterexamples-found");
    bool candidate_found = false;
    for (const Counterexample& ce : report.counterexamples) {
        if (ce.p == "(0,4,3)" && ce.q == "(0,6,5)") {
            candidate_found = true;
            CHECK(ce.expected.starts_with("not strong"));
            CHECK(ce.observed.starts_with("strong"));
            CHECK(ce.observed.find("15 of 15") != std::string::npos);
        }
    }
    CHECK(candidate_found);
}

TEST_CASE("T2.9 audit measures every documented reading") {
    auto report = audit(TheoremId::T2_9);
    CHECK(report.checked == 1344);
    REQUIRE(report.readings.size() == 3);
    CHECK(report.readings[0].reading == "statement");
    CHECK(report.readings[1].reading == "proof");
    CHECK(report.readings[2].reading == "index");
    bool any_agreements = false;
    for (const ReadingStats& stats : report.readings) {
        CHECK(stats.checked == 1344);
        CHECK(stats.agreements <= stats.checked);
        any_agreements = any_agreements || stats.agreements > 0;
    }
    CHECK(any_agreements);
    for (const Counterexample& ce : report.counterexamples) {
        CHECK(ce.expected.find("statement=") != std::string::npos);
        CHECK(ce.expected.find("proof=") != std::string::npos);
        CHECK(ce.expected.find("index=") != std::string::npos);
    }
}

TEST_CASE("oracles match the equal-difference closed forms") {
    for (const auto& [p, q] : enumerate_ap_pairs(SearchBounds{})) {
        if (p.difference != q.difference) continue;
        CHECK(oracle_sumset_cardinality(p, q) == p.length + q.length - 1);
        CHECK(oracle_maximal_class(p, q).size == std::min(p.length, q.length));
    }
}

TEST_CASE("setcore class sizes match the oracle on a small exhaustive box") {
    for (const auto& pair : enumerate_ap_pairs(SearchBounds{1, 4, 3, 4})) {
        CHECK(maximal_class_size(pair.first.expand(), pair.second.expand()) ==
              oracle_maximal_class(pair.first, pair.second).size);
    }
}

TEST_CASE("family audit of the first-kind construction is consistent") {
    auto report = audit(TheoremId::T2_7);
    CHECK(report.theorem == "T2.7");
    CHECK(report.checked == 15);
    CHECK(report.verdict == "consistent");
    CHECK(report.counterexamples.empty());
}

TEST_CASE("audit graph family members are small bipartite graphs") {
    auto family = audit_graph_family();
    REQUIRE(family.size() == 15);
    CHECK(family.front().name == "P2");
    CHECK(family.back().name == "K3,3");
    for (const NamedGraph& entry : family) {
        CHECK(entry.graph.vertex_count() <= 6);
        CHECK(entry.graph.edge_count() >= 1);
        CHECK(is_bipartite(entry.graph).has_value());
    }
}

TEST_CASE("serial and parallel audits produce identical reports") {
    for (TheoremId id : {TheoremId::T1_3, TheoremId::T2_3, TheoremId::C2_4, TheoremId::P2_6,
                         TheoremId::T2_8, TheoremId::T2_9}) {
        auto serial = audit(id, SearchBounds{}, ExecutionMode::serial);
        auto parallel = audit(id, SearchBounds{}, ExecutionMode::parallel);
        CHECK(reports_equal(serial, parallel));
    }
    auto first = audit(TheoremId::T2_8, SearchBounds{}, ExecutionMode::parallel);
    auto second = audit(TheoremId::T2_8, SearchBounds{}, ExecutionMode::parallel);
    CHECK(reports_equal(first, second));
}

TEST_CASE("transporting first-kind labelings yields non-AP derived labels") {
    auto count_non_ap = [](const SetLabeling& labeling) {
        std::size_t count = 0;
        for (const auto& entry : labeling.assignments()) {
            if (!recognize_ap(entry.second)) ++count;
        }
        return count;
    };
    for (const NamedGraph& entry : audit_graph_family()) {
        auto f = construct_first_kind(entry.graph, {3, 4, 1, 4});
        CHECK(count_non_ap(transport_labeling(entry.graph, f, TransformKind::line).labeling) >=
              1);
        CHECK(count_non_ap(transport_labeling(entry.graph, f, TransformKind::total).labeling) >=
              1);
        TransformArgs args;
        args.edge = entry.graph.edges().front();
        auto contracted = transport_labeling(entry.graph, f, TransformKind::contract, args);
        REQUIRE(contracted.new_vertex.has_value());
        CHECK_FALSE(recognize_ap(contracted.labeling.at(*contracted.new_vertex)).has_value());
        auto subdivided = transport_labeling(entry.graph, f, TransformKind::subdivide, args);
        REQUIRE(subdivided.new_vertex.has_value());
        CHECK_FALSE(recognize_ap(subdivided.labeling.at(*subdivided.new_vertex)).has_value());
    }
}
