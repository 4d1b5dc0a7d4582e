// Acceptance gate: runs the ten release criteria and prints one PASS/FAIL
// line per criterion. Exits nonzero when any criterion fails.
#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "iasi/ap_set.hpp"
#include "iasi/audit.hpp"
#include "iasi/classify.hpp"
#include "iasi/compatibility.hpp"
#include "iasi/construct.hpp"
#include "iasi/errors.hpp"
#include "iasi/graph.hpp"
#include "iasi/json_io.hpp"
#include "iasi/labeling.hpp"
#include "iasi/oracle.hpp"
#include "iasi/transforms.hpp"
#include "iasi/transport.hpp"
#include "json.hpp"

using namespace iasi;

namespace {

using ordered_json = nlohmann::ordered_json;

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    std::string command = std::string(IASI_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) return {};
    std::string output;
    std::array<char, 4096> buffer{};
    std::size_t n = 0;
    while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        output.append(buffer.data(), n);
    }
    int status = pclose(pipe);
    RunResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.output = output;
    return result;
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = "/tmp/iasi_acceptance_" + name;
    std::ofstream out(path);
    out << content;
    return path;
}

Graph family_member(const std::string& name) {
    for (const NamedGraph& entry : audit_graph_family()) {
        if (entry.name == name) return entry.graph;
    }
    throw std::logic_error("unknown family member '" + name + "'");
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

// "(first,difference,length)" back into a descriptor.
APSetDescriptor parse_descriptor(const std::string& text) {
    if (text.size() < 2 || text.front() != '(' || text.back() != ')') {
        throw std::logic_error("malformed descriptor '" + text + "'");
    }
    std::stringstream stream(text.substr(1, text.size() - 2));
    std::string item;
    std::vector<std::uint64_t> values;
    while (std::getline(stream, item, ',')) values.push_back(std::stoull(item));
    if (values.size() != 3) throw std::logic_error("malformed descriptor '" + text + "'");
    return APSetDescriptor(values[0], values[1], static_cast<std::size_t>(values[2]));
}

Outcome criterion_sumset_oracle() {
    auto pairs = enumerate_ap_pairs(SearchBounds{});
    auto start = std::chrono::steady_clock::now();
    std::size_t mismatches = 0;
    for (const auto& [p, q] : pairs) {
        if (ap_sumset_cardinality(p, q) != oracle_sumset_cardinality(p, q)) ++mismatches;
    }
    double ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
    std::ostringstream detail;
    detail << pairs.size() << " pairs, " << mismatches << " mismatches, " << std::fixed
           << std::setprecision(1) << ms << " ms";
    return {mismatches == 0 && ms < 1000.0, detail.str()};
}

Outcome criterion_class_bound() {
    std::size_t bound_violations = 0;
    std::size_t equality_misses = 0;
    std::size_t equal_difference_pairs = 0;
    for (const auto& [p, q] : enumerate_ap_pairs(SearchBounds{})) {
        IntegerSet a = p.expand();
        IntegerSet b = q.expand();
        std::size_t cap = std::min(a.size(), b.size());
        std::size_t observed = maximal_class_size(a, b);
        if (observed > cap) ++bound_violations;
        if (p.difference == q.difference) {
            ++equal_difference_pairs;
            if (observed != cap) ++equality_misses;
        }
    }
    std::mt19937 rng(20260817u);
    std::uniform_int_distribution<int> size_dist(1, 5);
    std::uniform_int_distribution<std::uint64_t> element_dist(0, 12);
    auto random_set = [&rng, &size_dist, &element_dist]() {
        std::set<std::uint64_t> elements;
        int target = size_dist(rng);
        while (static_cast<int>(elements.size()) < target) {
            elements.insert(element_dist(rng));
        }
        return IntegerSet(std::vector<std::uint64_t>(elements.begin(), elements.end()));
    };
    constexpr int kSamples = 100000;
    for (int i = 0; i < kSamples; ++i) {
        IntegerSet a = random_set();
        IntegerSet b = random_set();
        if (maximal_class_size(a, b) > std::min(a.size(), b.size())) ++bound_violations;
    }
    std::ostringstream detail;
    detail << kSamples << " random pairs, " << bound_violations << " bound violations, "
           << equality_misses << " equality misses on " << equal_difference_pairs
           << " equal-difference pairs";
    return {bound_violations == 0 && equality_misses == 0, detail.str()};
}

Outcome criterion_t2_3() {
    AuditReport report = audit(TheoremId::T2_3);
    std::ostringstream detail;
    detail << report.checked << " first-kind pairs, " << report.counterexamples.size()
           << " counterexamples";
    return {report.verdict == "consistent" && report.counterexamples.empty(),
            detail.str()};
}

Outcome criterion_c2_4() {
    std::size_t first_kind = 0;
    std::size_t violations = 0;
    for (const auto& [p, q] : enumerate_ap_pairs(SearchBounds{})) {
        if (edge_kind(p, q).relation != EdgeRelation::first_kind) continue;
        ++first_kind;
        if (oracle_maximal_class(p, q).size != 1) ++violations;
    }
    std::ostringstream detail;
    detail << first_kind << " first-kind pairs, " << violations
           << " non-trivial maximal classes";
    return {first_kind > 0 && violations == 0, detail.str()};
}

Outcome criterion_p2_6() {
    std::size_t first_kind = 0;
    std::size_t primes = 0;
    for (const auto& [p, q] : enumerate_ap_pairs(SearchBounds{})) {
        if (edge_kind(p, q).relation != EdgeRelation::first_kind) continue;
        ++first_kind;
        if (is_prime(sumset(p.expand(), q.expand()).size())) ++primes;
    }
    std::ostringstream detail;
    detail << first_kind << " first-kind pairs, " << primes << " prime indexing numbers";
    return {first_kind > 0 && primes == 0, detail.str()};
}

Outcome criterion_first_kind_construction() {
    ConstructionParams params{3, 4, 1, 4};
    std::size_t failures = 0;
    std::ostringstream detail;
    const std::array<std::string, 4> targets = {"K2,3", "P4", "C6", "K3,3"};
    for (const std::string& name : targets) {
        Graph g = family_member(name);
        SetLabeling f = construct_first_kind(g, params);
        ClassificationReport report = classify(g, f);
        bool ok = report.semi_arithmetic_first_kind && report.edge_uniform_k &&
                  *report.edge_uniform_k == 12;
        if (!ok) {
            ++failures;
            detail << name << " not uniform-12 first-kind; ";
        }
    }
    std::string triangle = write_temp("triangle.edges", "a b\nb c\na c\n");
    int exit_code =
        run_cli("construct --graph " + triangle + " --kind first --m 3 --n 4").exit_code;
    if (exit_code != 3) {
        ++failures;
        detail << "triangle exit code " << exit_code << " != 3; ";
    }
    if (failures == 0) {
        detail << "4 bipartite targets uniform-12, triangle exits 3";
    }
    return {failures == 0, detail.str()};
}

Outcome criterion_t1_3() {
    std::size_t multiples = 0;
    std::size_t violations = 0;
    for (const auto& [p, q] : enumerate_ap_pairs(SearchBounds{})) {
        EdgeKind kind = edge_kind(p, q);
        if (kind.relation != EdgeRelation::arithmetic_multiple) continue;
        ++multiples;
        auto descriptor = recognize_ap(sumset(p.expand(), q.expand()));
        if (!descriptor || descriptor->difference != kind.d_small) ++violations;
    }
    std::ostringstream detail;
    detail << multiples << " arithmetic-multiple pairs, " << violations << " violations";
    return {multiples > 0 && violations == 0, detail.str()};
}

Outcome criterion_t2_8() {
    AuditReport report = audit(TheoremId::T2_8);
    bool well_formed =
        report.theorem == "T2.8" && report.checked == 1344 &&
        (report.verdict == "consistent" || report.verdict == "counterexamples-found") &&
        (report.counterexamples.empty() ^ (report.verdict == "counterexamples-found"));
    std::size_t reverify_failures = 0;
    bool candidate_found = false;
    for (const Counterexample& ce : report.counterexamples) {
        APSetDescriptor p = parse_descriptor(ce.p);
        APSetDescriptor q = parse_descriptor(ce.q);
        bool oracle_strong = oracle_sumset_cardinality(p, q) ==
                             static_cast<std::uint64_t>(p.length) * q.length;
        bool claimed_strong = ce.observed.rfind("strong", 0) == 0;
        if (oracle_strong != claimed_strong) ++reverify_failures;
        if (ce.p == "(0,4,3)" && ce.q == "(0,6,5)" && claimed_strong) {
            candidate_found = true;
        }
    }
    std::ostringstream detail;
    detail << report.counterexamples.size() << " counterexamples, " << reverify_failures
           << " oracle disagreements, candidate (0,4,3)/(0,6,5) "
           << (candidate_found ? "present" : "missing");
    return {well_formed && reverify_failures == 0 && candidate_found, detail.str()};
}

Outcome criterion_transform_propositions() {
    Graph g = family_member("K2,3");
    SetLabeling f = construct_first_kind(g, ConstructionParams{3, 4, 1, 4});
    auto non_ap_count = [](const SetLabeling& labeling) {
        std::size_t count = 0;
        for (const auto& entry : labeling.assignments()) {
            if (!recognize_ap(entry.second)) ++count;
        }
        return count;
    };
    std::size_t failures = 0;
    std::ostringstream detail;
    if (non_ap_count(transport_labeling(g, f, TransformKind::line).labeling) == 0) {
        ++failures;
        detail << "line keeps all labels AP; ";
    }
    if (non_ap_count(transport_labeling(g, f, TransformKind::total).labeling) == 0) {
        ++failures;
        detail << "total keeps all labels AP; ";
    }
    for (const auto& [u, v] : g.edges()) {
        TransformArgs args;
        args.edge = std::make_pair(u, v);
        auto contracted = transport_labeling(g, f, TransformKind::contract, args);
        if (!contracted.new_vertex ||
            recognize_ap(contracted.labeling.at(*contracted.new_vertex))) {
            ++failures;
            detail << "contract " << u << "," << v << " stays AP; ";
        }
        auto subdivided = transport_labeling(g, f, TransformKind::subdivide, args);
        if (!subdivided.new_vertex ||
            recognize_ap(subdivided.labeling.at(*subdivided.new_vertex))) {
            ++failures;
            detail << "subdivide " << u << "," << v << " stays AP; ";
        }
    }
    if (failures == 0) {
        detail << "line, total, and every contract/subdivide yield a non-AP label";
    }
    return {failures == 0, detail.str()};
}

Outcome criterion_round_trips() {
    std::size_t failures = 0;
    std::ostringstream detail;
    for (const NamedGraph& entry : audit_graph_family()) {
        const Graph& g = entry.graph;
        const auto [u, v] = g.edges().front();
        VertexAddition sub = subdivide(g, u, v);
        VertexMerge merged = contract(sub.graph, u, sub.new_vertex);
        Graph contracted_back = merged.graph.relabeled({{merged.merged_vertex, u}});
        if (!(contracted_back == g)) {
            ++failures;
            detail << entry.name << " subdivide-contract differs; ";
        }
        Graph reduced = topological_reduction(sub.graph, sub.new_vertex);
        if (!(reduced == g)) {
            ++failures;
            detail << entry.name << " subdivide-reduce differs; ";
        }
    }
    std::string edges = write_temp("k23.edges", "x0 y0\nx0 y1\nx0 y2\nx1 y0\nx1 y1\nx1 y2\n");
    RunResult constructed =
        run_cli("construct --graph " + edges + " --kind first --m 3 --n 4 --k 4");
    std::string labels = write_temp("k23.json", constructed.output);
    const std::string invocations[] = {
        "classify --graph " + edges + " --labels " + labels + " --json",
        "transform --graph " + edges + " --labels " + labels +
            " --op subdivide --edge x0,y0 --json",
        "audit --theorem T2.9 --json",
        "sumset --a \"{0,1,2}\" --b \"{0,4,8}\" --json",
    };
    for (const std::string& args : invocations) {
        RunResult result = run_cli(args);
        bool lossless = false;
        if (result.exit_code == 0 || result.exit_code == 4) {
            try {
                lossless =
                    ordered_json::parse(result.output).dump(2) + "\n" == result.output;
            } catch (const ordered_json::parse_error&) {
                lossless = false;
            }
        }
        if (!lossless) {
            ++failures;
            detail << "lossy JSON from '" << args.substr(0, args.find(' ')) << "'; ";
        }
    }
    try {
        SetLabeling f = parse_labeling_json(constructed.output);
        if (labeling_to_json(f) + "\n" != constructed.output) {
            ++failures;
            detail << "labeling re-serialization differs; ";
        }
    } catch (const Error&) {
        ++failures;
        detail << "constructed labeling does not re-parse; ";
    }
    if (failures == 0) {
        detail << "15 graph identities and 5 JSON round-trips hold";
    }
    return {failures == 0, detail.str()};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"sumset cardinality formula matches the brute-force oracle",
         criterion_sumset_oracle},
        {"maximal compatibility class obeys the min-cardinality bound",
         criterion_class_bound},
        {"T2.3 audit: every first-kind pair is strong", criterion_t2_3},
        {"C2.4 oracle: first-kind maximal classes are trivial", criterion_c2_4},
        {"P2.6: first-kind indexing numbers are composite", criterion_p2_6},
        {"first-kind construction: uniform 12 on bipartite targets, impossible on the "
         "triangle",
         criterion_first_kind_construction},
        {"T1.3: arithmetic-multiple sumsets are APs with the small difference",
         criterion_t1_3},
        {"T2.8 audit is well-formed, oracle-verified, and surfaces the candidate",
         criterion_t2_8},
        {"all four transforms break the AP property of some derived label",
         criterion_transform_propositions},
        {"transform identities and JSON round-trips are lossless", criterion_round_trips},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome outcome;
        try {
            outcome = criteria[i].second();
        } catch (const std::exception& e) {
            outcome.pass = false;
            outcome.detail = std::string("exception: ") + e.what();
        }
        std::cout << (outcome.pass ? "PASS" : "FAIL") << "  " << std::setw(2) << (i + 1)
                  << "  " << criteria[i].first;
        if (!outcome.detail.empty()) std::cout << " (" << outcome.detail << ")";
        std::cout << "\n";
        if (!outcome.pass) ++failures;
    }
    std::cout << (criteria.size() - failures) << "/" << criteria.size()
              << " acceptance criteria passed\n";
    return failures == 0 ? 0 : 1;
}
