#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "iasi/audit.hpp"
#include "iasi/classify.hpp"
#include "iasi/compatibility.hpp"
#include "iasi/construct.hpp"
#include "iasi/errors.hpp"
#include "iasi/graph.hpp"
#include "iasi/json_io.hpp"
#include "iasi/labeling.hpp"
#include "iasi/transport.hpp"
#include "json.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;
constexpr int kExitImpossible = 3;
constexpr int kExitCounterexamples = 4;
constexpr int kExitIo = 5;

// File-level problems: missing files and parse failures, both exit 5.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad flag values detected after CLI11 parsing, exit 1.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string position(const std::string& path, const iasi::ParseError& e) {
    return path + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) +
           ": " + e.what();
}

iasi::Graph load_graph(const std::string& path) {
    const std::string text = read_file(path);
    try {
        return iasi::Graph::parse_edge_list_text(text);
    } catch (const iasi::ParseError& e) {
        throw IoError(position(path, e));
    }
}

iasi::SetLabeling load_labeling(const std::string& path) {
    const std::string text = read_file(path);
    try {
        return iasi::parse_labeling_json(text);
    } catch (const iasi::ParseError& e) {
        throw IoError(position(path, e));
    }
}

std::vector<std::uint64_t> split_u64(const std::string& text, const std::string& flag) {
    std::vector<std::uint64_t> values;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        std::size_t used = 0;
        unsigned long long value = 0;
        try {
            value = std::stoull(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size()) {
            throw UsageError(flag + ": '" + item + "' is not a non-negative integer");
        }
        values.push_back(value);
    }
    if (values.empty()) {
        throw UsageError(flag + ": expected a comma-separated integer list");
    }
    return values;
}

std::string bool_text(bool value) { return value ? "true" : "false"; }

template <typename T>
std::string optional_text(const std::optional<T>& value) {
    return value ? std::to_string(*value) : "-";
}

void print_row(std::ostream& out, const std::vector<std::string>& cells,
               const std::vector<std::size_t>& widths) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i + 1 == cells.size()) {
            out << cells[i];
        } else {
            out << std::left << std::setw(static_cast<int>(widths[i] + 2)) << cells[i];
        }
    }
    out << "\n";
}

void print_table(std::ostream& out, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> widths(header.size());
    for (std::size_t i = 0; i < header.size(); ++i) widths[i] = header[i].size();
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            widths[i] = std::max(widths[i], row[i].size());
        }
    }
    print_row(out, header, widths);
    for (const auto& row : rows) print_row(out, row, widths);
}

void print_classification_text(std::ostream& out, const iasi::ClassificationReport& r) {
    std::vector<std::vector<std::string>> rows = {
        {"vertex_arithmetic", bool_text(r.vertex_arithmetic)},
        {"edge_arithmetic", bool_text(r.edge_arithmetic)},
        {"arithmetic", bool_text(r.arithmetic)},
        {"isoarithmetic", bool_text(r.isoarithmetic)},
        {"biarithmetic", bool_text(r.biarithmetic)},
        {"semi_arithmetic_first_kind", bool_text(r.semi_arithmetic_first_kind)},
        {"semi_arithmetic_second_kind", bool_text(r.semi_arithmetic_second_kind)},
        {"strong", bool_text(r.strong)},
        {"edge_uniform_k", optional_text(r.edge_uniform_k)},
        {"vertex_uniform_l", optional_text(r.vertex_uniform_l)},
    };
    print_table(out, {"property", "value"}, rows);
    if (r.per_edge.empty()) return;
    out << "\n";
    std::vector<std::vector<std::string>> edge_rows;
    for (const auto& [edge, detail] : r.per_edge) {
        std::string relation = "-";
        std::string k = "-";
        std::string d_small = "-";
        std::string d_large = "-";
        if (detail.kind) {
            relation = to_string(detail.kind->relation);
            k = optional_text(detail.kind->k);
            d_small = std::to_string(detail.kind->d_small);
            d_large = std::to_string(detail.kind->d_large);
        }
        edge_rows.push_back({edge, relation, k, d_small, d_large,
                             std::to_string(detail.set_indexing_number),
                             bool_text(detail.strong), bool_text(detail.edge_label_is_ap)});
    }
    print_table(out,
                {"edge", "relation", "k", "d_small", "d_large", "indexing", "strong",
                 "label_ap"},
                edge_rows);
}

void print_audit_text(std::ostream& out, const iasi::AuditReport& r) {
    std::ostringstream bounds;
    bounds << "first<=" << r.bounds.first_max << " diff<=" << r.bounds.diff_max << " len "
           << r.bounds.len_min << ".." << r.bounds.len_max;
    print_table(out, {"field", "value"},
                {{"theorem", r.theorem},
                 {"bounds", bounds.str()},
                 {"checked", std::to_string(r.checked)},
                 {"verdict", r.verdict},
                 {"counterexamples", std::to_string(r.counterexamples.size())}});
    if (!r.readings.empty()) {
        out << "\n";
        std::vector<std::vector<std::string>> rows;
        for (const auto& stats : r.readings) {
            std::ostringstream rate;
            rate << std::fixed << std::setprecision(4)
                 << (stats.checked == 0 ? 0.0
                                        : static_cast<double>(stats.agreements) /
                                              static_cast<double>(stats.checked));
            rows.push_back({stats.reading, std::to_string(stats.checked),
                            std::to_string(stats.agreements), rate.str()});
        }
        print_table(out, {"reading", "checked", "agreements", "rate"}, rows);
    }
    if (!r.counterexamples.empty()) {
        out << "\n";
        std::vector<std::vector<std::string>> rows;
        for (const auto& ce : r.counterexamples) {
            rows.push_back({ce.p, ce.q, ce.expected, ce.observed});
        }
        print_table(out, {"p", "q", "expected", "observed"}, rows);
    }
}

struct ClassifyOptions {
    std::string graph_path;
    std::string labels_path;
    bool json = false;
};

int run_classify(const ClassifyOptions& opt) {
    iasi::Graph g = load_graph(opt.graph_path);
    iasi::SetLabeling f = load_labeling(opt.labels_path);
    iasi::Verdict verdict = iasi::verify_iasi(g, f);
    if (!verdict.ok) {
        std::cerr << "not a set-indexer: " << verdict.violation << "\n";
        return kExitViolation;
    }
    iasi::ClassificationReport report = iasi::classify(g, f);
    if (opt.json) {
        std::cout << iasi::classification_to_json(report) << "\n";
    } else {
        print_classification_text(std::cout, report);
    }
    return kExitOk;
}

struct ConstructOptions {
    std::string graph_path;
    std::string kind;
    std::uint64_t m = 3;
    std::uint64_t n = 3;
    std::uint64_t d = 1;
    std::optional<std::uint64_t> k;
    std::string sizes;
    std::string diffs;
};

int run_construct(const ConstructOptions& opt) {
    iasi::Graph g = load_graph(opt.graph_path);
    iasi::SetLabeling f;
    if (opt.kind == "first") {
        iasi::ConstructionParams params;
        params.m = static_cast<std::size_t>(opt.m);
        params.n = static_cast<std::size_t>(opt.n);
        params.d = opt.d;
        params.k = opt.k;
        f = iasi::construct_first_kind(g, params);
    } else if (opt.kind == "iso") {
        std::vector<std::size_t> sizes;
        if (opt.sizes.empty()) {
            sizes.assign(g.vertex_count(), static_cast<std::size_t>(opt.m));
        } else {
            for (std::uint64_t v : split_u64(opt.sizes, "--sizes")) {
                sizes.push_back(static_cast<std::size_t>(v));
            }
        }
        f = iasi::construct_isoarithmetic(g, opt.d, sizes);
    } else {
        std::vector<std::uint64_t> diffs;
        if (!opt.diffs.empty()) diffs = split_u64(opt.diffs, "--diffs");
        f = iasi::construct_second_kind(g, diffs);
    }
    std::cout << iasi::labeling_to_json(f) << "\n";
    return kExitOk;
}

struct TransformOptions {
    std::string graph_path;
    std::string labels_path;
    std::string op;
    std::string edge;
    std::string vertex;
    bool json = false;
};

int run_transform(const TransformOptions& opt) {
    iasi::Graph g = load_graph(opt.graph_path);
    iasi::SetLabeling f = load_labeling(opt.labels_path);
    iasi::Verdict input_verdict = iasi::verify_iasi(g, f);
    if (!input_verdict.ok) {
        std::cerr << "input is not a set-indexer: " << input_verdict.violation << "\n";
        return kExitViolation;
    }
    iasi::TransformArgs args;
    if (!opt.edge.empty()) {
        auto comma = opt.edge.find(',');
        if (comma == std::string::npos || comma == 0 || comma + 1 == opt.edge.size()) {
            throw UsageError("--edge: expected 'u,v'");
        }
        args.edge = std::make_pair(opt.edge.substr(0, comma), opt.edge.substr(comma + 1));
    }
    if (!opt.vertex.empty()) args.vertex = opt.vertex;
    iasi::TransportResult result =
        iasi::transport_labeling(g, f, iasi::parse_transform_kind(opt.op), args);
    std::optional<iasi::ClassificationReport> report;
    if (result.verdict.ok) report = iasi::classify(result.graph, result.labeling);
    if (opt.json) {
        ordered_json doc = ordered_json::object();
        doc["graph"] = ordered_json::parse(iasi::graph_to_json(result.graph));
        doc["labeling"] = ordered_json::parse(iasi::labeling_to_json(result.labeling));
        doc["verdict"] = result.verdict.ok ? "ok" : result.verdict.violation;
        if (report) {
            doc["classification"] =
                ordered_json::parse(iasi::classification_to_json(*report));
        } else {
            doc["classification"] = nullptr;
        }
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "# derived graph\n" << result.graph.to_edge_list();
        std::cout << "\n# derived labeling\n"
                  << iasi::labeling_to_json(result.labeling) << "\n";
        if (report) {
            std::cout << "\n# classification\n";
            print_classification_text(std::cout, *report);
        } else {
            std::cout << "\n# verdict\nnot a set-indexer: " << result.verdict.violation
                      << "\n";
        }
    }
    return result.verdict.ok ? kExitOk : kExitViolation;
}

struct AuditOptions {
    std::string theorem;
    std::string bounds;
    bool serial = false;
    bool json = false;
};

int run_audit(const AuditOptions& opt) {
    iasi::TheoremId id;
    try {
        id = iasi::parse_theorem_id(opt.theorem);
    } catch (const iasi::InvalidArgumentError& e) {
        throw UsageError(e.what());
    }
    iasi::SearchBounds bounds;
    if (!opt.bounds.empty()) {
        auto values = split_u64(opt.bounds, "--bounds");
        if (values.size() != 4) throw UsageError("--bounds: expected 'f,d,lmin,lmax'");
        bounds.first_max = values[0];
        bounds.diff_max = values[1];
        bounds.len_min = static_cast<std::size_t>(values[2]);
        bounds.len_max = static_cast<std::size_t>(values[3]);
    }
    std::cerr << "search space: " << iasi::search_space_size(id, bounds)
              << (id == iasi::TheoremId::T2_7 ? " labeled graphs"
                                              : " ordered descriptor pairs")
              << "\n";
    iasi::AuditReport report =
        iasi::audit(id, bounds,
                    opt.serial ? iasi::ExecutionMode::serial : iasi::ExecutionMode::parallel);
    if (opt.json) {
        std::cout << iasi::audit_report_to_json(report) << "\n";
    } else {
        print_audit_text(std::cout, report);
    }
    return report.verdict == "consistent" ? kExitOk : kExitCounterexamples;
}

struct SumsetOptions {
    std::string a;
    std::string b;
    bool json = false;
};

int run_sumset(const SumsetOptions& opt) {
    iasi::IntegerSet a = iasi::IntegerSet::parse(opt.a);
    iasi::IntegerSet b = iasi::IntegerSet::parse(opt.b);
    iasi::IntegerSet sum = iasi::sumset(a, b);
    std::size_t index = iasi::compatibility_index(a, b);
    std::size_t max_class = iasi::maximal_class_size(a, b);
    if (opt.json) {
        ordered_json doc = ordered_json::object();
        doc["sumset"] = sum.elements();
        doc["cardinality"] = sum.size();
        doc["compatibility_index"] = index;
        doc["maximal_class_size"] = max_class;
        std::cout << doc.dump(2) << "\n";
    } else {
        print_table(std::cout, {"field", "value"},
                    {{"sumset", sum.to_string()},
                     {"cardinality", std::to_string(sum.size())},
                     {"compatibility_index", std::to_string(index)},
                     {"maximal_class_size", std::to_string(max_class)}});
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"integer additive set-indexer toolkit"};
    app.require_subcommand(1);

    ClassifyOptions classify_opt;
    CLI::App* classify_cmd =
        app.add_subcommand("classify", "classify a labeled graph");
    classify_cmd->add_option("--graph", classify_opt.graph_path, "edge-list file")
        ->required();
    classify_cmd->add_option("--labels", classify_opt.labels_path, "labeling JSON file")
        ->required();
    classify_cmd->add_flag("--json", classify_opt.json, "emit JSON");

    ConstructOptions construct_opt;
    CLI::App* construct_cmd =
        app.add_subcommand("construct", "build a labeling for a graph");
    construct_cmd->add_option("--graph", construct_opt.graph_path, "edge-list file")
        ->required();
    construct_cmd
        ->add_option("--kind", construct_opt.kind, "labeling kind: first|iso|second")
        ->required()
        ->check(CLI::IsMember({"first", "iso", "second"}));
    construct_cmd->add_option("--m", construct_opt.m, "label size, X side (first/iso)");
    construct_cmd->add_option("--n", construct_opt.n, "label size, Y side (first)");
    construct_cmd->add_option("--d", construct_opt.d, "base common difference");
    std::uint64_t k_value = 0;
    CLI::Option* k_option =
        construct_cmd->add_option("--k", k_value, "difference ratio (first)");
    construct_cmd->add_option("--sizes", construct_opt.sizes,
                              "per-vertex label sizes, e.g. 3,3,4 (iso)");
    construct_cmd->add_option("--diffs", construct_opt.diffs,
                              "coprime differences, e.g. 2,3,5 (second)");
    bool construct_json = false;
    construct_cmd->add_flag("--json", construct_json,
                            "labeling output is always JSON; flag accepted for symmetry");

    TransformOptions transform_opt;
    CLI::App* transform_cmd =
        app.add_subcommand("transform", "derive a graph and transport the labeling");
    transform_cmd->add_option("--graph", transform_opt.graph_path, "edge-list file")
        ->required();
    transform_cmd->add_option("--labels", transform_opt.labels_path, "labeling JSON file")
        ->required();
    transform_cmd
        ->add_option("--op", transform_opt.op,
                     "transform: line|total|subdivide|contract|reduce")
        ->required()
        ->check(CLI::IsMember({"line", "total", "subdivide", "contract", "reduce"}));
    transform_cmd->add_option("--edge", transform_opt.edge,
                              "edge 'u,v' (subdivide/contract)");
    transform_cmd->add_option("--vertex", transform_opt.vertex,
                              "degree-2 vertex to reduce");
    transform_cmd->add_flag("--json", transform_opt.json, "emit JSON");

    AuditOptions audit_opt;
    CLI::App* audit_cmd =
        app.add_subcommand("audit", "exhaustively audit a claim within bounds");
    audit_cmd
        ->add_option("--theorem", audit_opt.theorem,
                     "claim id: T1.3|T2.3|C2.4|P2.6|T2.7|T2.8|T2.9")
        ->required();
    audit_cmd->add_option("--bounds", audit_opt.bounds,
                          "descriptor bounds 'f,d,lmin,lmax' (default 3,6,3,5)");
    audit_cmd->add_flag("--serial", audit_opt.serial, "use the serial reference sweep");
    audit_cmd->add_flag("--json", audit_opt.json, "emit JSON");

    SumsetOptions sumset_opt;
    CLI::App* sumset_cmd =
        app.add_subcommand("sumset", "sum-set and compatibility statistics of two sets");
    sumset_cmd->add_option("--a", sumset_opt.a, "set literal, e.g. \"{0,1,2}\"")
        ->required();
    sumset_cmd->add_option("--b", sumset_opt.b, "set literal, e.g. \"{0,4,8}\"")
        ->required();
    sumset_cmd->add_flag("--json", sumset_opt.json, "emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (classify_cmd->parsed()) return run_classify(classify_opt);
        if (construct_cmd->parsed()) {
            if (k_option->count() > 0) construct_opt.k = k_value;
            return run_construct(construct_opt);
        }
        if (transform_cmd->parsed()) return run_transform(transform_opt);
        if (audit_cmd->parsed()) return run_audit(audit_opt);
        if (sumset_cmd->parsed()) return run_sumset(sumset_opt);
        std::cerr << "no verb selected\n";
        return kExitUsage;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const iasi::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const iasi::ConstructionImpossibleError& e) {
        std::cerr << "construction impossible: " << e.what() << "\n";
        return kExitImpossible;
    } catch (const iasi::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
