#pragma once

#include <string>

#include "iasi/audit.hpp"
#include "iasi/classify.hpp"
#include "iasi/graph.hpp"
#include "iasi/labeling.hpp"

namespace iasi {

// Labeling files are JSON objects mapping vertex id to an array of
// non-negative integers, e.g. {"u":[0,1,2],"v":[0,4,8]}.
SetLabeling parse_labeling_json(const std::string& text);  // throws ParseError
std::string labeling_to_json(const SetLabeling& f);

// {"vertices":[...],"edges":[["u","v"],...]}, both sorted.
std::string graph_to_json(const Graph& g);
Graph parse_graph_json(const std::string& text);  // throws ParseError

std::string classification_to_json(const ClassificationReport& report);
std::string audit_report_to_json(const AuditReport& report);

}  // namespace iasi
