#include "iasi/graph.hpp"

#include <algorithm>
#include <cctype>
#include <queue>
#include <sstream>

#include "iasi/errors.hpp"

namespace iasi {

std::size_t Graph::add_vertex(const std::string& id) {
    if (id.empty()) throw InvalidArgumentError("vertex id must be non-empty");
    auto [it, inserted] = index_.try_emplace(id, ids_.size());
    if (inserted) {
        ids_.push_back(id);
        adjacency_.emplace_back();
    }
    return it->second;
}

std::uint64_t Graph::edge_key(std::size_t a, std::size_t b) {
    return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint64_t>(b);
}

void Graph::add_edge(const std::string& u, const std::string& v) {
    if (u == v) throw InvalidArgumentError("loop edge " + u + "-" + v + " not allowed");
    std::size_t a = add_vertex(u);
    std::size_t b = add_vertex(v);
    auto [lo, hi] = std::minmax(a, b);
    if (!edge_keys_.insert(edge_key(lo, hi)).second) return;  // duplicate
    edges_.emplace_back(lo, hi);
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
}

bool Graph::has_vertex(const std::string& id) const { return index_.count(id) > 0; }

bool Graph::has_edge(const std::string& u, const std::string& v) const {
    auto iu = index_.find(u);
    auto iv = index_.find(v);
    if (iu == index_.end() || iv == index_.end()) return false;
    auto [lo, hi] = std::minmax(iu->second, iv->second);
    return edge_keys_.count(edge_key(lo, hi)) > 0;
}

std::size_t Graph::index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw NotFoundError("vertex '" + id + "' not in graph");
    return it->second;
}

std::vector<std::pair<std::string, std::string>> Graph::edges() const {
    std::vector<std::pair<std::string, std::string>> result;
    result.reserve(edges_.size());
    for (auto [a, b] : edges_) {
        const std::string& u = ids_[a];
        const std::string& v = ids_[b];
        result.emplace_back(std::min(u, v), std::max(u, v));
    }
    return result;
}

std::vector<std::pair<std::string, std::string>> Graph::sorted_edges() const {
    auto result = edges();
    std::sort(result.begin(), result.end());
    return result;
}

std::vector<std::string> Graph::neighbors(const std::string& id) const {
    std::vector<std::string> result;
    for (std::size_t n : adjacency_[index_of(id)]) result.push_back(ids_[n]);
    return result;
}

std::size_t Graph::degree(const std::string& id) const {
    return adjacency_[index_of(id)].size();
}

void Graph::validate(bool allow_isolated) const {
    if (ids_.empty()) throw InvalidArgumentError("graph has no vertices");
    if (allow_isolated) return;
    for (std::size_t i = 0; i < ids_.size(); ++i) {
        if (adjacency_[i].empty()) {
            throw InvalidArgumentError("isolated vertex '" + ids_[i] + "'");
        }
    }
}

Graph Graph::relabeled(const std::map<std::string, std::string>& mapping) const {
    auto mapped = [&](const std::string& id) -> const std::string& {
        auto it = mapping.find(id);
        return it == mapping.end() ? id : it->second;
    };
    Graph result;
    for (const std::string& id : ids_) {
        const std::string& new_id = mapped(id);
        if (result.has_vertex(new_id)) {
            throw InvalidArgumentError("relabeling merges vertices into '" + new_id + "'");
        }
        result.add_vertex(new_id);
    }
    for (auto [a, b] : edges_) result.add_edge(mapped(ids_[a]), mapped(ids_[b]));
    return result;
}

bool operator==(const Graph& a, const Graph& b) {
    std::vector<std::string> va = a.ids_;
    std::vector<std::string> vb = b.ids_;
    std::sort(va.begin(), va.end());
    std::sort(vb.begin(), vb.end());
    return va == vb && a.sorted_edges() == b.sorted_edges();
}

Graph Graph::parse_edge_list(std::istream& in) {
    Graph g;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);

        struct Token {
            std::string text;
            int column;
        };
        std::vector<Token> tokens;
        std::size_t i = 0;
        while (i < line.size()) {
            if (std::isspace(static_cast<unsigned char>(line[i]))) {
                ++i;
                continue;
            }
            std::size_t start = i;
            while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            tokens.push_back(Token{line.substr(start, i - start), static_cast<int>(start) + 1});
        }
        if (tokens.empty()) continue;
        if (tokens.size() != 2) {
            int column = tokens.size() > 2 ? tokens[2].column : tokens[0].column;
            std::ostringstream msg;
            msg << "expected two vertex ids per edge line, got " << tokens.size();
            throw ParseError(msg.str(), line_no, column);
        }
        for (const Token& t : tokens) {
            if (t.text.find(',') != std::string::npos) {
                throw ParseError("vertex ids must not contain ','", line_no, t.column);
            }
        }
        if (tokens[0].text == tokens[1].text) {
            throw ParseError("loop edge '" + tokens[0].text + " " + tokens[1].text + "'",
                             line_no, tokens[1].column);
        }
        g.add_edge(tokens[0].text, tokens[1].text);
    }
    return g;
}

Graph Graph::parse_edge_list_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_edge_list(in);
}

std::string Graph::to_edge_list() const {
    std::ostringstream out;
    for (const auto& [u, v] : sorted_edges()) out << u << ' ' << v << '\n';
    return out.str();
}

std::optional<Bipartition> is_bipartite(const Graph& g) {
    const auto& ids = g.vertices();
    std::vector<int> color(ids.size(), -1);
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < ids.size(); ++i) index[ids[i]] = i;

    for (std::size_t root = 0; root < ids.size(); ++root) {
        if (color[root] != -1) continue;
        color[root] = 0;
        std::queue<std::size_t> frontier;
        frontier.push(root);
        while (!frontier.empty()) {
            std::size_t at = frontier.front();
            frontier.pop();
            for (const std::string& next_id : g.neighbors(ids[at])) {
                std::size_t next = index[next_id];
                if (color[next] == -1) {
                    color[next] = 1 - color[at];
                    frontier.push(next);
                } else if (color[next] == color[at]) {
                    return std::nullopt;  // odd cycle
                }
            }
        }
    }

    Bipartition parts;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        (color[i] == 0 ? parts.part_x : parts.part_y).push_back(ids[i]);
    }
    return parts;
}

}  // namespace iasi
