#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "iasi/graph.hpp"
#include "iasi/integer_set.hpp"

namespace iasi {

// A vertex-to-set assignment. Injectivity is deliberately not enforced at
// construction: detecting and naming collisions is verify_iasi's job.
class SetLabeling {
public:
    void assign(const std::string& vertex, IntegerSet label);
    bool has(const std::string& vertex) const;
    const IntegerSet& at(const std::string& vertex) const;  // throws MissingLabelError
    const std::map<std::string, IntegerSet>& assignments() const { return labels_; }
    std::size_t size() const { return labels_.size(); }

private:
    std::map<std::string, IntegerSet> labels_;
};

// f+(uv): the sumset of the endpoint labels.
IntegerSet induced_edge_label(const SetLabeling& f, const std::string& u,
                              const std::string& v);

// Outcome of an injectivity check: ok, or a violation naming the colliding
// pair of vertices or edges.
struct Verdict {
    bool ok = true;
    std::string violation;
};

// Checks that the labeling covers exactly the vertices of g (missing ones
// throw MissingLabelError, extras InvalidArgumentError) and that both f and
// the induced f+ are injective. Collisions come back as a Verdict.
Verdict verify_iasi(const Graph& g, const SetLabeling& f);

// |f(v)| and |f+(uv)|.
std::size_t set_indexing_number(const SetLabeling& f, const std::string& vertex);
std::size_t edge_set_indexing_number(const SetLabeling& f, const std::string& u,
                                     const std::string& v);

// Whether |A + B| reaches the |A| * |B| ceiling.
bool is_strong_edge(const IntegerSet& a, const IntegerSet& b);

}  // namespace iasi
