#pragma once

#include <span>
#include <vector>

#include "mvlab/bits.hpp"
#include "mvlab/family_graph.hpp"

namespace mvlab {

// A set of vertices of one family graph, stored as a mask over vertex ids.
class VertexSet {
public:
    explicit VertexSet(const FamilyGraph& graph) : graph_(graph), mask_(graph.vertex_count()) {}
    VertexSet(const FamilyGraph& graph, Bits mask);
    // Throws DomainError if a member is not a vertex of graph.
    VertexSet(const FamilyGraph& graph, std::span<const KSubset> members);

    const FamilyGraph& graph() const { return graph_; }
    const Bits& mask() const { return mask_; }
    std::size_t size() const { return mask_.count(); }
    bool empty() const { return mask_.none(); }

    void insert(const KSubset& s) { mask_.set(graph_.index_of(s)); }
    void insert(VertexId v) { mask_.set(v); }
    void erase(const KSubset& s) { mask_.reset(graph_.index_of(s)); }
    bool contains(const KSubset& s) const { return mask_.test(graph_.index_of(s)); }
    bool contains(VertexId v) const { return mask_.test(v); }

    VertexSet complement() const;
    // Members in vertex-id order (colex within each size class).
    std::vector<KSubset> members() const;

private:
    FamilyGraph graph_;
    Bits mask_;
};

} // namespace mvlab
