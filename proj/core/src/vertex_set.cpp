#include "mvlab/vertex_set.hpp"

#include "mvlab/errors.hpp"

namespace mvlab {

VertexSet::VertexSet(const FamilyGraph& graph, Bits mask) : graph_(graph), mask_(std::move(mask)) {
    if (mask_.size() != graph_.vertex_count()) throw DomainError("vertex mask width does not match " + graph_.spec());
}

VertexSet::VertexSet(const FamilyGraph& graph, std::span<const KSubset> members) : VertexSet(graph) {
    for (const auto& s : members) insert(s);
}

VertexSet VertexSet::complement() const {
    Bits m(mask_.size());
    m.fill();
    m.and_not(mask_);
    return {graph_, std::move(m)};
}

std::vector<KSubset> VertexSet::members() const {
    std::vector<KSubset> out;
    out.reserve(size());
    mask_.for_each([&](std::size_t v) { out.push_back(graph_.vertex(static_cast<VertexId>(v))); });
    return out;
}

} // namespace mvlab
