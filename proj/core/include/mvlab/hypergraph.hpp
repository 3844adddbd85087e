#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "mvlab/budget.hpp"
#include "mvlab/interval.hpp"
#include "mvlab/ksubset.hpp"
#include "mvlab/vertex_set.hpp"

namespace mvlab {

// Set system on [n]. Edges are non-empty, duplicate-free and kept sorted in
// colex order. k > 0 means every edge has exactly k vertices; k == 0 allows
// mixed sizes.
class Hypergraph {
public:
    Hypergraph() = default;
    Hypergraph(int n, int k) : n_(n), k_(k) { validate(); }
    Hypergraph(int n, int k, std::vector<std::uint64_t> edges);
    Hypergraph(int n, int k, std::span<const KSubset> edges);

    int n() const { return n_; }
    int k() const { return k_; }
    bool uniform() const { return k_ > 0; }
    std::size_t edge_count() const { return edges_.size(); }
    std::span<const std::uint64_t> edges() const { return edges_; }
    std::vector<KSubset> edge_sets() const;
    bool has_edge(std::uint64_t e) const;

    // Same edges on [n + extra]; the new vertices are isolates.
    Hypergraph with_isolates(int extra) const;
    // Disjoint union; other's vertices are shifted past this one's.
    Hypergraph disjoint_union(const Hypergraph& other) const;

    // Throws DomainError unless every edge has exactly k vertices.
    void require_uniform(int k) const;

    // Text format: "n k" header, then one ascending 1-based edge per line.
    void write(std::ostream& out) const;
    std::string to_text() const;
    static Hypergraph read(std::istream& in);
    static Hypergraph parse(const std::string& text);

    friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

private:
    void validate();

    int n_ = 0;
    int k_ = 0;
    std::vector<std::uint64_t> edges_;
};

// F(S): the sets represented by the vertices of S, as edges over [n].
Hypergraph underlying_hypergraph(const VertexSet& s);

struct TransversalCertificate {
    int tau = 0;
    KSubset transversal;
    bool optimal = false;  // false only when the budget ran out
    std::uint64_t nodes = 0;
};

bool is_transversal(const Hypergraph& h, std::uint64_t t);

// Exact transversal number by branching on a shortest uncovered edge, pruned
// by a greedy packing of pairwise disjoint uncovered edges.
TransversalCertificate transversal_number(const Hypergraph& h,
                                          const SearchBudget& budget = SearchBudget::unlimited());

// Decides tau(h) >= threshold; cheaper than the full optimum.
bool transversal_at_least(const Hypergraph& h, int threshold);
// Same decision on a raw edge list over [n], without building a Hypergraph.
bool transversal_at_least(std::span<const std::uint64_t> edges, int n, int threshold);

} // namespace mvlab
