#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "mvlab/budget.hpp"
#include "mvlab/hypergraph.hpp"
#include "mvlab/interval.hpp"

namespace mvlab {

enum class CoveringSide { blocks, transversal };
std::string_view to_string(CoveringSide side);

// (n, k, t) covering design search result. `value` is exact when the search
// completed; otherwise it brackets C(n,k,t) and `blocks` realizes value.hi.
struct CoveringInstance {
    int n = 0, k = 0, t = 0;
    Interval value;
    std::vector<std::uint64_t> blocks;
    CoveringSide side = CoveringSide::blocks;
    std::uint64_t nodes = 0;

    bool exact() const { return value.is_exact(); }
};

// Minimum edge count of an r-uniform hypergraph on n vertices with tau >= s.
struct MinTransversalEdges {
    int n = 0, r = 0, s = 0;
    Interval value;
    Hypergraph witness;  // realizes value.hi
    std::uint64_t nodes = 0;
};

// ceil(C(n,t) / C(k,t)).
std::int64_t steiner_lower_bound(int n, int k, int t);

// True iff every t-subset of [n] lies in some block.
bool covers_all(int n, int t, const std::vector<std::uint64_t>& blocks);

// Exact C(n,k,t) on the block side: branch on the first uncovered t-set.
CoveringInstance covering_number_blocks(int n, int k, int t, const SearchBudget& budget = {});

// Exact minimum edge count of r-uniform hypergraphs on [n] with tau >= s,
// enumerating edge sets in increasing colex order. `upper_hint` (if any)
// must be such a hypergraph and seeds the upper bound.
MinTransversalEdges min_edges_with_transversal(int n, int r, int s, const SearchBudget& budget = {},
                                               const std::optional<Hypergraph>& upper_hint = std::nullopt);

// C(n,k,t) as the minimum edge count of an (n-k)-uniform hypergraph with
// tau >= t+1 (blocks are the complements of its edges).
CoveringInstance covering_number_transversal(int n, int k, int t, const SearchBudget& budget = {});

// Picks the side with the smaller search: the transversal side when n-k < k.
CoveringInstance covering_number(int n, int k, int t, const SearchBudget& budget = {});

// C*(n,k) = C(n, n-k, 2k-1), via min edges of k-graphs on [n] with tau >= 2k.
// Requires n >= 3k and k >= 2.
MinTransversalEdges c_star(int n, int k, const SearchBudget& budget = {});

// k-uniform generalized triangle: parts V1, V2, V3 of sizes floor(k/2),
// ceil(k/2), ceil(k/2) with edges V1V2, V1V3, V2V3 (for odd k the last edge
// drops one vertex of V3). Vertices V1, V2, V3 take labels in that order.
Hypergraph build_generalized_triangle(int k);

// All k-subsets of [v].
Hypergraph build_complete_uniform(int v, int k);

// Two generalized triangles, two copies of K^{(k)}_{2k-3}, then isolates up to n.
// Requires k >= 3 and n >= 7k-5.
Hypergraph build_H_nk(int n, int k);

} // namespace mvlab
