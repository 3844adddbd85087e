#pragma once

#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "mvlab/budget.hpp"
#include "mvlab/family_graph.hpp"
#include "mvlab/vertex_set.hpp"

namespace mvlab {

enum class VisibilityVariant { mutual, total, dual, outer, general_position };

std::string_view to_string(VisibilityVariant v);
// Accepts "mutual", "total", "dual", "outer", "general-position" and the CLI
// aliases "mu", "mu-total", "mu-dual", "mu-outer", "gp".
std::optional<VisibilityVariant> parse_visibility_variant(std::string_view s);

// Subsets of a feasible set stay feasible (mutual, total, general position).
bool is_hereditary(VisibilityVariant v);

// A pair (or, for general position, a triple) that witnesses a failed check.
struct Violation {
    std::vector<VertexId> vertices;
};

enum class SearchStatus { exact, incomplete };

struct VisibilityCertificate {
    VisibilityVariant variant;
    int value = 0;
    VertexSet witness;
    // Why the witness cannot absorb its colex-first non-member.
    std::optional<Violation> blocking;
    SearchStatus status = SearchStatus::exact;
    std::uint64_t nodes_expanded = 0;
};

// Definition-level visibility checks on a materialized family graph.
class VisibilityOracle {
public:
    explicit VisibilityOracle(const FamilyGraph& graph);

    const FamilyGraph& graph() const { return table_->graph(); }
    const DistanceTable& table() const { return *table_; }
    std::size_t size() const { return table_->size(); }

    // True iff some shortest u,v-path has no internal vertex in x.
    bool is_x_visible(const Bits& x, VertexId u, VertexId v) const;
    bool is_x_visible(const VertexSet& x, const KSubset& u, const KSubset& v) const;

    // First violated pair/triple in vertex-id order, or nullopt if x qualifies.
    std::optional<Violation> find_violation(const Bits& x, VisibilityVariant variant) const;
    std::optional<Violation> find_violation(const VertexSet& x, VisibilityVariant variant) const;
    bool is_visibility_set(const VertexSet& x, VisibilityVariant variant) const {
        return !find_violation(x, variant);
    }

    // x is feasible for the hereditary variant h; is x + {v} still feasible?
    // Only the pairs/triples that v can affect are rechecked.
    bool can_extend(const Bits& x, VertexId v, VisibilityVariant h) const;

    // Exact maximum by branch and bound. Ties resolve to the colex-least witness.
    VisibilityCertificate max_visibility_number(VisibilityVariant variant,
                                                const SearchBudget& budget = {}) const;

private:
    bool general_position_triple_ok(VertexId a, VertexId b, VertexId c) const;

    std::shared_ptr<const DistanceTable> table_;
};

// Total mutual-visibility in KG(n,k), n >= 3k-1, decided through the transversal
// number of the complement's underlying hypergraph: tau(F(V \ X)) >= 2k.
bool kneser_total_mv_check_fast(int n, int k, const VertexSet& x);

} // namespace mvlab
