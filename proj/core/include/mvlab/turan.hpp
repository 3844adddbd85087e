#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mvlab/budget.hpp"
#include "mvlab/hypergraph.hpp"
#include "mvlab/interval.hpp"

namespace mvlab {

enum class PatternKind { c4_suspension, k4_suspension };

// k-uniform suspension of C4 or K4: every edge is Y + {z_i, z_j} for a fixed
// (k-2)-set Y. Abstract vertices 0..k-3 are Y, k-2..k+1 are z1..z4.
struct Pattern {
    PatternKind kind = PatternKind::c4_suspension;
    int k = 2;
    std::vector<std::uint64_t> template_edges;

    int vertex_count() const { return k + 2; }
    std::uint64_t apex_mask() const { return full_mask(k - 2); }
    // "c4sus:k=3"
    std::string spec() const;
    static Pattern parse(std::string_view spec);
    // The template as a hypergraph on k+2 vertices.
    Hypergraph as_hypergraph() const;
};

Pattern build_c4_suspension(int k);
Pattern build_k4_suspension(int k);

// Injective placement of the template into a host: apex set Y and z1..z4
// (1-based ground labels). Template edge Y + {z_i, z_j} maps to a host edge.
struct Embedding {
    KSubset apex;
    std::array<int, 4> z;
};

// Throws DomainError when h is not p.k-uniform.
std::optional<Embedding> contains_pattern(const Hypergraph& h, const Pattern& p);

enum class TuranStatus { exact, interval };

struct TuranResult {
    int n = 0, k = 0;
    Pattern pattern;
    Interval value;
    Hypergraph extremal_witness;  // pattern-free, value.lo edges
    TuranStatus status = TuranStatus::exact;
    std::uint64_t nodes = 0;
    // Reported alongside interval results; an asymptotic guide, not a bound.
    std::optional<double> mubayi_guide;
};

// ex_k(n, p): exact maximum edge count of a p-free k-graph on [n], by
// include/exclude branch and bound over k-sets (highest colex rank first)
// with pattern-closure pruning. Ties resolve to the colex-least edge set.
TuranResult ex_uniform(int n, int k, const Pattern& p, const SearchBudget& budget = {});

// floor(n^2 / 3).
std::int64_t turan_k4_closed(int n);

// n^{k - 1/2} / k!. Mubayi's asymptotic order for ex_k(n, C4 suspension);
// (1 + o(1)) is dropped, so this is a guide rather than a bound.
double mubayi_asymptote(int n, int k);

} // namespace mvlab
