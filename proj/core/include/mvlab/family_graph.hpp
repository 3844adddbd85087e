#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mvlab/bits.hpp"
#include "mvlab/ksubset.hpp"

namespace mvlab {

enum class FamilyKind { kneser, bipartite_kneser, johnson };

std::string_view to_string(FamilyKind kind);
std::optional<FamilyKind> parse_family_kind(std::string_view s);

using VertexId = std::uint32_t;

// KG(n,k), H(n,k) or J(n,k) with implicit adjacency. Vertices are indexed in
// colex order; for H(n,k) the (n-k)-sets follow the k-sets.
class FamilyGraph {
public:
    // Throws ConstraintError when (n, k) is outside the family's connected range.
    FamilyGraph(FamilyKind kind, int n, int k);

    static FamilyGraph kneser(int n, int k) { return {FamilyKind::kneser, n, k}; }
    static FamilyGraph bipartite_kneser(int n, int k) { return {FamilyKind::bipartite_kneser, n, k}; }
    static FamilyGraph johnson(int n, int k) { return {FamilyKind::johnson, n, k}; }

    // "kneser:n=7,k=2", "bipartite-kneser:n=7,k=2", "johnson:n=5,k=2".
    static FamilyGraph parse(std::string_view spec);
    std::string spec() const;

    FamilyKind kind() const { return kind_; }
    int n() const { return n_; }
    int k() const { return k_; }
    std::size_t vertex_count() const { return vertex_count_; }

    KSubset vertex(VertexId id) const;
    // Throws DomainError when s is not a vertex of this graph.
    VertexId index_of(const KSubset& s) const;
    bool is_vertex(const KSubset& s) const;

    std::vector<KSubset> enumerate_vertices() const;

    bool adjacent(const KSubset& a, const KSubset& b) const;
    bool adjacent(VertexId a, VertexId b) const;

    void for_each_neighbor(VertexId v, const std::function<void(VertexId)>& f) const;

    // Exact shortest-path distance. Johnson and Kneser with n >= 3k-1 use the
    // closed forms, every other case runs BFS.
    int distance(const KSubset& a, const KSubset& b) const;
    int distance(VertexId a, VertexId b) const;
    int bfs_distance(VertexId a, VertexId b) const;
    std::vector<int> bfs_from(VertexId source) const;

    int diameter() const;

    // [n] \ S. Only defined on H(n,k).
    KSubset complement_automorphism(const KSubset& s) const;

    friend bool operator==(const FamilyGraph& a, const FamilyGraph& b) {
        return a.kind_ == b.kind_ && a.n_ == b.n_ && a.k_ == b.k_;
    }

private:
    bool adjacent_bits(std::uint64_t a, std::uint64_t b) const;
    void check_vertex(const KSubset& s) const;

    FamilyKind kind_;
    int n_;
    int k_;
    std::size_t vertex_count_;
    std::size_t side_count_;
};

// Above this vertex count the dense tables below are refused.
inline constexpr std::size_t kDenseVertexLimit = 4096;

// All-pairs distances and adjacency rows for a family graph small enough to
// materialize. Immutable after construction.
class DistanceTable {
public:
    explicit DistanceTable(const FamilyGraph& graph);

    const FamilyGraph& graph() const { return graph_; }
    std::size_t size() const { return size_; }
    int diameter() const { return diameter_; }

    int dist(VertexId u, VertexId v) const { return dist_[static_cast<std::size_t>(u) * size_ + v]; }
    const Bits& neighbors(VertexId v) const { return adjacency_[v]; }
    // Vertices at distance exactly d from v; empty mask when d > diameter.
    const Bits& sphere(VertexId v, int d) const;

private:
    FamilyGraph graph_;
    std::size_t size_;
    int diameter_ = 0;
    std::vector<std::uint8_t> dist_;
    std::vector<Bits> adjacency_;
    std::vector<Bits> spheres_;  // size_ * (diameter_ + 1)
    Bits empty_;
};

} // namespace mvlab
