#include "mvlab/family_graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <limits>

#include "mvlab/errors.hpp"

namespace mvlab {

std::string_view to_string(FamilyKind kind) {
    switch (kind) {
    case FamilyKind::kneser: return "kneser";
    case FamilyKind::bipartite_kneser: return "bipartite-kneser";
    case FamilyKind::johnson: return "johnson";
    }
    return "?";
}

std::optional<FamilyKind> parse_family_kind(std::string_view s) {
    if (s == "kneser") return FamilyKind::kneser;
    if (s == "bipartite-kneser") return FamilyKind::bipartite_kneser;
    if (s == "johnson") return FamilyKind::johnson;
    return std::nullopt;
}

FamilyGraph::FamilyGraph(FamilyKind kind, int n, int k) : kind_(kind), n_(n), k_(k) {
    auto params = "n=" + std::to_string(n) + ", k=" + std::to_string(k);
    if (n > kMaxGround) throw ConstraintError("ground-set", "n <= 64 required, got " + params);
    if (k < 2) throw ConstraintError("k>=2", "family graphs need k >= 2, got " + params);
    switch (kind) {
    case FamilyKind::kneser:
        if (n < 2 * k + 1) throw ConstraintError("n>=2k+1", "KG(n,k) is disconnected below n = 2k+1, got " + params);
        break;
    case FamilyKind::bipartite_kneser:
        if (n < 2 * k + 1) throw ConstraintError("n>=2k+1", "H(n,k) needs n >= 2k+1 >= 5, got " + params);
        break;
    case FamilyKind::johnson:
        if (n < k + 2) throw ConstraintError("n>=k+2", "J(n,k) needs n >= k+2 >= 4, got " + params);
        break;
    }
    side_count_ = binomial(n, k);
    vertex_count_ = kind == FamilyKind::bipartite_kneser ? 2 * side_count_ : side_count_;
    if (vertex_count_ > std::numeric_limits<VertexId>::max())
        throw ConstraintError("vertex-count", "more than 2^32 vertices: " + params);
}

FamilyGraph FamilyGraph::parse(std::string_view spec) {
    auto fail = [&](const std::string& why) -> FamilyGraph {
        throw ConstraintError("family-spec", "cannot parse '" + std::string(spec) + "': " + why);
    };
    auto colon = spec.find(':');
    if (colon == std::string_view::npos) return fail("expected <kind>:n=<n>,k=<k>");
    auto kind = parse_family_kind(spec.substr(0, colon));
    if (!kind) return fail("unknown family kind");
    std::optional<int> n, k;
    auto rest = spec.substr(colon + 1);
    while (!rest.empty()) {
        auto comma = rest.find(',');
        auto item = rest.substr(0, comma);
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        auto eq = item.find('=');
        if (eq == std::string_view::npos) return fail("expected key=value");
        auto key = item.substr(0, eq);
        auto val = item.substr(eq + 1);
        int v = 0;
        auto [p, ec] = std::from_chars(val.data(), val.data() + val.size(), v);
        if (ec != std::errc{} || p != val.data() + val.size()) return fail("bad integer '" + std::string(val) + "'");
        if (key == "n") n = v;
        else if (key == "k") k = v;
        else return fail("unknown key '" + std::string(key) + "'");
    }
    if (!n || !k) return fail("both n and k are required");
    return {*kind, *n, *k};
}

std::string FamilyGraph::spec() const {
    return std::string(to_string(kind_)) + ":n=" + std::to_string(n_) + ",k=" + std::to_string(k_);
}

KSubset FamilyGraph::vertex(VertexId id) const {
    if (id >= vertex_count_) throw DomainError("vertex id " + std::to_string(id) + " out of range for " + spec());
    if (id < side_count_) return {n_, colex_unrank(id, k_)};
    return {n_, colex_unrank(id - side_count_, n_ - k_)};
}

bool FamilyGraph::is_vertex(const KSubset& s) const {
    if (s.n() != n_) return false;
    if (s.size() == k_) return true;
    return kind_ == FamilyKind::bipartite_kneser && s.size() == n_ - k_;
}

void FamilyGraph::check_vertex(const KSubset& s) const {
    if (!is_vertex(s)) throw DomainError(s.to_string() + " over [" + std::to_string(s.n()) + "] is not a vertex of " + spec());
}

VertexId FamilyGraph::index_of(const KSubset& s) const {
    check_vertex(s);
    auto rank = colex_rank(s.bits());
    if (s.size() == k_) return static_cast<VertexId>(rank);
    return static_cast<VertexId>(side_count_ + rank);
}

std::vector<KSubset> FamilyGraph::enumerate_vertices() const {
    std::vector<KSubset> out;
    out.reserve(vertex_count_);
    auto emit_side = [&](int r) {
        for_each_submask_of_size(full_mask(n_), r, [&](std::uint64_t m) { out.emplace_back(n_, m); });
    };
    emit_side(k_);
    if (kind_ == FamilyKind::bipartite_kneser) emit_side(n_ - k_);
    return out;
}

bool FamilyGraph::adjacent_bits(std::uint64_t a, std::uint64_t b) const {
    switch (kind_) {
    case FamilyKind::kneser: return (a & b) == 0;
    case FamilyKind::johnson: return std::popcount(a & b) == k_ - 1;
    case FamilyKind::bipartite_kneser:
        if (std::popcount(a) == std::popcount(b)) return false;
        return (a & ~b) == 0 || (b & ~a) == 0;
    }
    return false;
}

bool FamilyGraph::adjacent(const KSubset& a, const KSubset& b) const {
    check_vertex(a);
    check_vertex(b);
    return a != b && adjacent_bits(a.bits(), b.bits());
}

bool FamilyGraph::adjacent(VertexId a, VertexId b) const {
    return a != b && adjacent_bits(vertex(a).bits(), vertex(b).bits());
}

void FamilyGraph::for_each_neighbor(VertexId v, const std::function<void(VertexId)>& f) const {
    const std::uint64_t bits = vertex(v).bits();
    const std::uint64_t outside = full_mask(n_) & ~bits;
    auto emit = [&](std::uint64_t m) {
        auto r = colex_rank(m);
        f(static_cast<VertexId>(std::popcount(m) == k_ ? r : side_count_ + r));
    };
    switch (kind_) {
    case FamilyKind::kneser:
        for_each_submask_of_size(outside, k_, emit);
        break;
    case FamilyKind::johnson:
        for (auto in = bits; in; in &= in - 1)
            for (auto out = outside; out; out &= out - 1) emit(bits ^ (in & (~in + 1)) ^ (out & (~out + 1)));
        break;
    case FamilyKind::bipartite_kneser:
        if (std::popcount(bits) == k_)
            for_each_submask_of_size(outside, n_ - 2 * k_, [&](std::uint64_t m) { emit(bits | m); });
        else
            for_each_submask_of_size(bits, k_, emit);
        break;
    }
}

std::vector<int> FamilyGraph::bfs_from(VertexId source) const {
    std::vector<int> dist(vertex_count_, -1);
    std::deque<VertexId> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        auto u = queue.front();
        queue.pop_front();
        for_each_neighbor(u, [&](VertexId w) {
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        });
    }
    return dist;
}

int FamilyGraph::bfs_distance(VertexId a, VertexId b) const {
    if (a == b) return 0;
    std::vector<int> dist(vertex_count_, -1);
    std::deque<VertexId> queue{a};
    dist[a] = 0;
    while (!queue.empty()) {
        auto u = queue.front();
        queue.pop_front();
        bool found = false;
        for_each_neighbor(u, [&](VertexId w) {
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                if (w == b) found = true;
                queue.push_back(w);
            }
        });
        if (found) return dist[b];
    }
    throw ConstraintError("connected", "no path in " + spec());
}

int FamilyGraph::distance(const KSubset& a, const KSubset& b) const {
    check_vertex(a);
    check_vertex(b);
    if (a == b) return 0;
    if (kind_ == FamilyKind::johnson) return k_ - a.intersection_size(b);
    if (kind_ == FamilyKind::kneser && n_ >= 3 * k_ - 1) return a.disjoint(b) ? 1 : 2;
    return bfs_distance(index_of(a), index_of(b));
}

int FamilyGraph::distance(VertexId a, VertexId b) const { return distance(vertex(a), vertex(b)); }

int FamilyGraph::diameter() const {
    if (kind_ == FamilyKind::kneser && n_ >= 3 * k_ - 1) return 2;
    if (kind_ == FamilyKind::johnson) return std::min(k_, n_ - k_);
    // All three families are vertex-transitive, so one eccentricity is the diameter.
    auto dist = bfs_from(0);
    return *std::max_element(dist.begin(), dist.end());
}

KSubset FamilyGraph::complement_automorphism(const KSubset& s) const {
    if (kind_ != FamilyKind::bipartite_kneser)
        throw DomainError("complement automorphism is only defined on bipartite Kneser graphs, not " + spec());
    check_vertex(s);
    return s.complement();
}

DistanceTable::DistanceTable(const FamilyGraph& graph) : graph_(graph), size_(graph.vertex_count()) {
    if (size_ > kDenseVertexLimit)
        throw ConstraintError("dense-limit", graph.spec() + " has " + std::to_string(size_) +
                                                 " vertices; dense tables stop at " + std::to_string(kDenseVertexLimit));
    dist_.assign(size_ * size_, 0);
    adjacency_.assign(size_, Bits(size_));
    for (VertexId u = 0; u < size_; ++u) {
        graph_.for_each_neighbor(u, [&](VertexId w) { adjacency_[u].set(w); });
        auto row = graph_.bfs_from(u);
        for (std::size_t v = 0; v < size_; ++v) {
            if (row[v] < 0) throw ConstraintError("connected", graph.spec() + " is disconnected");
            dist_[u * size_ + v] = static_cast<std::uint8_t>(row[v]);
            diameter_ = std::max(diameter_, row[v]);
        }
    }
    const auto layers = static_cast<std::size_t>(diameter_) + 1;
    spheres_.assign(size_ * layers, Bits(size_));
    for (std::size_t u = 0; u < size_; ++u)
        for (std::size_t v = 0; v < size_; ++v) spheres_[u * layers + dist_[u * size_ + v]].set(v);
    empty_ = Bits(size_);
}

const Bits& DistanceTable::sphere(VertexId v, int d) const {
    if (d < 0 || d > diameter_) return empty_;
    return spheres_[static_cast<std::size_t>(v) * (static_cast<std::size_t>(diameter_) + 1) + static_cast<std::size_t>(d)];
}

} // namespace mvlab
