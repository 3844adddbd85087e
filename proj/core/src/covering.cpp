#include "mvlab/covering.hpp"

#include <algorithm>

#include "mvlab/errors.hpp"

namespace mvlab {

namespace {

constexpr std::uint64_t kMaxIndexedSets = std::uint64_t{1} << 22;

void require_design_params(int n, int k, int t) {
    if (!(n >= k && k >= t && t >= 1) || n > kMaxGround)
        throw ConstraintError("n>=k>=t>=1", "covering design needs 64 >= n >= k >= t >= 1, got (" + std::to_string(n) +
                                                "," + std::to_string(k) + "," + std::to_string(t) + ")");
}

std::vector<std::uint64_t> complements(int n, std::span<const std::uint64_t> sets) {
    std::vector<std::uint64_t> out;
    out.reserve(sets.size());
    for (auto s : sets) out.push_back(full_mask(n) & ~s);
    std::sort(out.begin(), out.end());
    return out;
}

class BlockSearch {
public:
    BlockSearch(int n, int k, int t, const SearchBudget& budget)
        : n_(n), k_(k), t_(t), per_block_(static_cast<std::int64_t>(binomial(k, t))), tracker_(budget) {}

    void run(int upper, std::vector<std::uint64_t> upper_blocks) {
        best_ = upper;
        best_blocks_ = std::move(upper_blocks);
        Bits uncovered(binomial(n_, t_));
        uncovered.fill();
        // Any design can be relabelled so that one of its blocks is [k].
        const std::uint64_t first = full_mask(k_);
        cover(uncovered, first);
        chosen_.push_back(first);
        recurse(uncovered);
    }

    int best() const { return best_; }
    const std::vector<std::uint64_t>& best_blocks() const { return best_blocks_; }
    bool complete() const { return !tracker_.exhausted(); }
    std::uint64_t nodes() const { return tracker_.nodes(); }

    void cover(Bits& uncovered, std::uint64_t block) const {
        for_each_submask_of_size(block, t_, [&](std::uint64_t s) { uncovered.reset(colex_rank(s)); });
    }

private:
    void recurse(const Bits& uncovered) {
        if (!tracker_.tick()) return;
        const auto count = static_cast<std::int64_t>(chosen_.size());
        if (uncovered.none()) {
            if (count < best_) {
                best_ = static_cast<int>(count);
                best_blocks_ = chosen_;
            }
            return;
        }
        const auto open = static_cast<std::int64_t>(uncovered.count());
        if (count + (open + per_block_ - 1) / per_block_ >= best_) return;

        const std::uint64_t target = colex_unrank(uncovered.find_first(), t_);
        const std::size_t mark = forbidden_.size();
        for_each_submask_of_size(full_mask(n_) & ~target, k_ - t_, [&](std::uint64_t extra) {
            if (tracker_.exhausted()) return;
            const std::uint64_t block = target | extra;
            if (std::find(forbidden_.begin(), forbidden_.end(), block) != forbidden_.end()) return;
            if (std::find(chosen_.begin(), chosen_.end(), block) != chosen_.end()) return;
            Bits next = uncovered;
            cover(next, block);
            chosen_.push_back(block);
            recurse(next);
            chosen_.pop_back();
            forbidden_.push_back(block);
        });
        forbidden_.resize(mark);
    }

    int n_, k_, t_;
    std::int64_t per_block_;
    BudgetTracker tracker_;
    int best_ = 0;
    std::vector<std::uint64_t> best_blocks_;
    std::vector<std::uint64_t> chosen_;
    std::vector<std::uint64_t> forbidden_;
};

std::vector<std::uint64_t> greedy_covering(int n, int k, int t, const BlockSearch& helper) {
    Bits uncovered(binomial(n, t));
    uncovered.fill();
    std::vector<std::uint64_t> blocks;
    while (uncovered.any()) {
        const std::uint64_t target = colex_unrank(uncovered.find_first(), t);
        std::uint64_t best_block = 0;
        std::size_t best_gain = 0;
        for_each_submask_of_size(full_mask(n) & ~target, k - t, [&](std::uint64_t extra) {
            std::size_t gain = 0;
            for_each_submask_of_size(target | extra, t,
                                     [&](std::uint64_t s) { gain += uncovered.test(colex_rank(s)) ? 1 : 0; });
            if (gain > best_gain) {
                best_gain = gain;
                best_block = target | extra;
            }
        });
        helper.cover(uncovered, best_block);
        blocks.push_back(best_block);
    }
    return blocks;
}

// Depth-first search for an m-edge r-graph on [n] with tau >= s whose edges
// appear in increasing colex order and whose first edge is [r].
class TransversalSideSearch {
public:
    TransversalSideSearch(int n, int r, int s, BudgetTracker& tracker)
        : n_(n), r_(r), s_(s), ranks_(binomial(n, r)), tracker_(tracker) {}

    bool exists(int m) {
        m_ = m;
        edges_.assign(1, full_mask(r_));
        return recurse(0, std::min(1, s_));
    }

    const std::vector<std::uint64_t>& edges() const { return edges_; }

private:
    bool recurse(std::uint64_t last_rank, int tau) {
        if (!tracker_.tick()) return false;
        const int count = static_cast<int>(edges_.size());
        if (tau + (m_ - count) < s_) return false;
        if (count == m_) return tau >= s_;
        const std::uint64_t need = static_cast<std::uint64_t>(m_ - count);
        for (std::uint64_t rank = last_rank + 1; rank + need <= ranks_; ++rank) {
            const std::uint64_t e = colex_unrank(rank, r_);
            edges_.push_back(e);
            // One more edge raises tau by at most one.
            const int child_tau = transversal_at_least(edges_, n_, tau + 1) ? tau + 1 : tau;
            if (recurse(rank, child_tau)) return true;
            edges_.pop_back();
            if (tracker_.exhausted()) return false;
        }
        return false;
    }

    int n_, r_, s_;
    std::uint64_t ranks_;
    BudgetTracker& tracker_;
    int m_ = 0;
    std::vector<std::uint64_t> edges_;
};

} // namespace

std::string_view to_string(CoveringSide side) {
    return side == CoveringSide::blocks ? "blocks" : "transversal";
}

std::int64_t steiner_lower_bound(int n, int k, int t) {
    if (!(n >= k && k >= t && t >= 0))
        throw ConstraintError("n>=k>=t", "steiner bound needs n >= k >= t >= 0");
    const auto num = binomial(n, t), den = binomial(k, t);
    return static_cast<std::int64_t>((num + den - 1) / den);
}

bool covers_all(int n, int t, const std::vector<std::uint64_t>& blocks) {
    bool ok = true;
    for_each_submask_of_size(full_mask(n), t, [&](std::uint64_t s) {
        if (!ok) return;
        ok = std::any_of(blocks.begin(), blocks.end(), [&](auto b) { return (s & ~b) == 0; });
    });
    return ok;
}

CoveringInstance covering_number_blocks(int n, int k, int t, const SearchBudget& budget) {
    require_design_params(n, k, t);
    if (k == n) return {n, k, t, Interval::exact(1), {full_mask(n)}, CoveringSide::blocks, 0};
    if (binomial(n, t) > kMaxIndexedSets)
        throw ConstraintError("instance-size", "C(n,t) too large for exact block search");

    BlockSearch search(n, k, t, budget);
    auto greedy = greedy_covering(n, k, t, search);
    search.run(static_cast<int>(greedy.size()), greedy);

    const auto lower = steiner_lower_bound(n, k, t);
    auto blocks = search.best_blocks();
    std::sort(blocks.begin(), blocks.end());
    const Interval value = search.complete() ? Interval::exact(search.best()) : Interval{lower, search.best()};
    return {n, k, t, value, std::move(blocks), CoveringSide::blocks, search.nodes()};
}

namespace {

// Drops edges (highest colex first) while tau stays >= s. The result is
// inclusion-minimal, which is usually a far better starting upper bound than
// the complete hypergraph.
Hypergraph prune_to_minimal(const Hypergraph& h, int s) {
    constexpr std::size_t kPruneLimit = 4096;
    if (h.edge_count() > kPruneLimit) return h;
    std::vector<std::uint64_t> edges(h.edges().begin(), h.edges().end());
    for (std::size_t i = edges.size(); i-- > 0;) {
        auto e = edges[i];
        edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(i));
        if (!transversal_at_least(edges, h.n(), s)) edges.insert(edges.begin() + static_cast<std::ptrdiff_t>(i), e);
    }
    return {h.n(), h.k(), std::move(edges)};
}

} // namespace

MinTransversalEdges min_edges_with_transversal(int n, int r, int s, const SearchBudget& budget,
                                               const std::optional<Hypergraph>& upper_hint) {
    if (!(r >= 1 && r <= n && n <= kMaxGround) || s < 0)
        throw ConstraintError("1<=r<=n", "need 1 <= r <= n <= 64 and s >= 0");
    if (s > n - r + 1)
        throw ConstraintError("tau<=n-r+1", "no " + std::to_string(r) + "-graph on " + std::to_string(n) +
                                                " vertices has transversal number " + std::to_string(s));
    if (s == 0) return {n, r, s, Interval::exact(0), Hypergraph(n, r), 0};
    if (binomial(n, r) > kMaxIndexedSets)
        throw ConstraintError("instance-size", "C(n,r) too large for exact edge-set search");

    // tau <= #edges; with exactly s edges they must be pairwise disjoint; the
    // complements form an (n, n-r, s-1) covering.
    std::int64_t lower = s;
    if (static_cast<std::int64_t>(s) * r > n) lower = s + 1;
    lower = std::max(lower, steiner_lower_bound(n, n - r, s - 1));

    Hypergraph upper;
    if (upper_hint) {
        if (upper_hint->n() != n) throw DomainError("upper hint lives on the wrong ground set");
        upper_hint->require_uniform(r);
        if (!transversal_at_least(*upper_hint, s)) throw DomainError("upper hint has transversal number below s");
        upper = *upper_hint;
    } else {
        std::vector<std::uint64_t> all;
        for_each_submask_of_size(full_mask(n), r, [&](std::uint64_t e) { all.push_back(e); });
        upper = Hypergraph(n, r, std::move(all));
    }
    upper = prune_to_minimal(upper, s);
    auto hi = static_cast<std::int64_t>(upper.edge_count());

    BudgetTracker tracker(budget);
    TransversalSideSearch search(n, r, s, tracker);
    for (std::int64_t m = lower; m < hi; ++m) {
        if (search.exists(static_cast<int>(m)))
            return {n, r, s, Interval::exact(m), Hypergraph(n, r, search.edges()), tracker.nodes()};
        if (tracker.exhausted()) return {n, r, s, Interval{m, hi}, upper, tracker.nodes()};
    }
    return {n, r, s, Interval::exact(hi), upper, tracker.nodes()};
}

CoveringInstance covering_number_transversal(int n, int k, int t, const SearchBudget& budget) {
    require_design_params(n, k, t);
    if (k == n) return {n, k, t, Interval::exact(1), {full_mask(n)}, CoveringSide::transversal, 0};
    auto result = min_edges_with_transversal(n, n - k, t + 1, budget);
    return {n, k, t, result.value, complements(n, result.witness.edges()), CoveringSide::transversal, result.nodes};
}

CoveringInstance covering_number(int n, int k, int t, const SearchBudget& budget) {
    require_design_params(n, k, t);
    if (k < n && n - k < k) return covering_number_transversal(n, k, t, budget);
    return covering_number_blocks(n, k, t, budget);
}

MinTransversalEdges c_star(int n, int k, const SearchBudget& budget) {
    if (k < 2 || n < 3 * k)
        throw ConstraintError("n>=3k,k>=2", "C*(n,k) is only defined for n >= 3k and k >= 2, got n=" +
                                                std::to_string(n) + ", k=" + std::to_string(k));
    std::optional<Hypergraph> hint;
    if (k >= 3 && n >= 7 * k - 5) hint = build_H_nk(n, k);
    return min_edges_with_transversal(n, k, 2 * k, budget, hint);
}

Hypergraph build_generalized_triangle(int k) {
    if (k < 2) throw ConstraintError("k>=2", "generalized triangle needs k >= 2");
    const int half_down = k / 2, half_up = (k + 1) / 2;
    const int n = k + half_up;
    const std::uint64_t v1 = full_mask(half_down);
    const std::uint64_t v2 = full_mask(half_up) << half_down;
    std::uint64_t v3 = full_mask(half_up) << (half_down + half_up);
    std::vector<std::uint64_t> edges{v1 | v2, v1 | v3};
    if (k % 2 == 1) v3 &= ~(std::uint64_t{1} << (n - 1));
    edges.push_back(v2 | v3);
    return {n, k, std::move(edges)};
}

Hypergraph build_complete_uniform(int v, int k) {
    if (k < 1 || v < k) throw ConstraintError("v>=k>=1", "complete uniform hypergraph needs v >= k >= 1");
    std::vector<std::uint64_t> edges;
    for_each_submask_of_size(full_mask(v), k, [&](std::uint64_t e) { edges.push_back(e); });
    return {v, k, std::move(edges)};
}

Hypergraph build_H_nk(int n, int k) {
    if (k < 3 || n < 7 * k - 5)
        throw ConstraintError("k>=3,n>=7k-5", "H_{n,k} needs k >= 3 and n >= 7k-5, got n=" + std::to_string(n) +
                                                  ", k=" + std::to_string(k));
    const auto triangle = build_generalized_triangle(k);
    const auto clique = build_complete_uniform(2 * k - 3, k);
    auto h = triangle.disjoint_union(triangle).disjoint_union(clique).disjoint_union(clique);
    return h.with_isolates(n - h.n());
}

} // namespace mvlab
