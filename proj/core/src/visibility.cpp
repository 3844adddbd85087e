#include "mvlab/visibility.hpp"

#include <atomic>
#include <thread>

#include "mvlab/errors.hpp"
#include "mvlab/hypergraph.hpp"

namespace mvlab {

std::string_view to_string(VisibilityVariant v) {
    switch (v) {
    case VisibilityVariant::mutual: return "mutual";
    case VisibilityVariant::total: return "total";
    case VisibilityVariant::dual: return "dual";
    case VisibilityVariant::outer: return "outer";
    case VisibilityVariant::general_position: return "general-position";
    }
    return "?";
}

std::optional<VisibilityVariant> parse_visibility_variant(std::string_view s) {
    if (s == "mutual" || s == "mu") return VisibilityVariant::mutual;
    if (s == "total" || s == "mu-total") return VisibilityVariant::total;
    if (s == "dual" || s == "mu-dual") return VisibilityVariant::dual;
    if (s == "outer" || s == "mu-outer") return VisibilityVariant::outer;
    if (s == "general-position" || s == "gp") return VisibilityVariant::general_position;
    return std::nullopt;
}

bool is_hereditary(VisibilityVariant v) {
    return v == VisibilityVariant::mutual || v == VisibilityVariant::total || v == VisibilityVariant::general_position;
}

VisibilityOracle::VisibilityOracle(const FamilyGraph& graph) : table_(std::make_shared<DistanceTable>(graph)) {}

bool VisibilityOracle::is_x_visible(const Bits& x, VertexId u, VertexId v) const {
    const auto& t = *table_;
    if (u == v) return true;
    const int d = t.dist(u, v);
    if (d <= 1) return true;
    if (d == 2) return t.neighbors(u).intersects_minus(t.neighbors(v), x);

    // Walk the shortest-path layers from u, keeping only vertices outside x
    // that are reachable from the previous surviving layer.
    Bits frontier(t.size());
    frontier.set(u);
    for (int i = 1; i < d; ++i) {
        Bits layer = t.sphere(u, i) & t.sphere(v, d - i);
        layer.and_not(x);
        Bits next(t.size());
        layer.for_each([&](std::size_t w) {
            if (t.neighbors(static_cast<VertexId>(w)).intersects(frontier)) next.set(w);
        });
        if (next.none()) return false;
        frontier = std::move(next);
    }
    return true;
}

bool VisibilityOracle::is_x_visible(const VertexSet& x, const KSubset& u, const KSubset& v) const {
    if (!(x.graph() == graph())) throw DomainError("vertex set belongs to " + x.graph().spec());
    return is_x_visible(x.mask(), graph().index_of(u), graph().index_of(v));
}

bool VisibilityOracle::general_position_triple_ok(VertexId a, VertexId b, VertexId c) const {
    const auto& t = *table_;
    const int ab = t.dist(a, b), bc = t.dist(b, c), ac = t.dist(a, c);
    return ab + bc > ac && ab + ac > bc && ac + bc > ab;
}

std::optional<Violation> VisibilityOracle::find_violation(const Bits& x, VisibilityVariant variant) const {
    const auto n = static_cast<VertexId>(size());
    if (variant == VisibilityVariant::general_position) {
        auto members = x.indices();
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j)
                for (std::size_t l = j + 1; l < members.size(); ++l) {
                    auto a = static_cast<VertexId>(members[i]);
                    auto b = static_cast<VertexId>(members[j]);
                    auto c = static_cast<VertexId>(members[l]);
                    if (!general_position_triple_ok(a, b, c)) return Violation{{a, b, c}};
                }
        return std::nullopt;
    }
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = u + 1; v < n; ++v) {
            const bool in_u = x.test(u), in_v = x.test(v);
            bool obligated = false;
            switch (variant) {
            case VisibilityVariant::mutual: obligated = in_u && in_v; break;
            case VisibilityVariant::total: obligated = true; break;
            case VisibilityVariant::dual: obligated = in_u == in_v; break;
            case VisibilityVariant::outer: obligated = in_u || in_v; break;
            case VisibilityVariant::general_position: break;
            }
            if (obligated && !is_x_visible(x, u, v)) return Violation{{u, v}};
        }
    }
    return std::nullopt;
}

std::optional<Violation> VisibilityOracle::find_violation(const VertexSet& x, VisibilityVariant variant) const {
    if (!(x.graph() == graph())) throw DomainError("vertex set belongs to " + x.graph().spec());
    return find_violation(x.mask(), variant);
}

bool VisibilityOracle::can_extend(const Bits& x, VertexId v, VisibilityVariant h) const {
    const auto& t = *table_;
    Bits xv = x;
    xv.set(v);
    switch (h) {
    case VisibilityVariant::mutual: {
        auto members = x.indices();
        for (auto a : members)
            if (!is_x_visible(xv, v, static_cast<VertexId>(a))) return false;
        // v may now block pairs of x whose shortest paths run through it.
        for (std::size_t i = 0; i < members.size(); ++i) {
            auto a = static_cast<VertexId>(members[i]);
            const int av = t.dist(a, v);
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                auto b = static_cast<VertexId>(members[j]);
                const int ab = t.dist(a, b);
                if (ab >= 2 && av + t.dist(v, b) == ab && !is_x_visible(xv, a, b)) return false;
            }
        }
        return true;
    }
    case VisibilityVariant::total: {
        const auto n = static_cast<VertexId>(t.size());
        for (VertexId a = 0; a < n; ++a) {
            if (a == v) continue;
            const int av = t.dist(a, v);
            for (int j = 1; av + j <= t.diameter(); ++j) {
                Bits through = t.sphere(v, j) & t.sphere(a, av + j);
                bool ok = true;
                through.for_each([&](std::size_t b) {
                    if (ok && b > a && !is_x_visible(xv, a, static_cast<VertexId>(b))) ok = false;
                });
                if (!ok) return false;
            }
        }
        return true;
    }
    case VisibilityVariant::general_position: {
        auto members = x.indices();
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j)
                if (!general_position_triple_ok(static_cast<VertexId>(members[i]), static_cast<VertexId>(members[j]), v))
                    return false;
        return true;
    }
    case VisibilityVariant::dual:
    case VisibilityVariant::outer: break;
    }
    throw DomainError("incremental extension is only defined for hereditary variants");
}

namespace {

// One subtree of the include/exclude search. Vertices are decided from the
// highest id down with "exclude" tried first, so the first set of a given
// size that the walk reaches is the colex-least one.
class SubtreeSearch {
public:
    SubtreeSearch(const VisibilityOracle& oracle, VisibilityVariant variant, BudgetTracker& tracker, int seed_best,
                  int prefix_depth, std::uint32_t prefix)
        : oracle_(oracle),
          variant_(variant),
          filter_(is_hereditary(variant) ? variant : VisibilityVariant::mutual),
          tracker_(tracker),
          n_(static_cast<int>(oracle.size())),
          prefix_depth_(prefix_depth),
          prefix_(prefix),
          best_(seed_best),
          x_(oracle.size()) {}

    void run() { dfs(n_ - 1, 0); }

    bool found() const { return found_; }
    int best() const { return best_; }
    const Bits& best_set() const { return best_set_; }

private:
    void dfs(int i, int size) {
        if (!tracker_.tick()) return;
        if (size + i + 1 <= best_) return;
        if (i < 0) {
            if (!is_hereditary(variant_) && oracle_.find_violation(x_, variant_)) return;
            best_ = size;
            best_set_ = x_;
            found_ = true;
            return;
        }
        const int depth = n_ - 1 - i;
        const auto v = static_cast<VertexId>(i);
        if (depth < prefix_depth_) {
            const bool include = (prefix_ >> (prefix_depth_ - 1 - depth)) & 1U;
            if (!include) {
                dfs(i - 1, size);
            } else if (oracle_.can_extend(x_, v, filter_)) {
                x_.set(v);
                dfs(i - 1, size + 1);
                x_.reset(v);
            }
            return;
        }
        dfs(i - 1, size);
        if (oracle_.can_extend(x_, v, filter_)) {
            x_.set(v);
            dfs(i - 1, size + 1);
            x_.reset(v);
        }
    }

    const VisibilityOracle& oracle_;
    VisibilityVariant variant_;
    VisibilityVariant filter_;
    BudgetTracker& tracker_;
    int n_;
    int prefix_depth_;
    std::uint32_t prefix_;
    int best_;
    bool found_ = false;
    Bits x_;
    Bits best_set_;
};

Bits greedy_set(const VisibilityOracle& oracle, VisibilityVariant hereditary) {
    Bits x(oracle.size());
    for (std::size_t v = 0; v < oracle.size(); ++v)
        if (oracle.can_extend(x, static_cast<VertexId>(v), hereditary)) x.set(v);
    return x;
}

} // namespace

VisibilityCertificate VisibilityOracle::max_visibility_number(VisibilityVariant variant,
                                                              const SearchBudget& budget) const {
    // Every total set is also dual and outer, so greedy total seeds those two.
    const auto seed_variant = is_hereditary(variant) ? variant : VisibilityVariant::total;
    const Bits seed = greedy_set(*this, seed_variant);
    const int seed_best = static_cast<int>(seed.count()) - 1;

    const int n = static_cast<int>(size());
    const int prefix_depth = n >= 16 ? 4 : 0;
    const std::uint32_t tasks = 1U << prefix_depth;

    // Subtrees share only the seed bound, which keeps the node count and the
    // chosen witness independent of the worker schedule.
    BudgetTracker tracker(budget);
    std::vector<std::unique_ptr<SubtreeSearch>> searches(tasks);
    std::atomic<std::uint32_t> next{0};
    auto worker = [&] {
        for (auto t = next.fetch_add(1); t < tasks; t = next.fetch_add(1)) {
            searches[t] = std::make_unique<SubtreeSearch>(*this, variant, tracker, seed_best, prefix_depth, t);
            searches[t]->run();
        }
    };
    const unsigned workers = std::min<unsigned>(worker_count(), tasks);
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    }

    int best = -1;
    Bits witness = seed;
    for (const auto& s : searches) {
        if (s->found() && s->best() > best) {
            best = s->best();
            witness = s->best_set();
        }
    }
    const bool complete = !tracker.exhausted();
    if (best < 0) witness = seed;

    VisibilityCertificate cert{variant, static_cast<int>(witness.count()), VertexSet(graph(), witness), std::nullopt,
                               complete ? SearchStatus::exact : SearchStatus::incomplete, tracker.nodes()};
    if (complete) {
        auto outside = witness;
        outside.fill();
        outside.and_not(witness);
        auto first = outside.find_first();
        if (first < outside.size()) {
            Bits extended = witness;
            extended.set(first);
            cert.blocking = find_violation(extended, variant);
        }
    }
    return cert;
}

bool kneser_total_mv_check_fast(int n, int k, const VertexSet& x) {
    const auto& g = x.graph();
    if (g.kind() != FamilyKind::kneser || g.n() != n || g.k() != k)
        throw DomainError("vertex set is not over KG(" + std::to_string(n) + "," + std::to_string(k) + ")");
    if (n < 3 * k - 1)
        throw PreconditionError("n>=3k-1", "the transversal characterization needs n >= 3k-1, got n=" +
                                               std::to_string(n) + ", k=" + std::to_string(k));
    return transversal_at_least(underlying_hypergraph(x.complement()), 2 * k);
}

} // namespace mvlab
