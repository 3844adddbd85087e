#include "mvlab/turan.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <vector>

#include "mvlab/errors.hpp"

namespace mvlab {

namespace {

void require_pattern_k(int k) {
    if (k < 2) throw ConstraintError("k>=2", "suspension patterns need k >= 2, got k=" + std::to_string(k));
    if (k + 2 > kMaxGround) throw ConstraintError("ground-set", "pattern has more than 64 vertices");
}

Pattern make_pattern(PatternKind kind, int k, const std::vector<std::pair<int, int>>& z_pairs) {
    require_pattern_k(k);
    Pattern p;
    p.kind = kind;
    p.k = k;
    auto y = full_mask(k - 2);
    for (auto [i, j] : z_pairs) p.template_edges.push_back(y | (std::uint64_t{1} << (k - 2 + i)) | (std::uint64_t{1} << (k - 2 + j)));
    std::sort(p.template_edges.begin(), p.template_edges.end());
    return p;
}

// Link graph of the apex Y inside an edge predicate: N(x) is the set of w
// outside Y + x with Y + {x, w} an edge.
template <class Has>
std::uint64_t link_neighbors(int n, std::uint64_t y, int x, Has&& has) {
    std::uint64_t out = 0;
    auto xb = std::uint64_t{1} << x;
    for (int w = 0; w < n; ++w) {
        auto wb = std::uint64_t{1} << w;
        if (w == x || (y & wb)) continue;
        if (has(y | xb | wb)) out |= wb;
    }
    return out;
}

// Does the edge-set (via `has`, which must already include e) contain the
// pattern using the edge e?
template <class Has>
bool pattern_through(int n, PatternKind kind, std::uint64_t e, Has&& has) {
    for (auto pa = e; pa; pa &= pa - 1) {
        int a = std::countr_zero(pa);
        for (auto pb = pa & (pa - 1); pb; pb &= pb - 1) {
            int b = std::countr_zero(pb);
            auto ab = (std::uint64_t{1} << a) | (std::uint64_t{1} << b);
            auto y = e & ~ab;
            auto na = link_neighbors(n, y, a, has);
            auto nb = link_neighbors(n, y, b, has);
            if (kind == PatternKind::c4_suspension) {
                // cycle a-b-c-d-a
                auto from_a = na & ~(std::uint64_t{1} << b);
                for (auto cs = nb & ~(std::uint64_t{1} << a); cs; cs &= cs - 1) {
                    int c = std::countr_zero(cs);
                    auto cb = std::uint64_t{1} << c;
                    if (link_neighbors(n, y, c, has) & from_a & ~cb) return true;
                }
            } else {
                auto common = na & nb;
                for (auto cs = common; cs; cs &= cs - 1) {
                    int c = std::countr_zero(cs);
                    if (link_neighbors(n, y, c, has) & common) return true;
                }
            }
        }
    }
    return false;
}

std::int64_t link_edge_bound(PatternKind kind, int m) {
    if (m < 4) return static_cast<std::int64_t>(binomial(m, 2));
    if (kind == PatternKind::k4_suspension) return turan_k4_closed(m);
    // Kovari-Sos-Turan for C4-free graphs
    return static_cast<std::int64_t>(std::floor(m / 4.0 * (1.0 + std::sqrt(4.0 * m - 3.0))));
}

// Double counting over apex sets: every edge holds C(k,2) apex/pair splits and
// each link graph is pattern-free.
std::int64_t averaging_upper_bound(int n, int k, PatternKind kind) {
    auto total = static_cast<std::int64_t>(binomial(n, k));
    auto per_link = link_edge_bound(kind, n - k + 2);
    auto bound = static_cast<std::int64_t>(binomial(n, k - 2)) * per_link / static_cast<std::int64_t>(binomial(k, 2));
    return std::min(total, bound);
}

class TuranSearch {
public:
    TuranSearch(int n, int k, PatternKind kind, const SearchBudget& budget)
        : n_(n), k_(k), kind_(kind), tracker_(budget) {
        std::uint64_t m = binomial(n, k);
        masks_.reserve(m);
        for_each_submask_of_size(full_mask(n), k, [&](std::uint64_t mask) { masks_.push_back(mask); });
        in_.assign(m, 0);
        blocked_.assign(m, 0);
    }

    void run() {
        seed_greedy();
        recurse(static_cast<std::int64_t>(masks_.size()) - 1, 0, 0);
    }

    bool complete() const { return !tracker_.exhausted(); }
    std::uint64_t nodes() const { return tracker_.nodes(); }
    // Best set found; the greedy seed when the search never beat it.
    const std::vector<std::uint64_t>& witness() const { return improved_ ? best_edges_ : greedy_edges_; }

private:
    bool has(std::uint64_t mask) const { return in_[colex_rank(mask)] != 0; }

    bool would_create(std::size_t r) {
        in_[r] = 1;
        bool hit = pattern_through(n_, kind_, masks_[r], [&](std::uint64_t m) { return has(m); });
        in_[r] = 0;
        return hit;
    }

    void seed_greedy() {
        std::vector<std::uint64_t> edges;
        for (std::size_t r = 0; r < masks_.size(); ++r) {
            if (would_create(r)) continue;
            in_[r] = 1;
            edges.push_back(masks_[r]);
        }
        std::fill(in_.begin(), in_.end(), 0);
        best_ = static_cast<std::int64_t>(edges.size()) - 1;
        greedy_edges_ = std::move(edges);
    }

    void recurse(std::int64_t i, std::int64_t count, std::int64_t blocked_below) {
        if (!tracker_.tick()) return;
        if (i < 0) {
            if (count > best_) {
                best_ = count;
                improved_ = true;
                best_edges_.clear();
                for (std::size_t r = 0; r < masks_.size(); ++r)
                    if (in_[r]) best_edges_.push_back(masks_[r]);
            }
            return;
        }
        if (count + (i + 1) - blocked_below <= best_) return;
        auto ri = static_cast<std::size_t>(i);
        if (blocked_[ri]) {
            recurse(i - 1, count, blocked_below - 1);
            return;
        }
        recurse(i - 1, count, blocked_below);
        if (tracker_.exhausted()) return;

        in_[ri] = 1;
        auto mark = newly_blocked_.size();
        auto e = masks_[ri];
        for (std::size_t j = 0; j < ri; ++j) {
            if (blocked_[j] || std::popcount(masks_[j] & e) < k_ - 2) continue;
            if (would_create(j)) {
                blocked_[j] = 1;
                newly_blocked_.push_back(j);
            }
        }
        auto added = static_cast<std::int64_t>(newly_blocked_.size() - mark);
        recurse(i - 1, count + 1, blocked_below + added);
        for (auto j = newly_blocked_.size(); j > mark; --j) blocked_[newly_blocked_[j - 1]] = 0;
        newly_blocked_.resize(mark);
        in_[ri] = 0;
    }

    int n_, k_;
    PatternKind kind_;
    BudgetTracker tracker_;
    std::vector<std::uint64_t> masks_;
    std::vector<char> in_;
    std::vector<char> blocked_;
    std::vector<std::size_t> newly_blocked_;
    std::vector<std::uint64_t> best_edges_;
    std::vector<std::uint64_t> greedy_edges_;
    std::int64_t best_ = -1;
    bool improved_ = false;
};

} // namespace

std::string Pattern::spec() const {
    return std::string(kind == PatternKind::c4_suspension ? "c4sus" : "k4sus") + ":k=" + std::to_string(k);
}

Pattern Pattern::parse(std::string_view spec) {
    auto fail = [&](const std::string& why) -> Pattern {
        throw ConstraintError("pattern-spec", "cannot parse '" + std::string(spec) + "': " + why);
    };
    auto colon = spec.find(':');
    auto name = spec.substr(0, colon);
    PatternKind kind;
    if (name == "c4sus" || name == "c4") kind = PatternKind::c4_suspension;
    else if (name == "k4sus" || name == "k4") kind = PatternKind::k4_suspension;
    else return fail("expected c4sus or k4sus");
    int k = 2;
    if (colon != std::string_view::npos) {
        auto rest = spec.substr(colon + 1);
        if (rest.substr(0, 2) != "k=") return fail("expected k=<k>");
        auto val = rest.substr(2);
        auto [p, ec] = std::from_chars(val.data(), val.data() + val.size(), k);
        if (ec != std::errc{} || p != val.data() + val.size()) return fail("bad integer '" + std::string(val) + "'");
    }
    return kind == PatternKind::c4_suspension ? build_c4_suspension(k) : build_k4_suspension(k);
}

Hypergraph Pattern::as_hypergraph() const { return {vertex_count(), k, template_edges}; }

Pattern build_c4_suspension(int k) {
    return make_pattern(PatternKind::c4_suspension, k, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
}

Pattern build_k4_suspension(int k) {
    return make_pattern(PatternKind::k4_suspension, k, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

std::optional<Embedding> contains_pattern(const Hypergraph& h, const Pattern& p) {
    if (h.k() != p.k) {
        throw DomainError("pattern " + p.spec() + " needs a " + std::to_string(p.k) + "-uniform host, got k=" +
                          std::to_string(h.k()));
    }
    int n = h.n();
    auto has = [&](std::uint64_t m) { return h.has_edge(m); };
    std::optional<Embedding> found;
    for_each_submask_of_size(full_mask(n), p.k - 2, [&](std::uint64_t y) {
        if (found) return;
        std::vector<std::uint64_t> nb(static_cast<std::size_t>(n), 0);
        for (int x = 0; x < n; ++x)
            if (!((y >> x) & 1U)) nb[static_cast<std::size_t>(x)] = link_neighbors(n, y, x, has);
        for (int a = 0; a < n && !found; ++a) {
            for (int b = a + 1; b < n && !found; ++b) {
                if ((y >> a) & 1U || (y >> b) & 1U) continue;
                if (p.kind == PatternKind::c4_suspension) {
                    auto common = nb[static_cast<std::size_t>(a)] & nb[static_cast<std::size_t>(b)];
                    if (std::popcount(common) >= 2) {
                        int c = std::countr_zero(common);
                        int d = std::countr_zero(common & (common - 1));
                        found = Embedding{KSubset(n, y), {a + 1, c + 1, b + 1, d + 1}};
                    }
                } else {
                    if (!((nb[static_cast<std::size_t>(a)] >> b) & 1U)) continue;
                    auto common = nb[static_cast<std::size_t>(a)] & nb[static_cast<std::size_t>(b)];
                    for (auto cs = common; cs; cs &= cs - 1) {
                        int c = std::countr_zero(cs);
                        auto cd = nb[static_cast<std::size_t>(c)] & common;
                        if (cd) {
                            found = Embedding{KSubset(n, y), {a + 1, b + 1, c + 1, std::countr_zero(cd) + 1}};
                            break;
                        }
                    }
                }
            }
        }
    });
    return found;
}

TuranResult ex_uniform(int n, int k, const Pattern& p, const SearchBudget& budget) {
    if (p.k != k) throw DomainError("pattern " + p.spec() + " is not " + std::to_string(k) + "-uniform");
    if (n < 0 || n > kMaxGround) throw ConstraintError("ground-set", "n must lie in [0, 64]");
    if (binomial(n, k) > (1U << 16)) {
        throw ConstraintError("search-size", "C(" + std::to_string(n) + "," + std::to_string(k) +
                                                 ") k-sets is beyond the exact Turán search");
    }
    TuranSearch search(n, k, p.kind, budget);
    search.run();
    TuranResult r;
    r.n = n;
    r.k = k;
    r.pattern = p;
    r.nodes = search.nodes();
    r.extremal_witness = Hypergraph(n, k, search.witness());
    auto lo = static_cast<std::int64_t>(r.extremal_witness.edge_count());
    if (search.complete()) {
        r.value = Interval::exact(lo);
    } else {
        r.value = {lo, std::max(lo, averaging_upper_bound(n, k, p.kind))};
        r.status = TuranStatus::interval;
        if (p.kind == PatternKind::c4_suspension) r.mubayi_guide = mubayi_asymptote(n, k);
    }
    return r;
}

std::int64_t turan_k4_closed(int n) {
    if (n < 1) throw ConstraintError("n>=1", "got n=" + std::to_string(n));
    return static_cast<std::int64_t>(n) * n / 3;
}

double mubayi_asymptote(int n, int k) {
    if (n < 1) throw ConstraintError("n>=1", "got n=" + std::to_string(n));
    if (k < 2) throw ConstraintError("k>=2", "got k=" + std::to_string(k));
    return std::pow(static_cast<double>(n), k - 0.5) / std::tgamma(k + 1.0);
}

} // namespace mvlab
