#include "mvlab/hypergraph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "mvlab/errors.hpp"

namespace mvlab {

Hypergraph::Hypergraph(int n, int k, std::vector<std::uint64_t> edges) : n_(n), k_(k), edges_(std::move(edges)) {
    validate();
}

Hypergraph::Hypergraph(int n, int k, std::span<const KSubset> edges) : n_(n), k_(k) {
    edges_.reserve(edges.size());
    for (const auto& e : edges) {
        if (e.n() != n) throw DomainError("edge " + e.to_string() + " is over [" + std::to_string(e.n()) +
                                          "], expected [" + std::to_string(n) + "]");
        edges_.push_back(e.bits());
    }
    validate();
}

void Hypergraph::validate() {
    if (n_ < 0 || n_ > kMaxGround) throw ConstraintError("ground-set", "hypergraph order must lie in [0, 64]");
    if (k_ < 0 || k_ > n_) throw ConstraintError("uniformity", "k must lie in [0, n]");
    for (auto e : edges_) {
        if (e == 0) throw DomainError("the empty set is not a hyperedge");
        if (e & ~full_mask(n_)) throw DomainError("edge has a vertex outside [" + std::to_string(n_) + "]");
        if (k_ > 0 && std::popcount(e) != k_)
            throw DomainError("edge " + KSubset(n_, e).to_string() + " breaks " + std::to_string(k_) + "-uniformity");
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) throw DomainError("duplicate hyperedge");
}

std::vector<KSubset> Hypergraph::edge_sets() const {
    std::vector<KSubset> out;
    out.reserve(edges_.size());
    for (auto e : edges_) out.emplace_back(n_, e);
    return out;
}

bool Hypergraph::has_edge(std::uint64_t e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

Hypergraph Hypergraph::with_isolates(int extra) const { return {n_ + extra, k_, edges_}; }

Hypergraph Hypergraph::disjoint_union(const Hypergraph& other) const {
    auto edges = edges_;
    for (auto e : other.edges_) edges.push_back(e << n_);
    int k = k_ == other.k_ ? k_ : 0;
    return {n_ + other.n_, k, std::move(edges)};
}

void Hypergraph::require_uniform(int k) const {
    for (auto e : edges_)
        if (std::popcount(e) != k) throw DomainError("hypergraph is not " + std::to_string(k) + "-uniform");
}

void Hypergraph::write(std::ostream& out) const {
    out << n_ << ' ' << k_ << '\n';
    for (auto e : edges_) {
        bool first = true;
        for (auto b = e; b; b &= b - 1) {
            if (!first) out << ' ';
            out << std::countr_zero(b) + 1;
            first = false;
        }
        out << '\n';
    }
}

std::string Hypergraph::to_text() const {
    std::ostringstream s;
    write(s);
    return s.str();
}

Hypergraph Hypergraph::read(std::istream& in) {
    std::string line;
    int n = -1, k = -1;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream header(line);
        if (!(header >> n >> k)) throw ConstraintError("hypergraph-format", "header must be 'n k'");
        break;
    }
    if (n < 0) throw ConstraintError("hypergraph-format", "missing 'n k' header");
    std::vector<std::uint64_t> edges;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream row(line);
        std::vector<int> vs;
        int v = 0;
        while (row >> v) vs.push_back(v);
        if (!row.eof()) throw ConstraintError("hypergraph-format", "non-integer token in edge line '" + line + "'");
        if (!std::is_sorted(vs.begin(), vs.end()) || std::adjacent_find(vs.begin(), vs.end()) != vs.end())
            throw ConstraintError("hypergraph-format", "edge vertices must be strictly ascending: '" + line + "'");
        edges.push_back(KSubset::from_elements(n, vs).bits());
    }
    return {n, k, std::move(edges)};
}

Hypergraph Hypergraph::parse(const std::string& text) {
    std::istringstream s(text);
    return read(s);
}

Hypergraph underlying_hypergraph(const VertexSet& s) {
    const auto& g = s.graph();
    std::vector<std::uint64_t> edges;
    s.mask().for_each([&](std::size_t v) { edges.push_back(g.vertex(static_cast<VertexId>(v)).bits()); });
    int k = g.kind() == FamilyKind::bipartite_kneser ? 0 : g.k();
    if (k == 0 && !edges.empty()) {
        bool same = std::all_of(edges.begin(), edges.end(),
                                [&](auto e) { return std::popcount(e) == std::popcount(edges.front()); });
        if (same) k = std::popcount(edges.front());
    }
    return {g.n(), k, std::move(edges)};
}

bool is_transversal(const Hypergraph& h, std::uint64_t t) {
    return std::all_of(h.edges().begin(), h.edges().end(), [&](auto e) { return (e & t) != 0; });
}

namespace {

class TransversalSearch {
public:
    TransversalSearch(int best, std::uint64_t best_mask, bool stop_on_improve, const SearchBudget& budget)
        : best_(best), best_mask_(best_mask), stop_on_improve_(stop_on_improve), tracker_(budget) {}

    void run(const std::vector<std::uint64_t>& edges) { recurse(edges, 0, 0, 0); }

    int best() const { return best_; }
    std::uint64_t best_mask() const { return best_mask_; }
    bool complete() const { return !tracker_.exhausted(); }
    std::uint64_t nodes() const { return tracker_.nodes(); }

private:
    void recurse(const std::vector<std::uint64_t>& uncovered, std::uint64_t chosen, int count, std::uint64_t forbidden) {
        if (done_ || !tracker_.tick()) return;
        if (uncovered.empty()) {
            if (count < best_) {
                best_ = count;
                best_mask_ = chosen;
                if (stop_on_improve_) done_ = true;
            }
            return;
        }
        int packing = 0;
        std::uint64_t used = 0;
        std::uint64_t branch_edge = 0;
        int branch_width = 65;
        for (auto e : uncovered) {
            auto allowed = e & ~forbidden;
            if (allowed == 0) return;
            if ((allowed & used) == 0) {
                used |= allowed;
                ++packing;
            }
            if (std::popcount(allowed) < branch_width) {
                branch_width = std::popcount(allowed);
                branch_edge = allowed;
            }
        }
        if (count + packing >= best_) return;

        std::vector<std::uint64_t> rest;
        rest.reserve(uncovered.size());
        for (auto b = branch_edge; b; b &= b - 1) {
            auto v = b & (~b + 1);
            rest.clear();
            for (auto e : uncovered)
                if ((e & v) == 0) rest.push_back(e);
            recurse(rest, chosen | v, count + 1, forbidden);
            if (done_) return;
            forbidden |= v;
        }
    }

    int best_;
    std::uint64_t best_mask_;
    bool stop_on_improve_;
    bool done_ = false;
    BudgetTracker tracker_;
};

std::uint64_t greedy_transversal(std::span<const std::uint64_t> edges, int n) {
    std::vector<std::uint64_t> uncovered(edges.begin(), edges.end());
    std::uint64_t t = 0;
    while (!uncovered.empty()) {
        int best_v = 0, best_deg = -1;
        for (int v = 0; v < n; ++v) {
            int deg = 0;
            for (auto e : uncovered) deg += static_cast<int>((e >> v) & 1U);
            if (deg > best_deg) {
                best_deg = deg;
                best_v = v;
            }
        }
        t |= std::uint64_t{1} << best_v;
        std::erase_if(uncovered, [&](auto e) { return (e >> best_v) & 1U; });
    }
    return t;
}

} // namespace

TransversalCertificate transversal_number(const Hypergraph& h, const SearchBudget& budget) {
    auto greedy = greedy_transversal(h.edges(), h.n());
    TransversalSearch search(std::popcount(greedy), greedy, false, budget);
    search.run({h.edges().begin(), h.edges().end()});
    return {search.best(), KSubset(h.n(), search.best_mask()), search.complete(), search.nodes()};
}

bool transversal_at_least(std::span<const std::uint64_t> edges, int n, int threshold) {
    if (threshold <= 0) return true;
    auto greedy = greedy_transversal(edges, n);
    if (std::popcount(greedy) < threshold) return false;
    TransversalSearch search(threshold, 0, true, SearchBudget::unlimited());
    search.run({edges.begin(), edges.end()});
    return search.best() >= threshold;
}

bool transversal_at_least(const Hypergraph& h, int threshold) {
    return transversal_at_least(h.edges(), h.n(), threshold);
}

} // namespace mvlab
