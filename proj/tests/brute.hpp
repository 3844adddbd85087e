#pragma once

// Slow reference implementations used as oracles. Nothing here calls the
// library's search code: adjacency comes straight from the set definitions
// and every parameter is an exhaustive scan.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <vector>

namespace brute {

using Mask = std::uint64_t;

inline std::vector<Mask> sets_of_size(int n, int k) {
    std::vector<Mask> out;
    for (Mask m = 0; m < (Mask{1} << n); ++m)
        if (std::popcount(m) == k) out.push_back(m);
    // numeric order of masks with equal popcount is colex order
    return out;
}

struct Graph {
    std::vector<Mask> vertex;
    std::vector<std::vector<char>> adj;
    std::vector<std::vector<int>> dist;

    int size() const { return static_cast<int>(vertex.size()); }
};

inline void fill_distances(Graph& g) {
    int n = g.size();
    g.dist.assign(n, std::vector<int>(n, -1));
    for (int s = 0; s < n; ++s) {
        std::deque<int> q{s};
        g.dist[s][s] = 0;
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (int v = 0; v < n; ++v)
                if (g.adj[u][v] && g.dist[s][v] < 0) {
                    g.dist[s][v] = g.dist[s][u] + 1;
                    q.push_back(v);
                }
        }
    }
}

template <class Adj>
Graph make(std::vector<Mask> vs, Adj adjacent) {
    Graph g;
    g.vertex = std::move(vs);
    int n = g.size();
    g.adj.assign(n, std::vector<char>(n, 0));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            g.adj[a][b] = a != b && adjacent(g.vertex[a], g.vertex[b]);
    fill_distances(g);
    return g;
}

inline Graph kneser(int n, int k) {
    return make(sets_of_size(n, k), [](Mask a, Mask b) { return (a & b) == 0; });
}

inline Graph johnson(int n, int k) {
    return make(sets_of_size(n, k), [](Mask a, Mask b) { return std::popcount(a & b) == std::popcount(a) - 1; });
}

inline Graph bipartite_kneser(int n, int k) {
    auto vs = sets_of_size(n, k);
    auto big = sets_of_size(n, n - k);
    vs.insert(vs.end(), big.begin(), big.end());
    return make(vs, [](Mask a, Mask b) {
        if (std::popcount(a) == std::popcount(b)) return false;
        return (a & b) == a || (a & b) == b;
    });
}

// u and v joined by a shortest path with no internal vertex in x (bitmask over vertex ids).
inline bool visible(const Graph& g, Mask x, int u, int v) {
    if (u == v) return true;
    int n = g.size();
    std::vector<int> d(n, -1);
    std::deque<int> q{u};
    d[u] = 0;
    while (!q.empty()) {
        int a = q.front();
        q.pop_front();
        for (int b = 0; b < n; ++b) {
            if (!g.adj[a][b] || d[b] >= 0) continue;
            if (b != v && ((x >> b) & 1)) continue;
            d[b] = d[a] + 1;
            q.push_back(b);
        }
    }
    return d[v] == g.dist[u][v];
}

enum class Kind { mutual, total, dual, outer, gp };

inline bool qualifies(const Graph& g, Mask x, Kind kind) {
    int n = g.size();
    auto in = [&](int v) { return ((x >> v) & 1) != 0; };
    if (kind == Kind::gp) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) {
                    if (a == b || b == c || a == c || !in(a) || !in(b) || !in(c)) continue;
                    if (g.dist[a][c] + g.dist[c][b] == g.dist[a][b]) return false;
                }
        return true;
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            bool need = false;
            switch (kind) {
            case Kind::mutual: need = in(u) && in(v); break;
            case Kind::total: need = true; break;
            case Kind::dual: need = in(u) == in(v); break;
            case Kind::outer: need = in(u) || in(v); break;
            case Kind::gp: break;
            }
            if (need && !visible(g, x, u, v)) return false;
        }
    return true;
}

// Exhaustive maximum over all 2^|V| subsets; keep |V| small.
inline int maximum(const Graph& g, Kind kind) {
    int best = 0;
    for (Mask x = 0; x < (Mask{1} << g.size()); ++x) {
        int c = std::popcount(x);
        if (c > best && qualifies(g, x, kind)) best = c;
    }
    return best;
}

inline int transversal_number(int n, const std::vector<Mask>& edges) {
    int best = n + 1;
    for (Mask t = 0; t < (Mask{1} << n); ++t) {
        if (std::popcount(t) >= best) continue;
        bool hits = std::all_of(edges.begin(), edges.end(), [&](Mask e) { return (e & t) != 0; });
        if (hits) best = std::popcount(t);
    }
    return best;
}

} // namespace brute
