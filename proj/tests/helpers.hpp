#pragma once

#include <algorithm>
#include <vector>

#include "disect/digraph.hpp"
#include "disect/rng.hpp"

namespace disect::testutil {

inline UndirectedGraph path_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return UndirectedGraph(n, std::move(edges));
}

inline UndirectedGraph cycle_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return UndirectedGraph(n, std::move(edges));
}

inline UndirectedGraph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return UndirectedGraph(n, std::move(edges));
}

inline Digraph directed_cycle(int n) {
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i) arcs.emplace_back(i, (i + 1) % n);
    return Digraph(n, std::move(arcs));
}

/// Erdos-Renyi style G(n, p), deterministic per seed.
inline UndirectedGraph random_graph(int n, double p, std::uint64_t seed) {
    SplitRng rng(seed, rng_domain::kGenerator, 77);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.next_unit() < p) edges.emplace_back(u, v);
    return UndirectedGraph(n, std::move(edges));
}

/// Random digraph: every ordered pair independently with probability p.
inline Digraph random_digraph(int n, double p, std::uint64_t seed) {
    SplitRng rng(seed, rng_domain::kGenerator, 78);
    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && rng.next_unit() < p) arcs.emplace_back(u, v);
    return Digraph(n, std::move(arcs));
}

/// Random tournament: one arc per unordered pair, direction by coin.
inline Digraph random_tournament(int n, std::uint64_t seed) {
    SplitRng rng(seed, rng_domain::kGenerator, 79);
    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (rng.next_bit())
                arcs.emplace_back(u, v);
            else
                arcs.emplace_back(v, u);
        }
    return Digraph(n, std::move(arcs));
}

/// Reference maximum-matching size: branch on the lowest uncovered vertex.
/// Independent of the blossom implementation.
inline int brute_matching_size(const UndirectedGraph& g) {
    std::vector<char> used(g.n(), 0);
    auto rec = [&](auto&& self, int v) -> int {
        while (v < g.n() && used[v]) ++v;
        if (v >= g.n()) return 0;
        used[v] = 1;
        int best = self(self, v + 1);  // leave v uncovered
        for (int u : g.neighbors(v)) {
            if (used[u]) continue;
            used[u] = 1;
            best = std::max(best, 1 + self(self, v + 1));
            used[u] = 0;
        }
        used[v] = 0;
        return best;
    };
    return rec(rec, 0);
}

/// Connected random graph for tight-component tests: rejection sampling
/// over G(n, p) with rising p.
UndirectedGraph random_connected_graph(int n, std::uint64_t seed);

} // namespace disect::testutil
