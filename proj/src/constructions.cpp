#include "disect/constructions.hpp"

#include <algorithm>
#include <set>

#include "disect/rng.hpp"

namespace disect {

Digraph eulerian_complete_odd(int t) {
    if (t < 3 || t % 2 == 0)
        throw GuardError("eulerian_complete_odd: t must be odd and >= 3, got " +
                         std::to_string(t));
    // Hierholzer on K_t, always leaving through the smallest unused edge.
    std::vector<std::set<int>> remaining(t);
    for (int u = 0; u < t; ++u)
        for (int v = 0; v < t; ++v)
            if (u != v) remaining[u].insert(v);

    std::vector<int> stack{0}, circuit;
    while (!stack.empty()) {
        int v = stack.back();
        if (remaining[v].empty()) {
            circuit.push_back(v);
            stack.pop_back();
        } else {
            int u = *remaining[v].begin();
            remaining[v].erase(u);
            remaining[u].erase(v);
            stack.push_back(u);
        }
    }
    std::reverse(circuit.begin(), circuit.end());

    std::vector<Arc> arcs;
    arcs.reserve(static_cast<std::size_t>(t) * (t - 1) / 2);
    for (std::size_t i = 0; i + 1 < circuit.size(); ++i)
        arcs.emplace_back(circuit[i], circuit[i + 1]);
    Digraph d(t, std::move(arcs));

    for (int v = 0; v < t; ++v)
        if (d.out_degree(v) != (t - 1) / 2 || d.in_degree(v) != (t - 1) / 2)
            throw Error("eulerian_complete_odd: unbalanced orientation");
    return d;
}

std::pair<Digraph, ExtremalLayout> extremal_family(int d, int k) {
    if (d < 1 || k < 1)
        throw GuardError("extremal_family: need d >= 1 and k >= 1");
    ExtremalLayout layout;
    layout.d = d;
    layout.k = k;
    int small = 2 * d + 1;
    int big = 2 * d + 3;
    int n = k * small + big;

    std::vector<Arc> arcs;
    Digraph small_clique = eulerian_complete_odd(small);
    for (int c = 0; c < k; ++c) {
        int offset = c * small;
        std::vector<int> members(small);
        for (int i = 0; i < small; ++i) members[i] = offset + i;
        layout.copies.push_back(members);
        for (auto [u, v] : small_clique.arcs())
            arcs.emplace_back(offset + u, offset + v);
    }

    int big_offset = k * small;
    layout.apex = big_offset;
    Digraph big_clique = eulerian_complete_odd(big);
    for (int i = 0; i < big; ++i) layout.big_clique.push_back(big_offset + i);
    for (auto [u, v] : big_clique.arcs())
        arcs.emplace_back(big_offset + u, big_offset + v);

    for (int v = 0; v < big_offset; ++v) arcs.emplace_back(v, layout.apex);

    return {Digraph(n, std::move(arcs)), std::move(layout)};
}

Digraph random_min_semidegree(int n, int d, double extra_arc_prob,
                              std::uint64_t seed) {
    if (d < 0 || n < 2 * d + 1)
        throw GuardError("random_min_semidegree: need n >= 2d+1");
    if (extra_arc_prob < 0.0 || extra_arc_prob > 1.0)
        throw GuardError("random_min_semidegree: probability out of [0,1]");

    SplitRng rng(seed, rng_domain::kGenerator, 0);
    std::set<Arc> arcs;
    std::vector<int> indeg(n, 0);

    auto add = [&](int u, int v) {
        if (arcs.insert({u, v}).second) {
            ++indeg[v];
            return true;
        }
        return false;
    };

    for (int v = 0; v < n; ++v) {
        int picked = 0;
        long long attempts = 0;
        while (picked < d) {
            int u = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
            if (u != v && add(v, u)) ++picked;
            if (++attempts > 200LL * n)
                throw Error("random_min_semidegree: out-neighbor sampling stalled");
        }
    }
    for (int v = 0; v < n; ++v) {
        long long attempts = 0;
        while (indeg[v] < d) {
            int u = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
            if (u != v) add(u, v);
            if (++attempts > 200LL * n)
                throw Error("random_min_semidegree: in-degree repair stalled");
        }
    }
    if (extra_arc_prob > 0.0) {
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (u != v && rng.next_unit() < extra_arc_prob) add(u, v);
    }

    Digraph result(n, std::vector<Arc>(arcs.begin(), arcs.end()));
    DegreeProfile profile = degree_profile(result);
    if (profile.min_semidegree() < d)
        throw Error("random_min_semidegree: postcondition failed");
    return result;
}

} // namespace disect
