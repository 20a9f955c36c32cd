#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "disect/digraph.hpp"

namespace disect {

/// Placement metadata for the worst-case family: k cliques on 2d+1
/// vertices, one clique on 2d+3 vertices containing the apex, and one
/// arc from every small-clique vertex to the apex.
struct ExtremalLayout {
    int d = 0;
    int k = 0;
    int apex = -1;
    std::vector<std::vector<int>> copies;
    std::vector<int> big_clique;
};

/// Orientation of K_t along an Euler circuit (Hierholzer, smallest
/// available neighbor first): every vertex gets out = in = (t-1)/2 and
/// there are no antiparallel pairs. t must be odd and >= 3.
Digraph eulerian_complete_odd(int t);

/// The tightness family: minimum outdegree d+1, minimum semidegree d,
/// n = k(2d+1) + 2d+3 and m = k(d+1)(2d+1) + (d+1)(2d+3).
std::pair<Digraph, ExtremalLayout> extremal_family(int d, int k);

/// Random digraph with every out- and in-degree >= d: d random
/// out-neighbors per vertex, greedy in-degree repair, then independent
/// extra arcs with probability extra_arc_prob. Deterministic per seed.
Digraph random_min_semidegree(int n, int d, double extra_arc_prob,
                              std::uint64_t seed);

} // namespace disect
