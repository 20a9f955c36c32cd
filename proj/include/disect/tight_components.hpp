#pragma once

#include <vector>

#include "disect/digraph.hpp"

namespace disect {

/// Connected components of the underlying graph of a digraph, classified
/// by tightness and by whether their digraph lift contains an
/// antiparallel arc pair. tau = tau_star - sigma always holds.
struct ComponentReport {
    std::vector<std::vector<int>> components;  // sorted vertex lists
    std::vector<bool> is_tight;
    std::vector<bool> has_antiparallel;
    std::vector<bool> is_essential;
    long long tau_star = 0;  // tight components
    long long sigma = 0;     // tight components with an antiparallel pair
    long long tau = 0;       // essential components
};

/// True iff G-v has a perfect matching for every vertex v.
/// G must be connected.
bool is_factor_critical(const UndirectedGraph& g);

/// Tight test: factor-critical, and no perfect matching of any G-v uses an
/// edge with exactly one end adjacent to v. The second condition is checked
/// through the equivalent form "G-{v,x,y} has no perfect matching for every
/// edge {x,y} with exactly one end adjacent to v". G must be connected.
bool is_tight(const UndirectedGraph& g);

ComponentReport essential_components(const Digraph& d);

/// Connected components of an undirected graph (sorted vertex lists,
/// ordered by smallest member).
std::vector<std::vector<int>> connected_components(const UndirectedGraph& g);

} // namespace disect
