#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "disect/errors.hpp"

namespace disect {

using Arc = std::pair<int, int>;   // (tail, head): directed tail -> head
using Edge = std::pair<int, int>;  // unordered, stored with first < second

/// Loop-free directed graph on vertices 0..n-1. Antiparallel pairs
/// (u,v) and (v,u) are allowed, duplicate arcs are not. Immutable after
/// construction; adjacency is kept in both directions.
class Digraph {
public:
    Digraph() = default;
    Digraph(int n, std::vector<Arc> arcs);

    int n() const { return n_; }
    long long m() const { return static_cast<long long>(arcs_.size()); }

    /// Arcs sorted lexicographically.
    const std::vector<Arc>& arcs() const { return arcs_; }

    const std::vector<int>& out_neighbors(int v) const { return out_[v]; }
    const std::vector<int>& in_neighbors(int v) const { return in_[v]; }

    int out_degree(int v) const { return static_cast<int>(out_[v].size()); }
    int in_degree(int v) const { return static_cast<int>(in_[v].size()); }
    int degree(int v) const { return out_degree(v) + in_degree(v); }

    bool has_arc(int u, int v) const {
        return arc_set_.count(key(u, v)) != 0;
    }
    bool has_antiparallel_pair(int u, int v) const {
        return has_arc(u, v) && has_arc(v, u);
    }

    bool operator==(const Digraph& other) const {
        return n_ == other.n_ && arcs_ == other.arcs_;
    }

private:
    static std::uint64_t key(int u, int v) {
        return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
    }

    int n_ = 0;
    std::vector<Arc> arcs_;
    std::vector<std::vector<int>> out_, in_;
    std::unordered_set<std::uint64_t> arc_set_;
};

/// Simple undirected graph on vertices 0..n-1, edges stored as (min,max).
class UndirectedGraph {
public:
    UndirectedGraph() = default;
    UndirectedGraph(int n, std::vector<Edge> edges);

    int n() const { return n_; }
    long long edge_count() const { return static_cast<long long>(edges_.size()); }

    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    bool has_edge(int u, int v) const;

    bool operator==(const UndirectedGraph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

struct DegreeProfile {
    std::vector<int> out;         // d+(v)
    std::vector<int> in;          // d-(v)
    std::vector<int> splus;       // d+(v) - d-(v)
    std::vector<int> s;           // |splus(v)|
    std::vector<int> semidegree;  // min(d+, d-)

    long long min_semidegree() const;
    long long min_outdegree() const;
    long long max_degree() const;
};

struct CutStats {
    long long e12 = 0;        // arcs part1 -> part2
    long long e21 = 0;        // arcs part2 -> part1
    long long internal1 = 0;  // arcs inside part1
    long long internal2 = 0;  // arcs inside part2

    long long min_dir() const { return e12 < e21 ? e12 : e21; }
};

/// Parse the arc-list format: header "n m", then exactly m lines "u v"
/// meaning the arc u -> v. Lines starting with '#' and blank lines are
/// ignored. Throws ParseError with a specific kind on bad input.
Digraph parse_digraph(std::string_view text);

/// Inverse of parse_digraph: header plus arcs sorted lexicographically.
std::string serialize(const Digraph& d);

DegreeProfile degree_profile(const Digraph& d);

/// Directed cut sizes for a bipartition. part1 and part2 must be disjoint
/// and cover every vertex.
CutStats cut_sizes(const Digraph& d, const std::vector<int>& part1,
                   const std::vector<int>& part2);

/// Forget orientations and collapse antiparallel pairs.
UndirectedGraph underlying_graph(const Digraph& d);

/// Subgraph induced by S, relabeled to 0..|S|-1. The returned map sends
/// new ids to the original ids (ascending).
std::pair<Digraph, std::vector<int>> induced_subdigraph(const Digraph& d,
                                                        const std::vector<int>& s);

/// Induced undirected subgraph, same relabeling convention.
std::pair<UndirectedGraph, std::vector<int>> induced_subgraph(
    const UndirectedGraph& g, const std::vector<int>& s);

} // namespace disect
