#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "disect/digraph.hpp"

namespace disect {

/// Free/non-free split of the vertices left unmatched by a matching.
/// A vertex w is free when some matched edge {x,y} has w adjacent to x
/// but not to y; x is then a witness for w.
struct FreeClassification {
    std::vector<int> free;     // sorted
    std::vector<int> nonfree;  // sorted
    std::vector<std::vector<int>> witnesses;  // per vertex, sorted; empty unless free
};

struct Matching {
    std::vector<Edge> edges;   // pairwise disjoint, sorted
    std::vector<int> mate;     // mate[v] or -1, size n
    FreeClassification cls;
    std::vector<Edge> special; // edges lifting to an antiparallel arc pair

    long long size() const { return static_cast<long long>(edges.size()); }
    long long free_count() const { return static_cast<long long>(cls.free.size()); }
    long long special_count() const { return static_cast<long long>(special.size()); }
};

/// Edmonds blossom search over a fixed host graph. Vertices can be
/// toggled dead/alive so callers can probe vertex-deleted subgraphs
/// without rebuilding; the matching state is exposed for snapshots.
class GeneralMatcher {
public:
    explicit GeneralMatcher(const UndirectedGraph& g);

    void reset_matching();
    /// Match greedily along `order`, then augment from every remaining
    /// unmatched vertex in `order`. Returns the number of matched pairs.
    int maximize(const std::vector<int>& order);
    int maximize();  // ascending order

    /// One alternating-tree search from `root`; true if it augmented.
    bool try_augment(int root);

    void set_alive(int v, bool alive);
    bool is_alive(int v) const { return alive_[v] != 0; }

    const std::vector<int>& mates() const { return mate_; }
    void set_mates(std::vector<int> m) { mate_ = std::move(m); }
    int matched_pairs() const;

private:
    int find_base_lca(int a, int b);
    void mark_blossom_path(int v, int b, int child);

    const UndirectedGraph* g_;
    int n_;
    std::vector<int> mate_, parent_, base_, queue_;
    std::vector<char> alive_, in_tree_, on_path_, blossom_;
};

/// Maximum matching via blossom search; classification populated,
/// special set empty (no companion digraph at this stage).
Matching maximum_matching(const UndirectedGraph& g);

/// Classify unmatched vertices for an arbitrary matching `m` in `g`.
/// Throws GuardError if `m` is not a matching of `g`.
FreeClassification classify_free(const UndirectedGraph& g, const std::vector<Edge>& m);

struct RefineOptions {
    int restarts = 20;
    std::uint64_t seed = 0;
};

/// Searches the space of maximum matchings for one maximizing
/// (#free vertices, #special edges) lexicographically. Hill-climbing
/// over edge rotations with random restarts; locally optimal, not
/// guaranteed globally optimal. Throws GuardError if m0 is not maximum.
Matching refine_matching(const UndirectedGraph& g, const Digraph* companion,
                         const Matching& m0, const RefineOptions& opt = {});

bool has_perfect_matching(const UndirectedGraph& g);

} // namespace disect
