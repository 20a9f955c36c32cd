#include "disect/matching.hpp"

#include <algorithm>
#include <numeric>

#include "disect/rng.hpp"

// The augmenting search below is the classic Edmonds contraction scheme:
// grow an alternating tree from an unmatched root, shrink odd cycles to
// their base vertex (base_[]), and flip the matching along the parent
// chain once another unmatched vertex is reached. One search is O(V*E);
// a full solve runs at most V searches.

namespace disect {

GeneralMatcher::GeneralMatcher(const UndirectedGraph& g)
    : g_(&g), n_(g.n()) {
    mate_.assign(n_, -1);
    parent_.assign(n_, -1);
    base_.resize(n_);
    alive_.assign(n_, 1);
    in_tree_.assign(n_, 0);
    on_path_.assign(n_, 0);
    blossom_.assign(n_, 0);
    queue_.reserve(n_);
}

void GeneralMatcher::reset_matching() { std::fill(mate_.begin(), mate_.end(), -1); }

void GeneralMatcher::set_alive(int v, bool alive) {
    alive_[v] = alive ? 1 : 0;
    if (!alive && mate_[v] != -1) {
        mate_[mate_[v]] = -1;
        mate_[v] = -1;
    }
}

int GeneralMatcher::matched_pairs() const {
    int c = 0;
    for (int v = 0; v < n_; ++v)
        if (mate_[v] != -1) ++c;
    return c / 2;
}

int GeneralMatcher::find_base_lca(int a, int b) {
    std::fill(on_path_.begin(), on_path_.end(), 0);
    a = base_[a];
    while (true) {
        on_path_[a] = 1;
        if (mate_[a] == -1) break;
        a = base_[parent_[mate_[a]]];
    }
    b = base_[b];
    while (!on_path_[b]) b = base_[parent_[mate_[b]]];
    return b;
}

void GeneralMatcher::mark_blossom_path(int v, int b, int child) {
    while (base_[v] != b) {
        blossom_[base_[v]] = 1;
        blossom_[base_[mate_[v]]] = 1;
        parent_[v] = child;
        child = mate_[v];
        v = parent_[mate_[v]];
    }
}

bool GeneralMatcher::try_augment(int root) {
    if (!alive_[root] || mate_[root] != -1) return false;
    std::fill(in_tree_.begin(), in_tree_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), -1);
    std::iota(base_.begin(), base_.end(), 0);

    queue_.clear();
    queue_.push_back(root);
    in_tree_[root] = 1;
    std::size_t head = 0;
    while (head < queue_.size()) {
        int v = queue_[head++];
        for (int u : g_->neighbors(v)) {
            if (!alive_[u]) continue;
            if (base_[v] == base_[u] || mate_[v] == u) continue;
            if (u == root || (mate_[u] != -1 && parent_[mate_[u]] != -1)) {
                // Odd cycle: contract the blossom through the common base.
                int cur_base = find_base_lca(v, u);
                std::fill(blossom_.begin(), blossom_.end(), 0);
                mark_blossom_path(v, cur_base, u);
                mark_blossom_path(u, cur_base, v);
                for (int i = 0; i < n_; ++i) {
                    if (blossom_[base_[i]]) {
                        base_[i] = cur_base;
                        if (!in_tree_[i]) {
                            in_tree_[i] = 1;
                            queue_.push_back(i);
                        }
                    }
                }
            } else if (parent_[u] == -1) {
                parent_[u] = v;
                if (mate_[u] == -1) {
                    // Flip matched/unmatched along the path back to root.
                    int w = u;
                    while (w != -1) {
                        int pw = parent_[w];
                        int next = mate_[pw];
                        mate_[w] = pw;
                        mate_[pw] = w;
                        w = next;
                    }
                    return true;
                }
                in_tree_[mate_[u]] = 1;
                queue_.push_back(mate_[u]);
            }
        }
    }
    return false;
}

int GeneralMatcher::maximize(const std::vector<int>& order) {
    for (int v : order) {
        if (!alive_[v] || mate_[v] != -1) continue;
        for (int u : g_->neighbors(v)) {
            if (alive_[u] && mate_[u] == -1) {
                mate_[v] = u;
                mate_[u] = v;
                break;
            }
        }
    }
    for (int v : order)
        if (alive_[v] && mate_[v] == -1) try_augment(v);
    return matched_pairs();
}

int GeneralMatcher::maximize() {
    std::vector<int> order(n_);
    std::iota(order.begin(), order.end(), 0);
    return maximize(order);
}

namespace {

std::vector<Edge> mates_to_edges(const std::vector<int>& mate) {
    std::vector<Edge> edges;
    for (int v = 0; v < static_cast<int>(mate.size()); ++v)
        if (mate[v] > v) edges.emplace_back(v, mate[v]);
    return edges;
}

// Maximality implies no two unmatched vertices are adjacent; checked
// after every matching computation.
void assert_no_adjacent_unmatched(const UndirectedGraph& g,
                                  const std::vector<int>& mate) {
    for (int v = 0; v < g.n(); ++v) {
        if (mate[v] != -1) continue;
        for (int u : g.neighbors(v))
            if (mate[u] == -1)
                throw Error("matching: two adjacent unmatched vertices " +
                            std::to_string(v) + "," + std::to_string(u));
    }
}

std::vector<Edge> special_edges(const std::vector<Edge>& edges, const Digraph* d) {
    std::vector<Edge> out;
    if (!d) return out;
    for (auto [u, v] : edges)
        if (d->has_antiparallel_pair(u, v)) out.emplace_back(u, v);
    return out;
}

Matching assemble(const UndirectedGraph& g, std::vector<int> mate, const Digraph* d) {
    Matching m;
    m.edges = mates_to_edges(mate);
    m.mate = std::move(mate);
    m.cls = classify_free(g, m.edges);
    m.special = special_edges(m.edges, d);
    return m;
}

} // namespace

FreeClassification classify_free(const UndirectedGraph& g,
                                 const std::vector<Edge>& m) {
    std::vector<int> mate(g.n(), -1);
    for (auto [u, v] : m) {
        if (!g.has_edge(u, v))
            throw GuardError("classify_free: edge not in host graph");
        if (mate[u] != -1 || mate[v] != -1)
            throw GuardError("classify_free: edges are not disjoint");
        mate[u] = v;
        mate[v] = u;
    }
    FreeClassification cls;
    cls.witnesses.assign(g.n(), {});
    for (int w = 0; w < g.n(); ++w) {
        if (mate[w] != -1) continue;
        for (int x : g.neighbors(w))
            if (mate[x] != -1 && !g.has_edge(w, mate[x]))
                cls.witnesses[w].push_back(x);
        if (cls.witnesses[w].empty())
            cls.nonfree.push_back(w);
        else
            cls.free.push_back(w);
    }
    return cls;
}

Matching maximum_matching(const UndirectedGraph& g) {
    GeneralMatcher matcher(g);
    matcher.maximize();
    assert_no_adjacent_unmatched(g, matcher.mates());
    return assemble(g, matcher.mates(), nullptr);
}

bool has_perfect_matching(const UndirectedGraph& g) {
    if (g.n() % 2 != 0) return false;
    GeneralMatcher matcher(g);
    return matcher.maximize() * 2 == g.n();
}

namespace {

struct Objective {
    long long free = 0;
    long long special = 0;
    friend bool operator>(const Objective& a, const Objective& b) {
        return a.free != b.free ? a.free > b.free : a.special > b.special;
    }
    friend bool operator==(const Objective& a, const Objective& b) {
        return a.free == b.free && a.special == b.special;
    }
};

class Refiner {
public:
    Refiner(const UndirectedGraph& g, const Digraph* d) : g_(g), d_(d) {}

    Objective evaluate(const std::vector<int>& mate) const {
        Objective obj;
        for (int w = 0; w < g_.n(); ++w) {
            if (mate[w] != -1) {
                if (d_ && mate[w] > w && d_->has_antiparallel_pair(w, mate[w]))
                    ++obj.special;
                continue;
            }
            for (int x : g_.neighbors(w)) {
                if (mate[x] != -1 && !g_.has_edge(w, mate[x])) {
                    ++obj.free;
                    break;
                }
            }
        }
        return obj;
    }

    // Strictly-improving rotations until a local optimum. Moves, scanned
    // in ascending vertex order:
    //   (a) unmatched w, edge {x,y}: swap to {w,x}, freeing y
    //   (b) additionally re-match y across a second matched edge {z,t}
    Objective hill_climb(std::vector<int>& mate) const {
        Objective cur = evaluate(mate);
        bool improved = true;
        while (improved) {
            improved = false;
            Objective best = cur;
            std::vector<int> best_mate;
            std::vector<int> cand = mate;
            for (int w = 0; w < g_.n() && best_mate.empty(); ++w) {
                if (mate[w] != -1) continue;
                for (int x : g_.neighbors(w)) {
                    int y = mate[x];
                    if (y == -1) continue;
                    // move (a)
                    cand[w] = x; cand[x] = w; cand[y] = -1;
                    Objective obj = evaluate(cand);
                    if (obj > best) {
                        best = obj;
                        best_mate = cand;
                    }
                    // move (b): rotate a second edge off y
                    for (int z : g_.neighbors(y)) {
                        int t = mate[z];
                        if (t == -1 || z == x || t == y) continue;
                        if (z == w || t == w) continue;
                        cand[y] = z; cand[z] = y; cand[t] = -1;
                        obj = evaluate(cand);
                        if (obj > best) {
                            best = obj;
                            best_mate = cand;
                        }
                        cand[t] = z; cand[z] = t; cand[y] = -1;
                    }
                    cand[w] = -1; cand[x] = y; cand[y] = x;
                    if (!best_mate.empty()) break;  // first move attaining the improvement
                }
            }
            if (!best_mate.empty()) {
                mate = std::move(best_mate);
                cur = best;
                improved = true;
            }
        }
        return cur;
    }

private:
    const UndirectedGraph& g_;
    const Digraph* d_;
};

} // namespace

Matching refine_matching(const UndirectedGraph& g, const Digraph* companion,
                         const Matching& m0, const RefineOptions& opt) {
    GeneralMatcher matcher(g);
    int nu = matcher.maximize();
    if (m0.size() != nu)
        throw GuardError("refine_matching: initial matching is not maximum (" +
                         std::to_string(m0.size()) + " vs " + std::to_string(nu) + ")");

    Refiner refiner(g, companion);
    std::vector<int> best_mate = m0.mate;
    Objective best = refiner.hill_climb(best_mate);

    std::vector<int> order(g.n());
    std::iota(order.begin(), order.end(), 0);
    for (int r = 1; r < opt.restarts; ++r) {
        SplitRng rng(opt.seed, rng_domain::kRefineRestart, static_cast<std::uint64_t>(r));
        std::vector<int> shuffled = order;
        shuffle(shuffled, rng);
        matcher.reset_matching();
        if (matcher.maximize(shuffled) != nu)
            throw Error("refine_matching: restart lost matching size");
        std::vector<int> mate = matcher.mates();
        Objective obj = refiner.hill_climb(mate);
        if (obj > best ||
            (obj == best && mates_to_edges(mate) < mates_to_edges(best_mate))) {
            best = obj;
            best_mate = std::move(mate);
        }
    }

    assert_no_adjacent_unmatched(g, best_mate);
    return assemble(g, std::move(best_mate), companion);
}

} // namespace disect
