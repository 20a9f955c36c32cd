#include "disect/tight_components.hpp"

#include <algorithm>

#include "disect/matching.hpp"

namespace disect {

std::vector<std::vector<int>> connected_components(const UndirectedGraph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(g.n(), 0);
    std::vector<int> stack;
    for (int start = 0; start < g.n(); ++start) {
        if (seen[start]) continue;
        std::vector<int> comp;
        stack.push_back(start);
        seen[start] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int u : g.neighbors(v)) {
                if (!seen[u]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

namespace {

void require_connected(const UndirectedGraph& g, const char* op) {
    if (g.n() == 0 || connected_components(g).size() != 1)
        throw GuardError(std::string(op) + ": graph must be connected");
}

// Near-perfect base matching plus its single exposed vertex, or nullopt
// when the graph cannot be factor-critical.
struct NearPerfect {
    std::vector<int> mate;
    int exposed;
};

std::optional<NearPerfect> near_perfect_matching(const UndirectedGraph& g,
                                                 GeneralMatcher& matcher) {
    if (g.n() % 2 == 0) return std::nullopt;
    if (matcher.maximize() * 2 != g.n() - 1) return std::nullopt;
    NearPerfect np;
    np.mate = matcher.mates();
    np.exposed = -1;
    for (int v = 0; v < g.n(); ++v)
        if (np.mate[v] == -1) np.exposed = v;
    return np;
}

// Every G-v has a perfect matching? Reuses the base near-perfect matching:
// deleting v frees only its partner, so one augmenting search decides.
bool factor_critical_with(const UndirectedGraph& g, GeneralMatcher& matcher,
                          const NearPerfect& np) {
    for (int v = 0; v < g.n(); ++v) {
        if (v == np.exposed) continue;
        matcher.set_mates(np.mate);
        matcher.set_alive(v, false);
        bool ok = matcher.try_augment(np.mate[v]);
        matcher.set_alive(v, true);
        if (!ok) return false;
    }
    return true;
}

bool perfect_matching_without(const UndirectedGraph& g, GeneralMatcher& matcher,
                              const NearPerfect& np, int v, int x, int y) {
    matcher.set_mates(np.mate);
    matcher.set_alive(v, false);
    matcher.set_alive(x, false);
    matcher.set_alive(y, false);
    for (int w = 0; w < g.n(); ++w)
        if (matcher.is_alive(w) && matcher.mates()[w] == -1) matcher.try_augment(w);
    bool perfect = matcher.matched_pairs() * 2 == g.n() - 3;
    matcher.set_alive(v, true);
    matcher.set_alive(x, true);
    matcher.set_alive(y, true);
    return perfect;
}

} // namespace

bool is_factor_critical(const UndirectedGraph& g) {
    require_connected(g, "is_factor_critical");
    if (g.n() == 1) return true;
    GeneralMatcher matcher(g);
    auto np = near_perfect_matching(g, matcher);
    return np && factor_critical_with(g, matcher, *np);
}

bool is_tight(const UndirectedGraph& g) {
    require_connected(g, "is_tight");
    if (g.n() == 1) return true;
    if (g.n() % 2 == 0) return false;
    GeneralMatcher matcher(g);
    auto np = near_perfect_matching(g, matcher);
    if (!np || !factor_critical_with(g, matcher, *np)) return false;
    for (int v = 0; v < g.n(); ++v) {
        for (auto [x, y] : g.edges()) {
            if (x == v || y == v) continue;
            if (g.has_edge(v, x) == g.has_edge(v, y)) continue;
            if (perfect_matching_without(g, matcher, *np, v, x, y)) return false;
        }
    }
    return true;
}

ComponentReport essential_components(const Digraph& d) {
    UndirectedGraph g = underlying_graph(d);
    ComponentReport rep;
    rep.components = connected_components(g);
    for (const auto& comp : rep.components) {
        auto [sub, map] = induced_subgraph(g, comp);
        bool tight = comp.size() % 2 == 1 && is_tight(sub);

        bool anti = false;
        long long arcs_inside = 0;
        for (int v : comp) {
            for (int u : d.out_neighbors(v)) {
                if (!std::binary_search(comp.begin(), comp.end(), u)) continue;
                ++arcs_inside;
                if (!anti && d.has_arc(u, v)) anti = true;
            }
        }
        bool essential = tight && !anti;
        if (essential) {
            long long i = static_cast<long long>(comp.size());
            if (arcs_inside > i * (i - 1) / 2)
                throw Error("essential component exceeds its arc capacity");
        }
        rep.is_tight.push_back(tight);
        rep.has_antiparallel.push_back(anti);
        rep.is_essential.push_back(essential);
        if (tight) ++rep.tau_star;
        if (tight && anti) ++rep.sigma;
        if (essential) ++rep.tau;
    }
    if (rep.tau != rep.tau_star - rep.sigma)
        throw Error("component counters out of balance");
    return rep;
}

} // namespace disect
