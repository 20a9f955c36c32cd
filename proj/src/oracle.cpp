#include "disect/oracle.hpp"

#include <algorithm>
#include <bit>

#include "disect/tight_components.hpp"

namespace disect {

namespace {

std::vector<int> mask_to_vertices(std::uint32_t mask) {
    std::vector<int> out;
    for (int v = 0; mask != 0; ++v, mask >>= 1)
        if (mask & 1u) out.push_back(v);
    return out;
}

// Next bitmask with the same popcount (Gosper).
std::uint32_t next_combination(std::uint32_t mask) {
    std::uint32_t c = mask & (0u - mask);
    std::uint32_t r = mask + c;
    return (((r ^ mask) >> 2) / c) | r;
}

} // namespace

OracleResult exact_best_bisection(const Digraph& d) {
    int n = d.n();
    if (n > 22)
        throw GuardError("exact_best_bisection: n=" + std::to_string(n) +
                         " exceeds enumeration guard 22");
    OracleResult res;
    if (n == 0) {
        res.explored = 1;
        return res;
    }
    int k = (n + 1) / 2;
    // Each unordered bisection appears once: for odd n as its larger part,
    // for even n as the size-n/2 part containing vertex 0.
    bool pin_zero = n % 2 == 0;
    int free_bits = pin_zero ? n - 1 : n;
    int choose = pin_zero ? k - 1 : k;

    res.value = -1;
    std::uint32_t sub = choose == 0 ? 0u : (1u << choose) - 1u;
    std::uint32_t limit = free_bits >= 32 ? 0xffffffffu : (1u << free_bits);
    while (true) {
        std::uint32_t mask = pin_zero ? (sub << 1) | 1u : sub;
        long long e12 = 0, e21 = 0;
        for (auto [u, v] : d.arcs()) {
            bool su = (mask >> u) & 1u;
            bool sv = (mask >> v) & 1u;
            if (su && !sv) ++e12;
            else if (!su && sv) ++e21;
        }
        long long val = std::min(e12, e21);
        ++res.explored;
        if (val > res.value) {
            res.value = val;
            res.witness = mask_to_vertices(mask);
        } else if (val == res.value) {
            auto w = mask_to_vertices(mask);
            if (w < res.witness) res.witness = std::move(w);
        }
        if (choose == 0) break;
        sub = next_combination(sub);
        if (sub >= limit) break;
    }
    return res;
}

OracleResult exact_min_gap(const std::vector<long long>& splus) {
    std::size_t len = splus.size();
    if (len > 24)
        throw GuardError("exact_min_gap: " + std::to_string(len) +
                         " values exceed enumeration guard 24");
    OracleResult res;
    long long total = 0;
    for (long long s : splus) total += s;

    // Gray-code walk over sign patterns; bit i set puts index i in part1.
    long long cur = -total;  // mask 0: everything in part2
    long long best = cur < 0 ? -cur : cur;
    std::uint32_t best_mask = 0;
    std::uint64_t count = 1ull << len;
    std::uint32_t gray = 0;
    for (std::uint64_t i = 1; i < count; ++i) {
        int flip = std::countr_zero(i);
        std::uint32_t bit = 1u << flip;
        gray ^= bit;
        cur += (gray & bit) ? 2 * splus[flip] : -2 * splus[flip];
        long long mag = cur < 0 ? -cur : cur;
        if (mag < best || (mag == best && gray < best_mask)) {
            best = mag;
            best_mask = gray;
        }
    }
    res.value = best;
    res.witness = mask_to_vertices(best_mask);
    res.explored = static_cast<long long>(count);
    return res;
}

namespace {

struct ProfileSearch {
    const UndirectedGraph& g;
    const Digraph* companion;
    std::vector<int> mate;
    MatchingOracleResult best;

    explicit ProfileSearch(const UndirectedGraph& graph, const Digraph* d)
        : g(graph), companion(d), mate(graph.n(), -1) {
        best.size = -1;
    }

    void evaluate() {
        ++best.explored;
        long long size = 0, free_cnt = 0, special = 0;
        for (int v = 0; v < g.n(); ++v) {
            if (mate[v] != -1) {
                if (mate[v] > v) {
                    ++size;
                    if (companion && companion->has_antiparallel_pair(v, mate[v]))
                        ++special;
                }
                continue;
            }
            for (int x : g.neighbors(v)) {
                if (mate[x] != -1 && !g.has_edge(v, mate[x])) {
                    ++free_cnt;
                    break;
                }
            }
        }
        auto better = [&] {
            if (size != best.size) return size > best.size;
            if (free_cnt != best.free_count) return free_cnt > best.free_count;
            return special > best.special_count;
        };
        if (better()) {
            best.size = size;
            best.free_count = free_cnt;
            best.special_count = special;
            best.witness.clear();
            for (int v = 0; v < g.n(); ++v)
                if (mate[v] > v) best.witness.emplace_back(v, mate[v]);
        } else if (size == best.size && free_cnt == best.free_count &&
                   special == best.special_count) {
            std::vector<Edge> w;
            for (int v = 0; v < g.n(); ++v)
                if (mate[v] > v) w.emplace_back(v, mate[v]);
            if (w < best.witness) best.witness = std::move(w);
        }
    }

    void recurse(int v) {
        while (v < g.n() && mate[v] != -1) ++v;
        if (v >= g.n()) {
            evaluate();
            return;
        }
        recurse(v + 1);  // v stays unmatched
        for (int u : g.neighbors(v)) {
            if (u > v && mate[u] == -1) {
                mate[v] = u;
                mate[u] = v;
                recurse(v + 1);
                mate[v] = -1;
                mate[u] = -1;
            }
        }
    }
};

} // namespace

MatchingOracleResult exact_matching_profile(const UndirectedGraph& g,
                                            const Digraph* companion) {
    if (g.n() > 12)
        throw GuardError("exact_matching_profile: n=" + std::to_string(g.n()) +
                         " exceeds enumeration guard 12");
    ProfileSearch search(g, companion);
    search.recurse(0);
    return search.best;
}

namespace {

struct TightSearch {
    const UndirectedGraph& g;
    int removed;
    std::vector<char> used;
    long long found = 0;
    bool violated = false;

    TightSearch(const UndirectedGraph& graph, int v)
        : g(graph), removed(v), used(graph.n(), 0) {
        used[v] = 1;
    }

    // Enumerate perfect matchings of G-removed; a matching edge with
    // exactly one end adjacent to the removed vertex only counts once the
    // partial matching completes.
    void recurse(bool bad) {
        if (violated) return;
        int v = -1;
        for (int i = 0; i < g.n(); ++i) {
            if (!used[i]) {
                v = i;
                break;
            }
        }
        if (v == -1) {
            ++found;
            if (bad) violated = true;
            return;
        }
        for (int u : g.neighbors(v)) {
            if (used[u]) continue;
            bool edge_bad = g.has_edge(removed, v) != g.has_edge(removed, u);
            used[v] = 1;
            used[u] = 1;
            recurse(bad || edge_bad);
            used[v] = 0;
            used[u] = 0;
            if (violated) return;
        }
    }
};

} // namespace

bool exact_tight_check(const UndirectedGraph& g) {
    if (g.n() > 10)
        throw GuardError("exact_tight_check: n=" + std::to_string(g.n()) +
                         " exceeds enumeration guard 10");
    if (g.n() == 0 || connected_components(g).size() != 1)
        throw GuardError("exact_tight_check: graph must be connected");
    for (int v = 0; v < g.n(); ++v) {
        TightSearch search(g, v);
        search.recurse(false);
        if (search.violated || search.found == 0) return false;
    }
    return true;
}

} // namespace disect
