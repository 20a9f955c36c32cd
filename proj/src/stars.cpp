#include <algorithm>

#include "disect/partition_engine.hpp"
#include "engine_internal.hpp"

namespace disect {

namespace detail {

CellMap build_cell_map(int n, const std::vector<int>& x1,
                       const std::vector<int>& x2, const StarDecomposition& dec) {
    CellMap map;
    map.cell.assign(n, kCellU - 1);  // sentinel: unassigned
    map.is_center.assign(n, 0);
    auto place = [&](int v, int cell) {
        if (v < 0 || v >= n || map.cell[v] != kCellU - 1)
            throw GuardError("placement cells do not partition the vertex set");
        map.cell[v] = cell;
    };
    for (int v : x1) place(v, kCellX1);
    for (int v : x2) place(v, kCellX2);
    for (std::size_t i = 0; i < dec.stars.size(); ++i) {
        const Star& star = dec.stars[i];
        place(star.center, static_cast<int>(i));
        map.is_center[star.center] = 1;
        for (int l : star.leaves) place(l, static_cast<int>(i));
    }
    for (int v : dec.independent) place(v, kCellU);
    for (int v = 0; v < n; ++v)
        if (map.cell[v] == kCellU - 1)
            throw GuardError("placement cells do not cover vertex " +
                             std::to_string(v));
    return map;
}

} // namespace detail

namespace {

long long host_tight_count(const UndirectedGraph& g) {
    long long count = 0;
    for (const auto& comp : connected_components(g)) {
        if (comp.size() % 2 == 0) continue;
        auto [sub, map] = induced_subgraph(g, comp);
        if (is_tight(sub)) ++count;
    }
    return count;
}

} // namespace

StarDecomposition star_decomposition(const UndirectedGraph& g,
                                     const std::vector<int>& a,
                                     const Matching& m, const StarOptions& opt) {
    FreeClassification cls = classify_free(g, m.edges);

    std::vector<char> in_a(g.n(), 0);
    for (int v : a) {
        if (v < 0 || v >= g.n())
            throw GuardError("star_decomposition: A contains an invalid vertex");
        in_a[v] = 1;
    }

    StarDecomposition dec;
    dec.a_size = static_cast<long long>(a.size());
    std::vector<int> star_of(g.n(), -1);
    std::vector<int> mate(g.n(), -1);
    for (std::size_t i = 0; i < m.edges.size(); ++i) {
        star_of[m.edges[i].first] = static_cast<int>(i);
        star_of[m.edges[i].second] = static_cast<int>(i);
        mate[m.edges[i].first] = m.edges[i].second;
        mate[m.edges[i].second] = m.edges[i].first;
        dec.stars.push_back({});
    }

    // Hang each free vertex off its lowest-index witness; the witness end
    // becomes the center, the other matched end stays as a leaf. Free
    // vertices reaching opposite ends of one edge would contradict the
    // maximality of the matching.
    for (int w : cls.free) {
        int x = cls.witnesses[w].front();
        int j = star_of[x];
        Star& star = dec.stars[static_cast<std::size_t>(j)];
        if (star.center == -1) {
            star.center = x;
            star.partner = m.edges[static_cast<std::size_t>(j)].first == x
                               ? m.edges[static_cast<std::size_t>(j)].second
                               : m.edges[static_cast<std::size_t>(j)].first;
            star.leaves.push_back(star.partner);
        } else if (star.center != x) {
            throw DecompositionError(
                "free vertices attached to both endpoints of a matching edge; "
                "the matching cannot be maximum",
                0, 0);
        }
        star.leaves.push_back(w);
    }
    for (std::size_t i = 0; i < dec.stars.size(); ++i) {
        Star& star = dec.stars[i];
        if (star.center == -1) {
            star.center = m.edges[i].first;
            star.partner = m.edges[i].second;
            star.leaves.push_back(star.partner);
        }
    }

    dec.independent = cls.nonfree;

    // Keep at most one A-leaf per star. The matched leaf can never be
    // detached, so it wins when it lies in A; otherwise the lowest A-leaf
    // stays and the surplus joins the independent set.
    for (Star& star : dec.stars) {
        std::vector<int> a_leaves;
        for (int l : star.leaves)
            if (in_a[l]) a_leaves.push_back(l);
        if (a_leaves.size() <= 1) continue;
        std::sort(a_leaves.begin(), a_leaves.end());
        int keep = in_a[star.partner] ? star.partner : a_leaves.front();
        std::vector<int> kept_leaves;
        for (int l : star.leaves) {
            if (in_a[l] && l != keep) {
                dec.independent.push_back(l);
            } else {
                kept_leaves.push_back(l);
            }
        }
        star.leaves = std::move(kept_leaves);
    }
    for (Star& star : dec.stars) std::sort(star.leaves.begin(), star.leaves.end());
    std::sort(dec.independent.begin(), dec.independent.end());

    // Postcondition checks; raising beats returning a broken decomposition.
    detail::CellMap cells = detail::build_cell_map(g.n(), {}, {}, dec);
    for (std::size_t i = 0; i < dec.stars.size(); ++i) {
        const Star& star = dec.stars[i];
        long long a_count = 0;
        bool has_partner = false;
        for (int l : star.leaves) {
            if (!g.has_edge(star.center, l))
                throw DecompositionError("star leaf not adjacent to its center", 0, 0);
            for (int nb : g.neighbors(l))
                if (nb != star.center && cells.cell[nb] == static_cast<int>(i) &&
                    !cells.is_center[nb] && nb != l && g.has_edge(l, nb) &&
                    l < nb)
                    throw DecompositionError("edge between two leaves of a star", 0, 0);
            if (in_a[l]) ++a_count;
            if (l == star.partner) has_partner = true;
        }
        if (!has_partner || mate[star.center] != star.partner)
            throw DecompositionError("star lost its matching edge", 0, 0);
        if (a_count > 1)
            throw DecompositionError("star kept more than one A-leaf", 0, 0);
    }
    {
        std::vector<char> in_u(g.n(), 0);
        for (int v : dec.independent) in_u[v] = 1;
        for (int v : dec.independent)
            for (int nb : g.neighbors(v))
                if (in_u[nb])
                    throw DecompositionError("independent set contains an edge", 0, 0);
    }

    dec.tight_count = opt.tight_count ? *opt.tight_count : host_tight_count(g);
    long long u_bound = dec.tight_count + dec.a_size;
    long long u_size = static_cast<long long>(dec.independent.size());
    dec.independent_bound_holds = u_size <= u_bound;
    if (!dec.independent_bound_holds && !opt.allow_independent_overflow) {
        throw DecompositionError(
            "independent set larger than its certified bound (" +
                std::to_string(u_size) + " > " + std::to_string(dec.tight_count) +
                " tight + " + std::to_string(dec.a_size) +
                " high-degree); the refined matching left too few free vertices",
            u_size, u_bound);
    }
    return dec;
}

ExpectedCut expected_cut(const SplitContext& ctx, const StarDecomposition& dec) {
    detail::CellMap cells =
        detail::build_cell_map(ctx.stripped.n(), ctx.x1, ctx.x2, dec);
    long long q12 = 0, q21 = 0;  // quarters
    for (auto [u, v] : ctx.stripped.arcs()) {
        int cu = cells.cell[u];
        int cv = cells.cell[v];
        bool u_fixed = cu == detail::kCellX1 || cu == detail::kCellX2;
        bool v_fixed = cv == detail::kCellX1 || cv == detail::kCellX2;
        if (u_fixed && v_fixed) {
            if (cu == detail::kCellX1 && cv == detail::kCellX2) q12 += 4;
            if (cu == detail::kCellX2 && cv == detail::kCellX1) q21 += 4;
        } else if (u_fixed) {
            (cu == detail::kCellX1 ? q12 : q21) += 2;
        } else if (v_fixed) {
            (cv == detail::kCellX2 ? q12 : q21) += 2;
        } else if (cu == cv && cu >= 0) {
            // Same star: center-leaf arcs always cross, direction uniform;
            // leaves sit together and never cross.
            if (cells.is_center[u] || cells.is_center[v]) {
                q12 += 2;
                q21 += 2;
            }
        } else {
            q12 += 1;
            q21 += 1;
        }
    }
    return {static_cast<double>(q12) / 4.0, static_cast<double>(q21) / 4.0};
}

} // namespace disect
