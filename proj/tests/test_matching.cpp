#include <doctest.h>

#include "disect/matching.hpp"
#include "disect/oracle.hpp"
#include "helpers.hpp"

using namespace disect;
using namespace disect::testutil;

TEST_CASE("maximum matching on small named graphs") {
    CHECK(maximum_matching(path_graph(4)).size() == 2);
    CHECK(maximum_matching(cycle_graph(5)).size() == 2);
    CHECK(maximum_matching(UndirectedGraph(6, {})).size() == 0);
    CHECK(maximum_matching(complete_graph(6)).size() == 3);
    // Petersen graph: perfect matching exists
    UndirectedGraph petersen(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                                  {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                                  {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
    CHECK(maximum_matching(petersen).size() == 5);
}

TEST_CASE("maximum matching equals brute force on every graph up to n=6") {
    for (int n = 0; n <= 6; ++n) {
        int pairs = n * (n - 1) / 2;
        for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
            std::vector<Edge> edges;
            int bit = 0;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v, ++bit)
                    if ((mask >> bit) & 1u) edges.emplace_back(u, v);
            UndirectedGraph g(n, std::move(edges));
            CAPTURE(n);
            CAPTURE(mask);
            REQUIRE(maximum_matching(g).size() == brute_matching_size(g));
        }
    }
}

TEST_CASE("maximum matching equals brute force on random graphs up to n=14") {
    for (std::uint64_t seed = 1; seed <= 120; ++seed) {
        int n = 7 + static_cast<int>(seed % 8);
        double p = 0.15 + 0.08 * static_cast<double>(seed % 8);
        UndirectedGraph g = random_graph(n, p, seed);
        CAPTURE(seed);
        REQUIRE(maximum_matching(g).size() == brute_matching_size(g));
    }
}

TEST_CASE("no two unmatched vertices are adjacent") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        UndirectedGraph g = random_graph(11, 0.3, seed);
        Matching m = maximum_matching(g);
        for (int v = 0; v < g.n(); ++v) {
            if (m.mate[v] != -1) continue;
            for (int u : g.neighbors(v)) CHECK(m.mate[u] != -1);
        }
    }
}

TEST_CASE("classify_free on the path P3") {
    UndirectedGraph g = path_graph(3);
    FreeClassification cls = classify_free(g, {{0, 1}});
    CHECK(cls.free == std::vector<int>{2});
    CHECK(cls.nonfree.empty());
    CHECK(cls.witnesses[2] == std::vector<int>{1});
}

TEST_CASE("classify_free on K3: the exposed vertex is non-free") {
    FreeClassification cls = classify_free(complete_graph(3), {{0, 1}});
    CHECK(cls.free.empty());
    CHECK(cls.nonfree == std::vector<int>{2});
}

TEST_CASE("classify_free: isolated vertices are non-free") {
    UndirectedGraph g(3, {{0, 1}});
    FreeClassification cls = classify_free(g, {{0, 1}});
    CHECK(cls.nonfree == std::vector<int>{2});
}

TEST_CASE("classify_free rejects non-matchings") {
    UndirectedGraph g = path_graph(4);
    CHECK_THROWS_AS(classify_free(g, {{0, 1}, {1, 2}}), GuardError);
    CHECK_THROWS_AS(classify_free(g, {{0, 2}}), GuardError);
}

TEST_CASE("refine_matching prefers the special edge on the two-arc path") {
    // arcs 0->1, 1->2, 2->1: both maximum matchings leave one free vertex,
    // only {1,2} lifts to an antiparallel pair.
    Digraph d(3, {{0, 1}, {1, 2}, {2, 1}});
    UndirectedGraph g = underlying_graph(d);
    Matching m0 = maximum_matching(g);
    Matching refined = refine_matching(g, &d, m0);
    CHECK(refined.size() == 1);
    CHECK(refined.free_count() == 1);
    CHECK(refined.edges == std::vector<Edge>{{1, 2}});
    CHECK(refined.special == std::vector<Edge>{{1, 2}});
}

TEST_CASE("refine_matching returns an equal matching when already optimal") {
    UndirectedGraph g = path_graph(3);
    Matching m0 = maximum_matching(g);
    Matching refined = refine_matching(g, nullptr, m0);
    CHECK(refined.size() == m0.size());
    CHECK(refined.free_count() == 1);
}

TEST_CASE("refine_matching on an edgeless graph") {
    UndirectedGraph g(4, {});
    Matching refined = refine_matching(g, nullptr, maximum_matching(g));
    CHECK(refined.size() == 0);
    CHECK(refined.free_count() == 0);
}

TEST_CASE("refine_matching rejects non-maximum input") {
    UndirectedGraph g = path_graph(4);
    Matching bogus;
    bogus.edges = {{1, 2}};
    bogus.mate.assign(4, -1);
    bogus.mate[1] = 2;
    bogus.mate[2] = 1;
    CHECK_THROWS_AS(refine_matching(g, nullptr, bogus), GuardError);
}

TEST_CASE("refine_matching never loses size, free count, or special count") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        Digraph d = random_digraph(9, 0.3, seed);
        UndirectedGraph g = underlying_graph(d);
        Matching m0 = maximum_matching(g);
        Matching refined = refine_matching(g, &d, m0);
        CHECK(refined.size() == m0.size());
        CHECK(refined.free_count() >= m0.free_count());
    }
}

TEST_CASE("refinement reaches the enumerated optimum on small graphs") {
    int reached = 0, total = 0;
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        int n = 5 + static_cast<int>(seed % 6);
        UndirectedGraph g = random_graph(n, 0.35, seed);
        Matching m0 = maximum_matching(g);
        Matching refined = refine_matching(g, nullptr, m0);
        MatchingOracleResult oracle = exact_matching_profile(g);
        REQUIRE(refined.size() == oracle.size);
        REQUIRE(refined.free_count() <= oracle.free_count);
        ++total;
        if (refined.free_count() == oracle.free_count) ++reached;
    }
    // Heuristic quality note, not a hard guarantee; see the acceptance run.
    CHECK(reached >= total * 8 / 10);
}

TEST_CASE("has_perfect_matching basics") {
    CHECK(has_perfect_matching(complete_graph(4)));
    CHECK_FALSE(has_perfect_matching(complete_graph(3)));
    CHECK(has_perfect_matching(UndirectedGraph(0, {})));
    CHECK_FALSE(has_perfect_matching(UndirectedGraph(2, {})));
}
