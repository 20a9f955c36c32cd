#include <doctest.h>

#include "disect/constructions.hpp"
#include "helpers.hpp"

using namespace disect;

TEST_CASE("eulerian_complete_odd balances every vertex") {
    for (int t : {3, 5, 7, 9}) {
        Digraph d = eulerian_complete_odd(t);
        CHECK(d.m() == static_cast<long long>(t) * (t - 1) / 2);
        DegreeProfile p = degree_profile(d);
        for (int v = 0; v < t; ++v) {
            CHECK(p.out[v] == (t - 1) / 2);
            CHECK(p.in[v] == (t - 1) / 2);
        }
        for (auto [u, v] : d.arcs()) CHECK_FALSE(d.has_arc(v, u));
    }
}

TEST_CASE("eulerian_complete_odd(3) is the directed triangle up to rotation") {
    Digraph d = eulerian_complete_odd(3);
    DegreeProfile p = degree_profile(d);
    for (int v = 0; v < 3; ++v) CHECK(p.semidegree[v] == 1);
}

TEST_CASE("eulerian_complete_odd rejects even or tiny orders") {
    CHECK_THROWS_AS(eulerian_complete_odd(4), GuardError);
    CHECK_THROWS_AS(eulerian_complete_odd(1), GuardError);
}

TEST_CASE("eulerian_complete_odd is deterministic") {
    CHECK(eulerian_complete_odd(7) == eulerian_complete_odd(7));
}

TEST_CASE("extremal_family sizes match the closed formulas") {
    auto check_sizes = [](int d, int k) {
        auto [graph, layout] = extremal_family(d, k);
        CHECK(graph.n() == k * (2 * d + 1) + 2 * d + 3);
        CHECK(graph.m() == static_cast<long long>(k) * (d + 1) * (2 * d + 1) +
                               static_cast<long long>(d + 1) * (2 * d + 3));
    };
    check_sizes(1, 1);   // n=8,  m=16
    check_sizes(2, 2);   // n=17, m=51
    check_sizes(1, 30);  // n=95, m=190
    auto [g11, l11] = extremal_family(1, 1);
    CHECK(g11.n() == 8);
    CHECK(g11.m() == 16);
    auto [g22, l22] = extremal_family(2, 2);
    CHECK(g22.n() == 17);
    CHECK(g22.m() == 51);
}

TEST_CASE("extremal_family degrees: min outdegree d+1, min semidegree d") {
    for (int d = 1; d <= 3; ++d) {
        for (int k : {1, 4, 10}) {
            auto [graph, layout] = extremal_family(d, k);
            DegreeProfile p = degree_profile(graph);
            CHECK(p.min_outdegree() == d + 1);
            CHECK(p.min_semidegree() == d);
        }
    }
}

TEST_CASE("extremal_family has no antiparallel pair and a well-formed layout") {
    auto [graph, layout] = extremal_family(2, 3);
    for (auto [u, v] : graph.arcs()) CHECK_FALSE(graph.has_arc(v, u));
    CHECK(layout.copies.size() == 3);
    CHECK(layout.big_clique.size() == 7);
    CHECK(layout.apex == layout.big_clique.front());
    // every small-copy vertex sends one arc to the apex
    for (const auto& copy : layout.copies)
        for (int v : copy) CHECK(graph.has_arc(v, layout.apex));
}

TEST_CASE("random_min_semidegree post-conditions") {
    Digraph a = random_min_semidegree(10, 1, 0.0, 1);
    CHECK(degree_profile(a).min_semidegree() >= 1);

    // saturation: n = 2d+1 with p=1 is the complete digraph minus loops
    Digraph full = random_min_semidegree(5, 2, 1.0, 3);
    CHECK(full.m() == 20);
    CHECK(degree_profile(full).min_semidegree() == 4);

    Digraph b1 = random_min_semidegree(12, 2, 0.1, 7);
    Digraph b2 = random_min_semidegree(12, 2, 0.1, 7);
    CHECK(b1 == b2);
    CHECK(degree_profile(b1).min_semidegree() >= 2);
}

TEST_CASE("random_min_semidegree rejects impossible parameters") {
    CHECK_THROWS_AS(random_min_semidegree(4, 2, 0.0, 1), GuardError);
    CHECK_THROWS_AS(random_min_semidegree(10, 1, 1.5, 1), GuardError);
}
