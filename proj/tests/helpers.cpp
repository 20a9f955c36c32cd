#include "helpers.hpp"

#include "disect/tight_components.hpp"

namespace disect::testutil {

UndirectedGraph random_connected_graph(int n, std::uint64_t seed) {
    if (n <= 1) return UndirectedGraph(n, {});
    for (int round = 0;; ++round) {
        double p = 0.25 + 0.05 * (round % 12);
        UndirectedGraph g = random_graph(n, p, seed + 1000003ULL * round);
        if (connected_components(g).size() == 1) return g;
    }
}

} // namespace disect::testutil
