#pragma once

#include <vector>

#include "disect/digraph.hpp"

namespace disect {

/// Result of an exhaustive enumeration. `witness` achieves `value`;
/// `explored` counts enumerated candidates. Ties are broken toward the
/// lexicographically smallest witness.
struct OracleResult {
    long long value = 0;
    std::vector<int> witness;
    long long explored = 0;
};

struct MatchingOracleResult {
    long long size = 0;
    long long free_count = 0;
    long long special_count = 0;
    std::vector<Edge> witness;
    long long explored = 0;
};

/// Best bisection value max over all balanced splits of min(e12, e21).
/// witness = part1 (the larger part for odd n). Guard: n <= 22.
OracleResult exact_best_bisection(const Digraph& d);

/// Minimum of |sum over part1 - sum over part2| over all ways to split
/// the given values. witness = indices assigned to part1. Guard: 24 values.
OracleResult exact_min_gap(const std::vector<long long>& splus);

/// Lexicographic optimum of (size, #free, #special) over ALL matchings of
/// g, by enumeration. #special counts edges lifting to antiparallel pairs
/// of `companion` (0 if none given). Guard: n <= 12.
MatchingOracleResult exact_matching_profile(const UndirectedGraph& g,
                                            const Digraph* companion = nullptr);

/// Literal tightness definition: enumerates every perfect matching of
/// every G-v. Guard: n <= 10, g connected.
bool exact_tight_check(const UndirectedGraph& g);

} // namespace disect
