#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "disect/digraph.hpp"
#include "disect/matching.hpp"
#include "disect/tight_components.hpp"

namespace disect {

enum class GapMode { Unset, Exact, Local };

struct GapOptions {
    long long sum_budget = 10'000'000;  // bitset subset-sum cap on sum of |values|
    int mitm_max = 40;                  // meet-in-the-middle up to this many values
    int local_starts = 32;
    std::uint64_t seed = 0;
};

struct GapResult {
    std::vector<int> part1, part2;  // indices into the input list
    long long theta = 0;            // >= 0; parts swapped if needed
    GapMode mode = GapMode::Unset;
};

/// Split the given values into two parts minimizing
/// |sum(part1) - sum(part2)|. Exact (subset-sum bitset or
/// meet-in-the-middle) within the budgets, local-search descent beyond.
GapResult min_gap_partition(const std::vector<long long>& splus,
                            const GapOptions& opt = {});

/// Everything the pipeline derives from the degree-threshold split.
/// Degree quantities for X (splus_x, b, e_xy, e_yx, theta, ...) refer to
/// the stripped digraph; `d` is the minimum semidegree of the original.
struct SplitContext {
    Digraph original;
    Digraph stripped;  // original minus all arcs inside X
    long long threshold = 0;
    std::vector<int> x_verts, y_verts;  // sorted
    std::vector<long long> splus_x;     // aligned with x_verts
    long long m_original = 0;
    long long m = 0;  // arc count after stripping
    long long d = 0;  // minimum semidegree of the original digraph
    long long e_xy = 0, e_yx = 0;
    long long b = 0;  // sum over X of min(d+, d-)

    GapMode gap_mode = GapMode::Unset;
    std::vector<int> x1, x2;  // sorted
    long long theta = 0;
    std::vector<long long> huge_s;  // s-values of huge vertices, descending
    long long alpha = 0, beta = 0, g = 0;
    long long delta1() const { return huge_s.empty() ? 0 : huge_s.front(); }

    long long tau = -1, tau_star = -1, sigma = -1;
};

/// Degree-threshold split with intra-X stripping. Default threshold is
/// the least integer t with t^4 >= n^3.
SplitContext prepare_split(const Digraph& d,
                           std::optional<long long> threshold = {});

/// Runs min_gap_partition over the X vertices and fills x1/x2/theta plus
/// the huge-vertex quantities. Ensures theta >= 0.
void choose_gap_partition(SplitContext& ctx, const GapOptions& opt = {});

void attach_components(SplitContext& ctx, const ComponentReport& rep);

struct Star {
    int center = -1;
    int partner = -1;          // matched leaf; the star contains {center, partner}
    std::vector<int> leaves;   // sorted, includes partner
};

struct StarDecomposition {
    std::vector<Star> stars;
    std::vector<int> independent;  // sorted
    long long tight_count = 0;     // tight components of the host graph
    long long a_size = 0;
    bool independent_bound_holds = true;  // |U| <= tight_count + |A|
};

struct StarOptions {
    std::optional<long long> tight_count;  // precomputed, else derived here
    bool allow_independent_overflow = false;
};

/// Partition V(g) into induced stars around the matching edges plus an
/// independent remainder. Free vertices hang off their lowest-index
/// witness; stars holding two or more A-leaves shed the surplus into the
/// remainder. All structural invariants are checked; violations raise
/// DecompositionError (the |U| bound only when overflow is not allowed).
StarDecomposition star_decomposition(const UndirectedGraph& g,
                                     const std::vector<int>& a,
                                     const Matching& m,
                                     const StarOptions& opt = {});

struct Bisection {
    std::vector<int> part1, part2;  // sorted; sizes differ by at most 1
    CutStats stats;
};

struct TrialStats {
    long long trials = 0;
    double mean_e12 = 0, mean_e21 = 0;  // before rebalancing
    double std_e12 = 0, std_e21 = 0;
    long long winning_trial = -1;
    long long winner_pre_e12 = 0, winner_pre_e21 = 0;
    long long moved_vertices = 0;        // rebalancing moves in the winning trial
    bool degree_cap_fallback = false;    // winner moved a vertex above 4C
    bool moved_fixed_vertex = false;     // winner moved an X vertex
};

struct ExpectedCut {
    double e12 = 0, e21 = 0;  // exact multiples of 1/4
};

/// Exact expectation of each directed cut under the randomized placement:
/// X1->X2 arcs count 1, X-Y arcs 1/2 toward the only direction they can
/// cross, center-leaf arcs 1/2 each way, all other Y arcs 1/4 each way.
ExpectedCut expected_cut(const SplitContext& ctx, const StarDecomposition& dec);

/// Monte Carlo over `trials` placements (X1->part1, X2->part2, star
/// centers and independent vertices on coin flips), each rebalanced to an
/// exact bisection by greedily moving low-degree vertices; returns the
/// sample maximizing min(e12, e21) on the stripped digraph.
std::pair<Bisection, TrialStats> randomized_bisection(
    const SplitContext& ctx, const StarDecomposition& dec, long long trials,
    std::uint64_t seed, int threads = 1);

/// Uniform random bisections, best of `trials`. If hypothesis_holds is
/// given it reports whether m >= 16n/eps^2 or max degree <= eps^2 m / 8.
Bisection dense_random_bisection(const Digraph& d, double epsilon,
                                 long long trials, std::uint64_t seed,
                                 int threads = 1,
                                 bool* hypothesis_holds = nullptr);

struct InequalityRecord {
    std::string name;
    double lhs = 0, rhs = 0;
    bool pass = true;
    bool applicable = true;
    bool required = true;  // guaranteed for this run; failing means a defect
    std::string note;
};

/// Evaluate every certified inequality on a fully populated context
/// (components attached). Comparisons are exact integer arithmetic.
std::vector<InequalityRecord> evaluate_inequalities(const SplitContext& ctx);

struct EngineConfig {
    double epsilon = 0.02;
    long long trials = 0;  // 0 = auto_trials(epsilon)
    std::uint64_t seed = 0;
    std::optional<long long> threshold;
    long long dense_constant = 256;
    long long gap_sum_budget = 10'000'000;
    int threads = 0;  // 0 = hardware concurrency
    int refine_restarts = 20;
};

/// Monte Carlo sample count giving empirical concentration at tolerance
/// epsilon with failure budget 1e-3: max(200, ceil(8 ln(1000) / eps^2)).
long long auto_trials(double epsilon);

/// Everything optimal_bisect assembles before sampling: split, gap
/// partition, component report, refined matching over the low-degree side
/// and the star decomposition mapped back to original vertex ids.
struct PipelineSetup {
    SplitContext ctx;
    StarDecomposition stars;     // original vertex ids
    ComponentReport components;  // of the stripped subgraph on Y (relabeled)
    Matching refined;            // on the relabeled Y host graph
    std::vector<int> y_map;      // relabeled id -> original id
    std::vector<std::string> warnings;
};

PipelineSetup build_pipeline(const Digraph& d, const EngineConfig& cfg);

struct CertificateMatching {
    std::vector<Edge> edges;  // original vertex ids, sorted
    std::vector<int> free, nonfree;
    std::vector<Edge> special;
};

struct CertificateComponents {
    std::vector<long long> sizes;
    std::vector<bool> tight, antiparallel, essential;
};

struct Certificate {
    std::string mode;  // "dense" | "pipeline"
    double epsilon = 0;
    long long trials = 0;
    std::uint64_t seed = 0;
    int threads = 1;
    long long n = 0, m_original = 0, m_stripped = 0, d = 0;

    bool has_split = false;  // pipeline quantities below are meaningful
    long long theta = 0, tau = 0, tau_star = 0, sigma = 0;
    long long alpha = 0, beta = 0, b = 0, g = 0, delta1 = 0;
    long long x_size = 0, y_size = 0;
    std::string gap_mode;                     // "exact" | "local"
    std::string refinement_mode = "heuristic";
    bool star_bound_holds = true;

    std::vector<InequalityRecord> records;
    double ratio_original = 0, ratio_stripped = 0;
    TrialStats trial_stats;
    ExpectedCut expected;
    CertificateMatching matching;      // refined matching over Y
    CertificateComponents components;  // components of the stripped Y side
    std::vector<std::string> warnings;

    bool all_required_pass() const;
};

struct PartitionResult {
    Bisection bisection;      // stats measured on the original digraph
    CutStats stats_stripped;  // pipeline mode: same split on the stripped digraph
    Certificate certificate;
};

/// Full pipeline: dense branch when m >= denseConstant (2d+1)^2 n, else
/// threshold split, gap minimization, matching refinement over the
/// low-degree side, star decomposition and randomized rebalanced
/// bisection, with every certified inequality evaluated on the run.
PartitionResult optimal_bisect(const Digraph& d, const EngineConfig& cfg = {});

} // namespace disect
