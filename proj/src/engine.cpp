#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <thread>

#include "disect/partition_engine.hpp"
#include "disect/rng.hpp"
#include "engine_internal.hpp"

namespace disect {

long long auto_trials(double epsilon) {
    double raw = std::ceil(8.0 * std::log(1000.0) / (epsilon * epsilon));
    return std::max<long long>(200, static_cast<long long>(raw));
}

namespace {

struct TrialOutcome {
    long long obj = -1;       // min cut on the working digraph
    long long obj_full = -1;  // tie-break: min cut on the original digraph
    long long trial = -1;
    std::vector<char> side;
    long long moved = 0;
    bool cap_fallback = false;
    bool moved_fixed = false;

    bool better_than(const TrialOutcome& other) const {
        if (other.trial < 0) return true;
        if (obj != other.obj) return obj > other.obj;
        if (obj_full != other.obj_full) return obj_full > other.obj_full;
        return trial < other.trial;
    }
};

// One worker's scratch state for the star-based sampler. Trials are keyed
// by index, so any thread may run any trial.
class StarSampler {
public:
    StarSampler(const SplitContext& ctx, const StarDecomposition& dec)
        : ctx_(ctx), dec_(dec), n_(ctx.stripped.n()) {
        side_.resize(n_);
        is_x_.assign(n_, 0);
        for (int v : ctx.x1) is_x_[v] = 1;
        for (int v : ctx.x2) is_x_[v] = 1;
    }

    void run_trial(long long t, std::uint64_t seed, long long& pre12,
                   long long& pre21, TrialOutcome& best) {
        SplitRng rng(seed, rng_domain::kBisectionTrial,
                     static_cast<std::uint64_t>(t));
        for (int v : ctx_.x1) side_[v] = 0;
        for (int v : ctx_.x2) side_[v] = 1;
        for (const Star& star : dec_.stars) {
            char s = rng.next_bit() ? 1 : 0;
            side_[star.center] = s;
            for (int l : star.leaves) side_[l] = static_cast<char>(1 - s);
        }
        for (int v : dec_.independent) side_[v] = rng.next_bit() ? 1 : 0;

        long long e12 = 0, e21 = 0;
        for (auto [u, v] : ctx_.stripped.arcs()) {
            if (side_[u] == 0) {
                if (side_[v] == 1) ++e12;
            } else if (side_[v] == 0) {
                ++e21;
            }
        }
        pre12 = e12;
        pre21 = e21;

        long long moved = 0;
        bool cap_fallback = false, moved_fixed = false;
        rebalance(e12, e21, moved, cap_fallback, moved_fixed);

        TrialOutcome candidate;
        candidate.obj = std::min(e12, e21);
        candidate.obj_full = candidate.obj;
        candidate.trial = t;
        if (ctx_.m != ctx_.m_original) {
            // Stripped ties are common when X is fat; rank them by the cut
            // the caller actually reports.
            long long o12 = 0, o21 = 0;
            for (auto [u, v] : ctx_.original.arcs()) {
                if (side_[u] == 0) {
                    if (side_[v] == 1) ++o12;
                } else if (side_[v] == 0) {
                    ++o21;
                }
            }
            candidate.obj_full = std::min(o12, o21);
        }
        if (candidate.better_than(best)) {
            best.obj = candidate.obj;
            best.obj_full = candidate.obj_full;
            best.trial = t;
            best.side = side_;
            best.moved = moved;
            best.cap_fallback = cap_fallback;
            best.moved_fixed = moved_fixed;
        }
    }

private:
    // Effect on (e12, e21) of flipping v to the other side.
    std::pair<long long, long long> move_delta(int v) const {
        long long d12 = 0, d21 = 0;
        char sv = side_[v];
        for (int u : ctx_.stripped.out_neighbors(v)) {
            char su = side_[u];
            if (sv == 0) {
                if (su == 1) --d12; else ++d21;
            } else {
                if (su == 0) --d21; else ++d12;
            }
        }
        for (int u : ctx_.stripped.in_neighbors(v)) {
            char su = side_[u];
            if (sv == 0) {
                if (su == 1) --d21; else ++d12;
            } else {
                if (su == 0) --d12; else ++d21;
            }
        }
        return {d12, d21};
    }

    void rebalance(long long& e12, long long& e21, long long& moved,
                   bool& cap_fallback, bool& moved_fixed) {
        long long cnt1 = 0;
        for (int v = 0; v < n_; ++v)
            if (side_[v] == 1) ++cnt1;
        long long cnt0 = n_ - cnt1;

        while (std::llabs(cnt0 - cnt1) > 1) {
            char from = cnt0 > cnt1 ? 0 : 1;
            int best_v = -1;
            long long best_obj = 0;
            std::pair<long long, long long> best_delta{0, 0};
            bool used_cap_fallback = false, used_fixed = false;
            // Preferred movers: low-degree vertices outside X (degree
            // within 4 m/n); then any Y vertex; X vertices only as a last
            // resort since they are meant to stay pinned.
            for (int pass = 0; pass < 3 && best_v < 0; ++pass) {
                for (int v = 0; v < n_; ++v) {
                    if (side_[v] != from) continue;
                    if (pass < 2 && is_x_[v]) continue;
                    if (pass == 0 &&
                        static_cast<long long>(ctx_.stripped.degree(v)) * n_ >
                            4 * ctx_.m)
                        continue;
                    auto delta = move_delta(v);
                    long long obj =
                        std::min(e12 + delta.first, e21 + delta.second);
                    if (best_v < 0 || obj > best_obj) {
                        best_v = v;
                        best_obj = obj;
                        best_delta = delta;
                    }
                }
                if (best_v >= 0) {
                    used_cap_fallback = pass >= 1;
                    used_fixed = pass >= 2;
                }
            }
            if (best_v < 0) break;  // nothing movable; should not happen
            side_[best_v] = static_cast<char>(1 - from);
            e12 += best_delta.first;
            e21 += best_delta.second;
            if (from == 0) { --cnt0; ++cnt1; } else { ++cnt0; --cnt1; }
            ++moved;
            cap_fallback = cap_fallback || used_cap_fallback;
            moved_fixed = moved_fixed || used_fixed;
        }
    }

    const SplitContext& ctx_;
    const StarDecomposition& dec_;
    int n_;
    std::vector<char> side_;
    std::vector<char> is_x_;
};

template <typename RunTrial>
TrialOutcome run_parallel_trials(long long trials, int threads, RunTrial&& make_worker) {
    threads = std::max(1, threads);
    threads = static_cast<int>(
        std::min<long long>(threads, std::max<long long>(trials, 1)));
    std::vector<TrialOutcome> bests(static_cast<std::size_t>(threads));
    long long per = (trials + threads - 1) / threads;
    if (threads == 1) {
        make_worker()(0, trials, bests[0]);
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < threads; ++j) {
            long long lo = j * per, hi = std::min<long long>(trials, (j + 1) * per);
            pool.emplace_back([&, j, lo, hi] { make_worker()(lo, hi, bests[j]); });
        }
        for (auto& th : pool) th.join();
    }
    TrialOutcome best;
    for (auto& cand : bests)
        if (cand.trial >= 0 && cand.better_than(best)) best = std::move(cand);
    return best;
}

std::vector<int> side_to_part(const std::vector<char>& side, char which) {
    std::vector<int> out;
    for (int v = 0; v < static_cast<int>(side.size()); ++v)
        if (side[v] == which) out.push_back(v);
    return out;
}

void fill_moment_stats(const std::vector<long long>& pre12,
                       const std::vector<long long>& pre21, TrialStats& stats) {
    long long t = static_cast<long long>(pre12.size());
    stats.trials = t;
    if (t == 0) return;
    long double s12 = 0, s21 = 0;
    for (long long i = 0; i < t; ++i) {
        s12 += pre12[i];
        s21 += pre21[i];
    }
    stats.mean_e12 = static_cast<double>(s12 / t);
    stats.mean_e21 = static_cast<double>(s21 / t);
    if (t > 1) {
        long double v12 = 0, v21 = 0;
        for (long long i = 0; i < t; ++i) {
            long double d1 = pre12[i] - stats.mean_e12;
            long double d2 = pre21[i] - stats.mean_e21;
            v12 += d1 * d1;
            v21 += d2 * d2;
        }
        stats.std_e12 = static_cast<double>(std::sqrt(v12 / (t - 1)));
        stats.std_e21 = static_cast<double>(std::sqrt(v21 / (t - 1)));
    }
}

} // namespace

std::pair<Bisection, TrialStats> randomized_bisection(const SplitContext& ctx,
                                                      const StarDecomposition& dec,
                                                      long long trials,
                                                      std::uint64_t seed,
                                                      int threads) {
    if (trials <= 0) throw GuardError("randomized_bisection: trials must be >= 1");
    detail::build_cell_map(ctx.stripped.n(), ctx.x1, ctx.x2, dec);

    std::vector<long long> pre12(static_cast<std::size_t>(trials));
    std::vector<long long> pre21(static_cast<std::size_t>(trials));
    TrialOutcome best = run_parallel_trials(trials, threads, [&] {
        return [&](long long lo, long long hi, TrialOutcome& out) {
            StarSampler sampler(ctx, dec);
            for (long long t = lo; t < hi; ++t)
                sampler.run_trial(t, seed, pre12[static_cast<std::size_t>(t)],
                                  pre21[static_cast<std::size_t>(t)], out);
        };
    });

    Bisection bis;
    bis.part1 = side_to_part(best.side, 0);
    bis.part2 = side_to_part(best.side, 1);
    bis.stats = cut_sizes(ctx.stripped, bis.part1, bis.part2);
    if (std::min(bis.stats.e12, bis.stats.e21) != best.obj)
        throw Error("randomized_bisection: winner re-count mismatch");

    TrialStats stats;
    fill_moment_stats(pre12, pre21, stats);
    stats.winning_trial = best.trial;
    stats.winner_pre_e12 = pre12[static_cast<std::size_t>(best.trial)];
    stats.winner_pre_e21 = pre21[static_cast<std::size_t>(best.trial)];
    stats.moved_vertices = best.moved;
    stats.degree_cap_fallback = best.cap_fallback;
    stats.moved_fixed_vertex = best.moved_fixed;
    return {std::move(bis), stats};
}

Bisection dense_random_bisection(const Digraph& d, double epsilon,
                                 long long trials, std::uint64_t seed,
                                 int threads, bool* hypothesis_holds) {
    if (trials <= 0) throw GuardError("dense_random_bisection: trials must be >= 1");
    if (d.n() == 0) throw GuardError("dense_random_bisection: empty digraph");
    if (epsilon <= 0) throw GuardError("dense_random_bisection: epsilon must be > 0");

    if (hypothesis_holds) {
        DegreeProfile profile = degree_profile(d);
        double m = static_cast<double>(d.m());
        double n = static_cast<double>(d.n());
        *hypothesis_holds = m >= 16.0 * n / (epsilon * epsilon) ||
                            static_cast<double>(profile.max_degree()) <=
                                epsilon * epsilon * m / 8.0;
    }

    int n = d.n();
    int half = (n + 1) / 2;
    TrialOutcome best = run_parallel_trials(trials, threads, [&] {
        return [&, n, half](long long lo, long long hi, TrialOutcome& out) {
            std::vector<int> perm(static_cast<std::size_t>(n));
            std::vector<char> side(static_cast<std::size_t>(n));
            for (long long t = lo; t < hi; ++t) {
                SplitRng rng(seed, rng_domain::kDenseTrial,
                             static_cast<std::uint64_t>(t));
                std::iota(perm.begin(), perm.end(), 0);
                shuffle(perm, rng);
                for (int i = 0; i < n; ++i)
                    side[perm[i]] = i < half ? 0 : 1;
                long long e12 = 0, e21 = 0;
                for (auto [u, v] : d.arcs()) {
                    if (side[u] == 0) {
                        if (side[v] == 1) ++e12;
                    } else if (side[v] == 0) {
                        ++e21;
                    }
                }
                TrialOutcome cand;
                cand.obj = std::min(e12, e21);
                cand.obj_full = cand.obj;
                cand.trial = t;
                if (cand.better_than(out)) {
                    out.obj = cand.obj;
                    out.obj_full = cand.obj_full;
                    out.trial = t;
                    out.side = side;
                }
            }
        };
    });

    Bisection bis;
    bis.part1 = side_to_part(best.side, 0);
    bis.part2 = side_to_part(best.side, 1);
    bis.stats = cut_sizes(d, bis.part1, bis.part2);
    return bis;
}

bool Certificate::all_required_pass() const {
    for (const auto& r : records)
        if (r.applicable && r.required && !r.pass) return false;
    return true;
}

namespace {

StarDecomposition remap_decomposition(const StarDecomposition& dec,
                                      const std::vector<int>& map) {
    StarDecomposition out;
    out.tight_count = dec.tight_count;
    out.a_size = dec.a_size;
    out.independent_bound_holds = dec.independent_bound_holds;
    for (const Star& star : dec.stars) {
        Star s;
        s.center = map[star.center];
        s.partner = map[star.partner];
        for (int l : star.leaves) s.leaves.push_back(map[l]);
        std::sort(s.leaves.begin(), s.leaves.end());
        out.stars.push_back(std::move(s));
    }
    for (int v : dec.independent) out.independent.push_back(map[v]);
    std::sort(out.independent.begin(), out.independent.end());
    return out;
}

} // namespace

PipelineSetup build_pipeline(const Digraph& d, const EngineConfig& cfg) {
    if (d.n() == 0) throw GuardError("build_pipeline: empty digraph");
    if (!(cfg.epsilon > 0.0 && cfg.epsilon < 0.25))
        throw GuardError("build_pipeline: epsilon must lie in (0, 1/4)");

    PipelineSetup setup;
    GapOptions gap_opt;
    gap_opt.sum_budget = cfg.gap_sum_budget;
    gap_opt.seed = cfg.seed;

    setup.ctx = prepare_split(d, cfg.threshold);
    SplitContext& ctx = setup.ctx;
    choose_gap_partition(ctx, gap_opt);

    auto [dy, ymap] = induced_subdigraph(ctx.stripped, ctx.y_verts);
    UndirectedGraph gy = underlying_graph(dy);
    setup.components = essential_components(dy);
    attach_components(ctx, setup.components);

    Matching m0 = maximum_matching(gy);
    RefineOptions refine_opt;
    refine_opt.restarts = cfg.refine_restarts;
    refine_opt.seed = cfg.seed;
    setup.refined = refine_matching(gy, &dy, m0, refine_opt);

    // A: low-degree side vertices whose full-graph degree still tops
    // 2C/eps with C = m/n; stars may keep at most one of these as a leaf.
    std::vector<int> a_set;
    double a_cut = 2.0 * (static_cast<double>(ctx.m) / d.n()) / cfg.epsilon;
    for (std::size_t i = 0; i < ymap.size(); ++i)
        if (static_cast<double>(ctx.stripped.degree(ymap[i])) >= a_cut)
            a_set.push_back(static_cast<int>(i));

    StarOptions star_opt;
    star_opt.tight_count = setup.components.tau_star;
    StarDecomposition dec_y;
    bool dec_done = false;
    for (int attempt = 0; !dec_done; ++attempt) {
        try {
            star_opt.allow_independent_overflow = attempt >= 3;
            dec_y = star_decomposition(gy, a_set, setup.refined, star_opt);
            dec_done = true;
            if (attempt >= 3)
                setup.warnings.push_back(
                    "star decomposition independent set exceeds its bound; "
                    "matching refinement fell short of the optimum");
        } catch (const DecompositionError&) {
            if (attempt >= 3) throw;
            refine_opt.restarts = std::min(refine_opt.restarts * 4, 320);
            refine_opt.seed = cfg.seed ^ (0x9e3779b97f4a7c15ULL *
                                          static_cast<std::uint64_t>(attempt + 1));
            setup.refined = refine_matching(gy, &dy, m0, refine_opt);
        }
    }
    setup.stars = remap_decomposition(dec_y, ymap);
    setup.y_map = std::move(ymap);
    return setup;
}

PartitionResult optimal_bisect(const Digraph& d, const EngineConfig& cfg) {
    if (d.n() == 0) throw GuardError("optimal_bisect: empty digraph");
    if (!(cfg.epsilon > 0.0 && cfg.epsilon < 0.25))
        throw GuardError("optimal_bisect: epsilon must lie in (0, 1/4)");

    long long trials = cfg.trials > 0 ? cfg.trials : auto_trials(cfg.epsilon);
    int threads = cfg.threads > 0
                      ? cfg.threads
                      : std::max(1u, std::thread::hardware_concurrency());

    PartitionResult res;
    Certificate& cert = res.certificate;
    cert.epsilon = cfg.epsilon;
    cert.trials = trials;
    cert.seed = cfg.seed;
    cert.threads = threads;
    cert.n = d.n();
    cert.m_original = d.m();

    DegreeProfile profile = degree_profile(d);
    cert.d = profile.min_semidegree();
    if (d.n() < 50)
        cert.warnings.push_back(
            "n < 50: the guaranteed ratio carries little weight at this size");
    if (cert.d == 0)
        cert.warnings.push_back(
            "minimum semidegree is 0: the guaranteed ratio is vacuous");

    long long denom = 2 * cert.d + 1;
    bool dense = d.m() >= cfg.dense_constant * denom * denom * d.n();

    if (dense) {
        cert.mode = "dense";
        cert.m_stripped = d.m();
        double eps_dense = 1.0 / (4.0 * static_cast<double>(denom));
        bool hyp = false;
        res.bisection =
            dense_random_bisection(d, eps_dense, trials, cfg.seed, threads, &hyp);
        res.stats_stripped = res.bisection.stats;

        InequalityRecord hrec;
        hrec.name = "dense_hypothesis";
        hrec.lhs = static_cast<double>(d.m());
        hrec.rhs = 16.0 * d.n() / (eps_dense * eps_dense);
        hrec.pass = hyp;
        hrec.applicable = true;
        hrec.required = false;
        hrec.note = "m >= 16n/eps^2 or max degree <= eps^2 m/8, eps = 1/(4(2d+1))";
        cert.records.push_back(hrec);
        if (!hyp)
            cert.warnings.push_back(
                "dense sampling used although neither density hypothesis holds");

        double target = (0.25 - eps_dense) * static_cast<double>(d.m());
        InequalityRecord trec;
        trec.name = "dense_target_ratio";
        trec.lhs = static_cast<double>(res.bisection.stats.min_dir());
        trec.rhs = target;
        trec.pass = static_cast<double>(res.bisection.stats.min_dir()) >= target;
        trec.applicable = true;
        trec.required = false;
        trec.note = "sampled best vs (1/4 - eps) m";
        cert.records.push_back(trec);
        if (!trec.pass)
            cert.warnings.push_back("sampling fell short of the dense-mode target");
    } else {
        cert.mode = "pipeline";
        PipelineSetup setup = build_pipeline(d, cfg);
        SplitContext& ctx = setup.ctx;
        const StarDecomposition& dec = setup.stars;
        for (const auto& w : setup.warnings) cert.warnings.push_back(w);

        auto [bis, tstats] = randomized_bisection(ctx, dec, trials, cfg.seed, threads);
        res.stats_stripped = bis.stats;
        res.bisection.part1 = std::move(bis.part1);
        res.bisection.part2 = std::move(bis.part2);
        res.bisection.stats = cut_sizes(d, res.bisection.part1, res.bisection.part2);

        cert.has_split = true;
        cert.m_stripped = ctx.m;
        cert.theta = ctx.theta;
        cert.tau = ctx.tau;
        cert.tau_star = ctx.tau_star;
        cert.sigma = ctx.sigma;
        cert.alpha = ctx.alpha;
        cert.beta = ctx.beta;
        cert.b = ctx.b;
        cert.g = ctx.g;
        cert.delta1 = ctx.delta1();
        cert.x_size = static_cast<long long>(ctx.x_verts.size());
        cert.y_size = static_cast<long long>(ctx.y_verts.size());
        cert.gap_mode = ctx.gap_mode == GapMode::Exact ? "exact" : "local";
        cert.star_bound_holds = dec.independent_bound_holds;
        cert.trial_stats = tstats;
        cert.expected = expected_cut(ctx, dec);
        cert.records = evaluate_inequalities(ctx);

        const std::vector<int>& ymap = setup.y_map;
        for (auto [u, v] : setup.refined.edges)
            cert.matching.edges.emplace_back(std::min(ymap[u], ymap[v]),
                                             std::max(ymap[u], ymap[v]));
        for (int v : setup.refined.cls.free) cert.matching.free.push_back(ymap[v]);
        for (int v : setup.refined.cls.nonfree)
            cert.matching.nonfree.push_back(ymap[v]);
        for (auto [u, v] : setup.refined.special)
            cert.matching.special.emplace_back(std::min(ymap[u], ymap[v]),
                                               std::max(ymap[u], ymap[v]));
        std::sort(cert.matching.edges.begin(), cert.matching.edges.end());
        std::sort(cert.matching.free.begin(), cert.matching.free.end());
        std::sort(cert.matching.nonfree.begin(), cert.matching.nonfree.end());
        std::sort(cert.matching.special.begin(), cert.matching.special.end());
        for (std::size_t i = 0; i < setup.components.components.size(); ++i) {
            cert.components.sizes.push_back(
                static_cast<long long>(setup.components.components[i].size()));
            cert.components.tight.push_back(setup.components.is_tight[i]);
            cert.components.antiparallel.push_back(
                setup.components.has_antiparallel[i]);
            cert.components.essential.push_back(setup.components.is_essential[i]);
        }
        if (tstats.degree_cap_fallback)
            cert.warnings.push_back(
                "rebalancing moved a vertex above the 4m/n degree cap");
        if (tstats.moved_fixed_vertex)
            cert.warnings.push_back(
                "rebalancing moved a pinned high-degree vertex across the cut");
    }

    cert.ratio_original =
        cert.m_original > 0
            ? static_cast<double>(res.bisection.stats.min_dir()) /
                  static_cast<double>(cert.m_original)
            : 0.0;
    cert.ratio_stripped =
        cert.m_stripped > 0
            ? static_cast<double>(res.stats_stripped.min_dir()) /
                  static_cast<double>(cert.m_stripped)
            : 0.0;
    return res;
}

} // namespace disect
