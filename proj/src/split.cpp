#include <algorithm>
#include <cmath>

#include "disect/partition_engine.hpp"

namespace disect {

namespace {

// Least integer t with t^4 >= n^3, i.e. ceil(n^(3/4)) without
// floating-point edge cases.
long long degree_threshold(long long n) {
    if (n <= 1) return n;
    long long t = static_cast<long long>(
        std::floor(std::pow(static_cast<double>(n), 0.75)));
    t = std::max<long long>(t - 2, 0);
    auto big_enough = [&](long long c) {
        unsigned long long c2 = static_cast<unsigned long long>(c) * c;
        return c2 * c2 >= static_cast<unsigned long long>(n) * n * n;
    };
    while (!big_enough(t)) ++t;
    return t;
}

} // namespace

SplitContext prepare_split(const Digraph& d, std::optional<long long> threshold) {
    SplitContext ctx;
    ctx.original = d;
    ctx.m_original = d.m();
    int n = d.n();
    ctx.threshold = threshold ? *threshold : degree_threshold(n);

    DegreeProfile orig_profile = degree_profile(d);
    ctx.d = n == 0 ? 0 : orig_profile.min_semidegree();

    std::vector<char> in_x(n, 0);
    for (int v = 0; v < n; ++v) {
        if (d.degree(v) >= ctx.threshold) {
            in_x[v] = 1;
            ctx.x_verts.push_back(v);
        } else {
            ctx.y_verts.push_back(v);
        }
    }

    std::vector<Arc> kept;
    kept.reserve(static_cast<std::size_t>(d.m()));
    for (auto [u, v] : d.arcs())
        if (!(in_x[u] && in_x[v])) kept.emplace_back(u, v);
    ctx.stripped = Digraph(n, std::move(kept));
    ctx.m = ctx.stripped.m();

    for (int v : ctx.x_verts) {
        long long out = ctx.stripped.out_degree(v);
        long long in = ctx.stripped.in_degree(v);
        ctx.splus_x.push_back(out - in);
        ctx.b += std::min(out, in);
    }
    for (auto [u, v] : ctx.stripped.arcs()) {
        if (in_x[u] && !in_x[v]) ++ctx.e_xy;
        else if (!in_x[u] && in_x[v]) ++ctx.e_yx;
    }
    return ctx;
}

void choose_gap_partition(SplitContext& ctx, const GapOptions& opt) {
    GapResult gap = min_gap_partition(ctx.splus_x, opt);
    ctx.gap_mode = gap.mode;
    ctx.theta = gap.theta;
    ctx.x1.clear();
    ctx.x2.clear();
    for (int idx : gap.part1) ctx.x1.push_back(ctx.x_verts[idx]);
    for (int idx : gap.part2) ctx.x2.push_back(ctx.x_verts[idx]);
    std::sort(ctx.x1.begin(), ctx.x1.end());
    std::sort(ctx.x2.begin(), ctx.x2.end());

    ctx.huge_s.clear();
    ctx.g = 0;
    for (long long sp : ctx.splus_x) {
        long long s = sp < 0 ? -sp : sp;
        if (s >= ctx.theta)
            ctx.huge_s.push_back(s);
        else
            ctx.g += s;
    }
    std::sort(ctx.huge_s.begin(), ctx.huge_s.end(), std::greater<>());
    ctx.alpha = static_cast<long long>(ctx.huge_s.size());
    ctx.beta = (ctx.alpha + 1) / 2;
}

void attach_components(SplitContext& ctx, const ComponentReport& rep) {
    ctx.tau = rep.tau;
    ctx.tau_star = rep.tau_star;
    ctx.sigma = rep.sigma;
}

namespace {

InequalityRecord record(std::string name, double lhs, double rhs, bool pass,
                        bool applicable, bool required, std::string note = "") {
    InequalityRecord r;
    r.name = std::move(name);
    r.lhs = lhs;
    r.rhs = rhs;
    r.pass = pass;
    r.applicable = applicable;
    r.required = required;
    r.note = std::move(note);
    return r;
}

} // namespace

std::vector<InequalityRecord> evaluate_inequalities(const SplitContext& ctx) {
    if (ctx.gap_mode == GapMode::Unset)
        throw GuardError("evaluate_inequalities: gap partition not chosen");
    if (ctx.tau < 0)
        throw GuardError("evaluate_inequalities: components not attached");

    const bool exact = ctx.gap_mode == GapMode::Exact;
    const long long d = ctx.d;
    const long long denom = 2 * d + 1;
    const long long m = ctx.m;
    const long long n = ctx.original.n();
    const long long y_size = static_cast<long long>(ctx.y_verts.size());
    const long long theta = ctx.theta;
    const long long tau = ctx.tau;
    const long long beta = ctx.beta;
    const long long b = ctx.b;
    const long long g = ctx.g;
    const long long delta1 = ctx.delta1();
    const long long cut_min = std::min(ctx.e_xy, ctx.e_yx);
    const long long cut_max = std::max(ctx.e_xy, ctx.e_yx);

    const bool shortcut = theta * denom <= m;

    // Forward vertices: placed on the side their surplus points to.
    long long min_forward_s = -1;
    {
        std::vector<char> in_x1(ctx.original.n(), 0);
        for (int v : ctx.x1) in_x1[v] = 1;
        for (std::size_t i = 0; i < ctx.x_verts.size(); ++i) {
            long long sp = ctx.splus_x[i];
            bool forward = (in_x1[ctx.x_verts[i]] && sp > 0) ||
                           (!in_x1[ctx.x_verts[i]] && sp < 0);
            if (!forward) continue;
            long long s = sp < 0 ? -sp : sp;
            if (min_forward_s < 0 || s < min_forward_s) min_forward_s = s;
        }
    }

    std::vector<InequalityRecord> recs;

    recs.push_back(record(
        "gap_shortcut", static_cast<double>(theta),
        static_cast<double>(m) / static_cast<double>(denom), shortcut, true,
        false,
        shortcut ? "gap small enough; the margin bound is immediate"
                 : "gap exceeds m/(2d+1); the full inequality chain applies"));

    if (exact) {
        bool vacuous = min_forward_s < 0;
        recs.push_back(record(
            "forward_vertices_huge",
            vacuous ? static_cast<double>(theta) : static_cast<double>(min_forward_s),
            static_cast<double>(theta), vacuous || min_forward_s >= theta, true,
            true, vacuous ? "no forward vertices" : ""));
        recs.push_back(record(
            "forward_margin",
            vacuous ? static_cast<double>(theta + g)
                    : static_cast<double>(min_forward_s),
            static_cast<double>(theta + g),
            vacuous || min_forward_s >= theta + g, true, true,
            vacuous ? "no forward vertices" : ""));
    } else {
        recs.push_back(record("forward_vertices_huge", 0, 0, true, false, false,
                              "not applicable in local gap mode"));
        recs.push_back(record("forward_margin", 0, 0, true, false, false,
                              "not applicable in local gap mode"));
    }

    recs.push_back(record("essential_component_bound",
                          static_cast<double>(denom * tau),
                          static_cast<double>(y_size + 2 * cut_min),
                          denom * tau <= y_size + 2 * cut_min, true, true));

    recs.push_back(record("cross_max_bound", static_cast<double>(cut_max),
                          static_cast<double>(beta * theta + b),
                          cut_max >= beta * theta + b, true, true));

    {
        long long rhs = 2 * beta * delta1 - (beta + 1) * theta + b;
        recs.push_back(record("cross_min_bound", static_cast<double>(cut_min),
                              static_cast<double>(rhs), cut_min <= rhs, true,
                              exact,
                              exact ? "" : "not guaranteed in local gap mode"));
    }

    {
        long long sum_delta = 0;
        for (long long s : ctx.huge_s) sum_delta += s;
        long long rhs = sum_delta + g + 2 * b;
        recs.push_back(record("cross_identity",
                              static_cast<double>(ctx.e_xy + ctx.e_yx),
                              static_cast<double>(rhs),
                              ctx.e_xy + ctx.e_yx == rhs, true, true));
    }

    recs.push_back(record("arc_mass_bound", static_cast<double>(m),
                          static_cast<double>(beta * theta + b + d * y_size),
                          m >= beta * theta + b + d * y_size, true, true));

    if (exact && !shortcut) {
        bool pass = ctx.alpha >= 1 && ctx.alpha * theta <= m && ctx.alpha < denom;
        recs.push_back(record("huge_count_bound", static_cast<double>(ctx.alpha),
                              static_cast<double>(denom), pass, true, true,
                              "1 <= alpha <= m/theta < 2d+1"));
    } else {
        recs.push_back(record("huge_count_bound", static_cast<double>(ctx.alpha), 0,
                              true, false, false,
                              shortcut ? "only meaningful when the gap exceeds m/(2d+1)"
                                       : "not applicable in local gap mode"));
    }

    {
        // 2(2d+1) (m/(2d+1) + n/2 - theta - tau/2), kept in integers.
        long long value = 2 * m + denom * n - 2 * denom * theta - denom * tau;
        bool required = exact || shortcut;
        recs.push_back(record("margin_nonneg", static_cast<double>(value), 0,
                              value >= 0, true, required,
                              required ? "" : "not guaranteed in local gap mode"));
    }

    if (exact && !shortcut) {
        long long value = 4 * d * y_size - 4 * beta * delta1 - 4 * (d - beta) * theta;
        recs.push_back(record("margin_decomposition", static_cast<double>(value), 0,
                              value >= 0, true, true));
    } else {
        recs.push_back(record("margin_decomposition", 0, 0, true, false, false,
                              shortcut ? "only meaningful when the gap exceeds m/(2d+1)"
                                       : "not applicable in local gap mode"));
    }

    return recs;
}

} // namespace disect
