#include <algorithm>
#include <cstdint>
#include <numeric>

#include "disect/partition_engine.hpp"
#include "disect/rng.hpp"

namespace disect {

namespace {

struct Item {
    long long magnitude;
    int index;  // position in the caller's list
};

// sign[i] == +1 places item i's magnitude on the part1 side.
struct SignedSolution {
    std::vector<int> signs;
    long long gap = 0;  // |sum of signed magnitudes|
    GapMode mode = GapMode::Exact;
};

SignedSolution solve_meet_in_middle(const std::vector<Item>& items) {
    std::size_t half = items.size() / 2;
    std::size_t na = items.size() - half;  // first na items in side A
    std::size_t nb = half;

    auto enumerate = [&](std::size_t offset, std::size_t count) {
        std::vector<std::pair<long long, std::uint32_t>> sums;
        sums.reserve(1ull << count);
        for (std::uint32_t mask = 0; mask < (1u << count); ++mask) {
            long long s = 0;
            for (std::size_t i = 0; i < count; ++i)
                s += ((mask >> i) & 1u) ? items[offset + i].magnitude
                                        : -items[offset + i].magnitude;
            sums.emplace_back(s, mask);
        }
        return sums;
    };

    auto a_sums = enumerate(0, na);
    auto b_sums = enumerate(na, nb);
    std::sort(b_sums.begin(), b_sums.end());

    long long best = -1;
    std::uint32_t best_a = 0, best_b = 0;
    for (auto [sa, ma] : a_sums) {
        auto it = std::lower_bound(b_sums.begin(), b_sums.end(),
                                   std::make_pair(-sa, 0u));
        for (int probe = 0; probe < 2; ++probe) {
            auto cand = it;
            if (probe == 1) {
                if (cand == b_sums.begin()) continue;
                --cand;
            }
            if (cand == b_sums.end()) continue;
            long long total = sa + cand->first;
            long long mag = total < 0 ? -total : total;
            if (best < 0 || mag < best) {
                best = mag;
                best_a = ma;
                best_b = cand->second;
            }
        }
        if (best == 0) break;
    }

    SignedSolution sol;
    sol.signs.resize(items.size());
    for (std::size_t i = 0; i < na; ++i)
        sol.signs[i] = (best_a >> i) & 1u ? 1 : -1;
    for (std::size_t i = 0; i < nb; ++i)
        sol.signs[na + i] = (best_b >> i) & 1u ? 1 : -1;
    sol.gap = best;
    return sol;
}

SignedSolution solve_bitset_dp(const std::vector<Item>& items, long long total) {
    // Reachable subset sums, one row per prefix so the witness can be
    // walked back. Row i covers sums over the first i items.
    std::size_t words = static_cast<std::size_t>(total / 64 + 1);
    std::vector<std::vector<std::uint64_t>> rows(items.size() + 1,
                                                 std::vector<std::uint64_t>(words, 0));
    auto test = [&](const std::vector<std::uint64_t>& row, long long bit) {
        return (row[static_cast<std::size_t>(bit >> 6)] >>
                (static_cast<std::uint64_t>(bit) & 63)) & 1ull;
    };
    rows[0][0] = 1;
    for (std::size_t i = 0; i < items.size(); ++i) {
        const auto& prev = rows[i];
        auto& cur = rows[i + 1];
        long long shift = items[i].magnitude;
        std::size_t word_shift = static_cast<std::size_t>(shift >> 6);
        unsigned bit_shift = static_cast<unsigned>(shift & 63);
        for (std::size_t w = words; w-- > 0;) {
            std::uint64_t moved = 0;
            if (w >= word_shift) {
                moved = prev[w - word_shift] << bit_shift;
                if (bit_shift != 0 && w > word_shift)
                    moved |= prev[w - word_shift - 1] >> (64 - bit_shift);
            }
            cur[w] = prev[w] | moved;
        }
    }

    long long best_subset = -1;
    for (long long t = total / 2; t >= 0; --t) {
        if (test(rows[items.size()], t)) {
            best_subset = t;
            break;
        }
    }

    SignedSolution sol;
    sol.signs.assign(items.size(), -1);
    long long remaining = best_subset;
    for (std::size_t i = items.size(); i-- > 0;) {
        if (test(rows[i], remaining)) continue;  // item i not in the subset
        sol.signs[i] = 1;
        remaining -= items[i].magnitude;
    }
    // The chosen subset is the lighter side; put it on part1 and flip later
    // if needed.
    sol.gap = total - 2 * best_subset;
    for (auto& s : sol.signs) s = -s;  // heavier complement on part1
    return sol;
}

SignedSolution solve_local_search(const std::vector<Item>& items,
                                  const GapOptions& opt) {
    std::size_t count = items.size();
    SignedSolution best;
    best.mode = GapMode::Local;
    best.gap = -1;

    auto descend = [&](std::vector<int>& signs) {
        long long cur = 0;
        for (std::size_t i = 0; i < count; ++i)
            cur += signs[i] * items[i].magnitude;
        while (true) {
            long long cur_mag = cur < 0 ? -cur : cur;
            long long best_new = cur_mag;
            int best_idx = -1;
            for (std::size_t i = 0; i < count; ++i) {
                long long flipped = cur - 2 * signs[i] * items[i].magnitude;
                long long mag = flipped < 0 ? -flipped : flipped;
                if (mag < best_new) {
                    best_new = mag;
                    best_idx = static_cast<int>(i);
                }
            }
            if (best_idx < 0) return cur < 0 ? -cur : cur;
            cur -= 2 * signs[best_idx] * items[best_idx].magnitude;
            signs[best_idx] = -signs[best_idx];
        }
    };

    // Start 0: greedy differencing, largest first onto the lighter side.
    {
        std::vector<std::size_t> order(count);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return items[a].magnitude > items[b].magnitude;
        });
        std::vector<int> signs(count, 1);
        long long sum = 0;
        for (std::size_t idx : order) {
            signs[idx] = sum > 0 ? -1 : 1;
            sum += signs[idx] * items[idx].magnitude;
        }
        long long gap = descend(signs);
        best.signs = signs;
        best.gap = gap;
    }
    for (int start = 1; start < opt.local_starts && best.gap > 0; ++start) {
        SplitRng rng(opt.seed, rng_domain::kGapStart,
                     static_cast<std::uint64_t>(start));
        std::vector<int> signs(count);
        for (auto& s : signs) s = rng.next_bit() ? 1 : -1;
        long long gap = descend(signs);
        if (gap < best.gap) {
            best.gap = gap;
            best.signs = signs;
        }
    }
    return best;
}

} // namespace

GapResult min_gap_partition(const std::vector<long long>& splus,
                            const GapOptions& opt) {
    std::vector<Item> items;
    std::vector<int> zero_indices;
    long long total_magnitude = 0;
    for (std::size_t i = 0; i < splus.size(); ++i) {
        long long mag = splus[i] < 0 ? -splus[i] : splus[i];
        if (mag == 0) {
            zero_indices.push_back(static_cast<int>(i));
        } else {
            items.push_back({mag, static_cast<int>(i)});
            total_magnitude += mag;
        }
    }

    SignedSolution sol;
    if (items.empty()) {
        sol.gap = 0;
        sol.mode = GapMode::Exact;
    } else if (static_cast<int>(items.size()) <= opt.mitm_max) {
        sol = solve_meet_in_middle(items);
    } else if (total_magnitude <= opt.sum_budget &&
               static_cast<long long>(items.size() + 1) *
                       (total_magnitude / 64 + 1) <=
                   12'500'000) {  // keeps the prefix rows within ~100 MB
        sol = solve_bitset_dp(items, total_magnitude);
    } else {
        sol = solve_local_search(items, opt);
    }

    // Map magnitude signs back to the original signed values: item i lands
    // in part1 exactly when sign_i * sgn(splus_i) is positive.
    GapResult res;
    res.mode = sol.mode;
    for (std::size_t i = 0; i < items.size(); ++i) {
        int idx = items[i].index;
        bool to_part1 = (sol.signs[i] > 0) == (splus[idx] > 0);
        (to_part1 ? res.part1 : res.part2).push_back(idx);
    }
    // Zero values do not affect the gap; spread them to balance the sizes.
    for (int idx : zero_indices) {
        (res.part1.size() <= res.part2.size() ? res.part1 : res.part2).push_back(idx);
    }
    std::sort(res.part1.begin(), res.part1.end());
    std::sort(res.part2.begin(), res.part2.end());

    long long theta = 0;
    for (int idx : res.part1) theta += splus[idx];
    for (int idx : res.part2) theta -= splus[idx];
    if (theta < 0) {
        std::swap(res.part1, res.part2);
        theta = -theta;
    }
    if (theta != sol.gap)
        throw Error("min_gap_partition: reconstructed gap mismatch");
    res.theta = theta;
    return res;
}

} // namespace disect
