#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace disect {

// Counter-based splittable random generator. A stream is keyed by
// (seed, domain, index); generators for distinct keys are independent and
// can be created in any order, so parallel trials reproduce exactly the
// sequence a serial run would see.
namespace rng_domain {
inline constexpr std::uint64_t kBisectionTrial = 1;
inline constexpr std::uint64_t kDenseTrial = 2;
inline constexpr std::uint64_t kRefineRestart = 3;
inline constexpr std::uint64_t kGapStart = 4;
inline constexpr std::uint64_t kGenerator = 5;
} // namespace rng_domain

class SplitRng {
public:
    SplitRng(std::uint64_t seed, std::uint64_t domain, std::uint64_t index)
        : state_(mix(mix(seed ^ 0x9e3779b97f4a7c15ULL, domain), index)) {}

    std::uint64_t next_u64() {
        // splitmix64 step
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    bool next_bit() { return (next_u64() >> 63) != 0; }

    /// Uniform value in [0, n). n must be positive.
    std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

    /// Uniform double in [0, 1).
    double next_unit() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

private:
    static std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
        std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

/// Fisher-Yates shuffle driven by a SplitRng.
template <typename T>
void shuffle(std::vector<T>& v, SplitRng& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(rng.next_below(i));
        std::swap(v[i - 1], v[j]);
    }
}

} // namespace disect
