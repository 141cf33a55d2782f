#pragma once

#include <cstdint>

namespace hamc {

/// 64-bit linear congruential generator with fixed, documented constants
/// so fixtures reproduce across languages:
///   state' = state * 6364136223846793005 + 1442695040888963407 (mod 2^64)
/// Each draw outputs the top 32 bits of the new state; ranges map through
/// a 64-bit multiply-shift.
class Lcg {
public:
    explicit Lcg(std::uint64_t seed) : state_(seed) {}

    std::uint32_t next_u32() {
        state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<std::uint32_t>(state_ >> 32);
    }

    /// Uniform draw from [lo, hi], inclusive. Requires lo <= hi.
    int next_in_range(int lo, int hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<int>((static_cast<std::uint64_t>(next_u32()) * span) >> 32);
    }

private:
    std::uint64_t state_;
};

}  // namespace hamc
