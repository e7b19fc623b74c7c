#pragma once

#include <array>
#include <cstdint>
#include <utility>

namespace ddlab {

// Philox4x32-10 counter-based generator (Salmon et al. layout, Random123
// constants). Stateless block function plus a small stream wrapper.
using philox_counter = std::array<std::uint32_t, 4>;
using philox_key = std::array<std::uint32_t, 2>;

philox_counter philox4x32(philox_counter ctr, philox_key key) noexcept;

// Independent stream keyed by (seed, stream id). Draws walk the counter, so
// stream i never touches stream j's blocks.
class PhiloxStream {
public:
    PhiloxStream(std::uint64_t seed, std::uint64_t stream) noexcept;

    std::uint32_t next_u32() noexcept;
    std::uint64_t next_u64() noexcept;

    // Uniform in (0, 1): never returns 0 or 1.
    double uniform() noexcept;

    // Standard normal pair via Box-Muller.
    std::pair<double, double> normal_pair() noexcept;
    double normal() noexcept;

private:
    void refill() noexcept;

    philox_key key_{};
    philox_counter ctr_{};
    philox_counter block_{};
    int used_{4};
    bool has_spare_{false};
    double spare_{0.0};
};

}  // namespace ddlab
