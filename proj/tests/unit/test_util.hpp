#pragma once

#include <random>

#include "ddlab/phase_space.hpp"

namespace ddlab::test {

inline DoubledState random_state(std::mt19937_64& rng, double lo, double hi) {
    std::uniform_real_distribution<double> d(lo, hi);
    return {d(rng), d(rng), d(rng), d(rng)};
}

inline double max_abs_diff(const DoubledState& a, const DoubledState& b) {
    double m = 0.0;
    const auto x = as_array(a), y = as_array(b);
    for (std::size_t i = 0; i < 4; ++i) m = std::max(m, std::abs(x[i] - y[i]));
    return m;
}

}  // namespace ddlab::test
