#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "ddlab/params.hpp"
#include "ddlab/phase_space.hpp"

namespace ddlab {

// Coordinate charts on the doubled phase space. Coordinates per chart:
//   XY          (x, y, p_x, p_y)      x1 = (x+y)/sqrt2, x2 = (x-y)/sqrt2
//   X12         (x1, x2, p1, p2)      canonical storage chart
//   XPM         (x+, x-, p+, p-)      relabeled X12 (H keeps its form)
//   HYPERBOLIC  (r, u, p_r, p_u)      x1 = r cosh u, x2 = r sinh u, branch x1 > |x2|
//   ACTION      (q1, q2, C, J2)       angle variables conjugate to the beables
enum class Chart { XY, X12, XPM, HYPERBOLIC, ACTION };

struct ChartPoint {
    Chart chart{Chart::X12};
    std::array<double, 4> coords{};
};

std::string_view chart_name(Chart c) noexcept;
std::optional<Chart> parse_chart(std::string_view name) noexcept;

ChartPoint to_chart(const DoubledState& s, Chart target, const OscillatorParams& p);
DoubledState from_chart(const ChartPoint& pt, const OscillatorParams& p);

// Converts through the canonical chart. Throws DomainError when the point is
// outside the target chart's patch (x1 <= |x2| for HYPERBOLIC, C <= 0 or
// x1^2 <= x2^2 for ACTION).
ChartPoint chart_convert(const ChartPoint& pt, Chart target, const OscillatorParams& p);

}  // namespace ddlab
