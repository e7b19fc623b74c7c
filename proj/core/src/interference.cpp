#include "ddlab/interference.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <string>

#include "ddlab/charts.hpp"
#include "ddlab/errors.hpp"

namespace ddlab::interference {

void PlanarPath::validate() const {
    if (points.size() < 3) throw ParamError("path needs at least 3 points");
    for (const PlanarPoint& pt : points) {
        if (!std::isfinite(pt.X) || !std::isfinite(pt.Y)) throw ParamError("path points must be finite");
    }
}

namespace {

bool close(const PlanarPoint& a, const PlanarPoint& b) {
    const double sx = std::max({1.0, std::abs(a.X), std::abs(b.X)});
    const double sy = std::max({1.0, std::abs(a.Y), std::abs(b.Y)});
    return std::abs(a.X - b.X) <= endpoint_tolerance * sx &&
           std::abs(a.Y - b.Y) <= endpoint_tolerance * sy;
}

}  // namespace

void PathPair::validate() const {
    forward.validate();
    backward.validate();
    if (!close(forward.points.front(), backward.points.front())) {
        throw EndpointError("paths do not share a start point");
    }
    if (!close(forward.points.back(), backward.points.back())) {
        throw EndpointError("paths do not share an end point");
    }
}

std::vector<PlanarPoint> closed_loop(const PathPair& pair) {
    pair.validate();
    std::vector<PlanarPoint> loop(pair.forward.points);
    const auto& back = pair.backward.points;
    // skip backward's last point (the shared end) and first point (the start)
    for (std::size_t i = back.size() - 1; i-- > 1;) loop.push_back(back[i]);
    return loop;
}

double enclosed_area(const PathPair& pair) {
    const std::vector<PlanarPoint> loop = closed_loop(pair);
    const std::size_t n = loop.size();
    // shift to the first point to keep the cross products small
    const PlanarPoint o = loop.front();
    double twice = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const PlanarPoint& a = loop[i];
        const PlanarPoint& b = loop[(i + 1) % n];
        twice += (a.X - o.X) * (b.Y - o.Y) - (b.X - o.X) * (a.Y - o.Y);
    }
    return 0.5 * twice;
}

double dissipation_length_sq(const OscillatorParams& p) {
    if (!(p.gamma > 0.0)) throw DomainError("gamma = 0: dissipation length diverges");
    return p.hbar / p.gamma;
}

double interference_phase(double area, const OscillatorParams& p) {
    if (!(p.gamma > 0.0)) throw DomainError("gamma = 0: no dissipative phase");
    return area * p.gamma / p.hbar;
}

StokesResult stokes_check(const PathPair& pair, double L2) {
    if (!(L2 > 0.0)) throw ParamError("L2 must be > 0");
    const std::vector<PlanarPoint> loop = closed_loop(pair);
    const std::size_t n = loop.size();
    double circulation = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const PlanarPoint& a = loop[i];
        const PlanarPoint& b = loop[(i + 1) % n];
        circulation += 0.5 * (a.Y + b.Y) * (b.X - a.X);
    }
    StokesResult r;
    r.line_integral = circulation / L2;
    r.area_integral = -enclosed_area(pair) / L2;
    const double scale = std::max(std::abs(r.line_integral), std::abs(r.area_integral));
    r.discrepancy = scale > 0.0 ? std::abs(r.line_integral - r.area_integral) / scale : 0.0;
    return r;
}

PathPair loop_from_trajectory(const dynamics::Trajectory& traj) {
    const std::size_t n = traj.size();
    if (n < 3) throw ParamError("trajectory needs at least 3 samples");
    const OscillatorParams& p = traj.params;

    PathPair pair;
    pair.forward.points.reserve(n);
    for (const DoubledState& s : traj.states) {
        const ChartPoint pm = to_chart(s, Chart::XPM, p);
        pair.forward.points.push_back({pm.coords[0], pm.coords[1]});
    }

    const double t_end = traj.times.back();
    const SectorState end = traj.sector_states.back();
    std::vector<PlanarPoint> back(n);
    for (std::size_t i = 0; i < n; ++i) {
        const SectorState s = dynamics::exact_flow(end, p.m, -p.gamma, p.k, traj.times[i] - t_end);
        const ChartPoint pm = to_chart(to_doubled(s), Chart::XPM, p);
        back[i] = {pm.coords[0], pm.coords[1]};
    }
    const PlanarPoint start = pair.forward.points.front();
    const PlanarPoint miss{start.X - back.front().X, start.Y - back.front().Y};
    const double t0 = traj.times.front();
    for (std::size_t i = 0; i < n; ++i) {
        const double w = (t_end - traj.times[i]) / (t_end - t0);
        back[i].X += w * miss.X;
        back[i].Y += w * miss.Y;
    }
    back.back() = pair.forward.points.back();
    back.front() = start;
    pair.backward.points = std::move(back);
    return pair;
}

void write_path_csv(std::ostream& os, const PlanarPath& path) {
    os << "X,Y\n";
    char buf[64];
    for (const PlanarPoint& pt : path.points) {
        auto r = std::to_chars(buf, buf + sizeof buf, pt.X, std::chars_format::general, 17);
        os.write(buf, r.ptr - buf);
        os.put(',');
        r = std::to_chars(buf, buf + sizeof buf, pt.Y, std::chars_format::general, 17);
        os.write(buf, r.ptr - buf);
        os.put('\n');
    }
}

namespace {

double parse_double(std::string_view text, std::size_t line) {
    double v = 0.0;
    const auto r = std::from_chars(text.data(), text.data() + text.size(), v);
    if (r.ec != std::errc{} || r.ptr != text.data() + text.size()) {
        throw ParamError("path CSV line " + std::to_string(line) + ": bad number '" +
                         std::string(text) + "'");
    }
    return v;
}

}  // namespace

PlanarPath read_path_csv(std::istream& is) {
    std::string line;
    std::size_t lineno = 0;
    if (!std::getline(is, line)) throw ParamError("path CSV is empty");
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "X,Y") throw ParamError("path CSV line 1: expected header 'X,Y'");
    PlanarPath path;
    while (std::getline(is, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos) {
            throw ParamError("path CSV line " + std::to_string(lineno) + ": expected two columns");
        }
        const std::string_view sv(line);
        path.points.push_back({parse_double(sv.substr(0, comma), lineno),
                               parse_double(sv.substr(comma + 1), lineno)});
    }
    path.validate();
    return path;
}

}  // namespace ddlab::interference
