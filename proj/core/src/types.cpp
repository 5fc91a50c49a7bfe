#include "pfwave/types.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace pfwave {

PacketSpec::PacketSpec(double center_, double half_width_)
    : center(center_), half_width(half_width_) {
  if (!std::isfinite(center) || !std::isfinite(half_width)) {
    throw std::invalid_argument("PacketSpec: parameters must be finite");
  }
  if (half_width <= 0.0) {
    throw std::invalid_argument("PacketSpec: half_width must be positive, got " +
                                std::to_string(half_width));
  }
}

double Grid::spacing() const {
  if (n_points < 2) return 0.0;
  return (x_max - x_min) / static_cast<double>(n_points - 1);
}

Grid make_uniform_grid(double x_min, double x_max, int n_points) {
  if (n_points < 2) {
    throw std::invalid_argument("make_uniform_grid: need at least 2 points");
  }
  if (!(x_max > x_min)) {
    throw std::invalid_argument("make_uniform_grid: x_max must exceed x_min");
  }
  Grid g;
  g.x_min = x_min;
  g.x_max = x_max;
  g.n_points = n_points;
  g.samples.resize(static_cast<size_t>(n_points));
  const double dx = (x_max - x_min) / static_cast<double>(n_points - 1);
  for (int i = 0; i < n_points; ++i) {
    g.samples[static_cast<size_t>(i)] = x_min + dx * static_cast<double>(i);
  }
  return g;
}

namespace {

// True when every avoided point sits farther than the exclusion radius from
// the nearest sample of the grid x_min + offset + i*dx.
bool offset_clears(double x_min, double dx, int n_points, double offset,
                   std::span<const double> avoid) {
  for (double p : avoid) {
    const double rel = (p - x_min - offset) / dx;
    const double nearest = std::round(rel);
    if (nearest < 0.0 || nearest > static_cast<double>(n_points - 1)) continue;
    const double sample = x_min + offset + nearest * dx;
    if (std::fabs(sample - p) <= kSingularExclusion) return false;
  }
  return true;
}

}  // namespace

Grid make_edge_avoiding_grid(const PacketSpec& packet, double x_min,
                             double x_max, int n_points, double t,
                             std::span<const double> extra_avoid) {
  if (n_points < 2) {
    throw std::invalid_argument("make_edge_avoiding_grid: need at least 2 points");
  }
  if (!(x_max > x_min)) {
    throw std::invalid_argument("make_edge_avoiding_grid: x_max must exceed x_min");
  }

  std::vector<double> avoid;
  const double at = std::fabs(t);
  for (double e : {packet.center - packet.half_width, packet.center + packet.half_width}) {
    avoid.push_back(e - at);
    avoid.push_back(e + at);
  }
  avoid.insert(avoid.end(), extra_avoid.begin(), extra_avoid.end());

  const double dx = (x_max - x_min) / static_cast<double>(n_points - 1);
  double offset = 0.0;
  for (int k = 0; k < 16; ++k) {
    const double candidate = dx * static_cast<double>(k) / 16.0;
    if (offset_clears(x_min, dx, n_points, candidate, avoid)) {
      offset = candidate;
      break;
    }
  }

  Grid g;
  g.x_min = x_min + offset;
  g.x_max = x_max + offset;
  g.n_points = n_points;
  g.samples.resize(static_cast<size_t>(n_points));
  for (int i = 0; i < n_points; ++i) {
    g.samples[static_cast<size_t>(i)] = g.x_min + dx * static_cast<double>(i);
  }
  return g;
}

}  // namespace pfwave
