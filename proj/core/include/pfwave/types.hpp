#pragma once

#include <complex>
#include <span>
#include <variant>
#include <vector>

namespace pfwave {

using Complex = std::complex<double>;

// Half-width of the exclusion window around non-removable singular points.
// Evaluations closer than this to a singular location report the singularity
// instead of a finite value.
inline constexpr double kSingularExclusion = 1e-6;

// Rectangular source profile: unit-area box of full width 2*half_width
// centered at `center`, in light-seconds.
struct PacketSpec {
  double center;
  double half_width;

  PacketSpec(double center_, double half_width_);
};

enum class SingularKind {
  log_divergence,
  simple_pole,
  inverse_sqrt,
  removable_x_log_x,
};

struct SingularPoint {
  double location;
  SingularKind kind;
};

using ComplexOrSingular = std::variant<Complex, SingularPoint>;
using RealOrSingular = std::variant<double, SingularPoint>;

inline bool is_singular(const ComplexOrSingular& v) {
  return std::holds_alternative<SingularPoint>(v);
}
inline bool is_singular(const RealOrSingular& v) {
  return std::holds_alternative<SingularPoint>(v);
}

// Uniform sampling grid over [x_min, x_max], inclusive of both ends.
struct Grid {
  double x_min;
  double x_max;
  int n_points;
  std::vector<double> samples;

  double spacing() const;
};

Grid make_uniform_grid(double x_min, double x_max, int n_points);

// Uniform grid whose samples all stay farther than kSingularExclusion from
// the packet edges shifted by +-t and from any extra locations supplied by
// the caller. The grid origin is nudged by small fractions of the spacing
// until every avoided point is clear.
Grid make_edge_avoiding_grid(const PacketSpec& packet, double x_min,
                             double x_max, int n_points, double t = 0.0,
                             std::span<const double> extra_avoid = {});

enum class Provenance {
  closed_form,
  oracle_quadrature,
  oracle_dft,
};

// Field values sampled on a grid at a fixed time.
struct FieldSnapshot {
  Grid grid;
  double t;
  std::vector<ComplexOrSingular> values;
  Provenance provenance;
};

inline double sign(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

}  // namespace pfwave
