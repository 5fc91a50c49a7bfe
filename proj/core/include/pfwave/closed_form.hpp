#pragma once

#include "pfwave/types.hpp"

namespace pfwave {

// Width of the imaginary-axis shift used by the regularized evaluator.
struct Regularization {
  double epsilon;

  explicit Regularization(double epsilon_);
};

// Positive-frequency profile of the rectangular packet at t = 0, evaluated at
// x. The real part is the box itself (height 1/(4b) inside, half height at
// the edges); the imaginary part is its Hilbert-transform log tail. Reports a
// log divergence within kSingularExclusion of either edge.
ComplexOrSingular analytic_packet(double x, const PacketSpec& packet);

// Same profile with the logs and steps smoothed on the scale epsilon. Finite
// everywhere; converges to analytic_packet pointwise as epsilon -> 0.
Complex analytic_packet_regularized(double x, const PacketSpec& packet,
                                    const Regularization& reg);

// Time-evolved field: right-moving copy of the packet profile plus the
// conjugated left-moving copy.
ComplexOrSingular field(double x, double t, const PacketSpec& packet);

// Time derivative of the field at t = 0. Purely imaginary away from the
// packet edges, with simple poles at the edges.
ComplexOrSingular initial_time_derivative(double x, const PacketSpec& packet);

// Expected photodetection density: 2b |field|^2.
RealOrSingular density_expectation(double x, double t, const PacketSpec& packet);

// Expected energy density at t = 0. Nonnegative; vanishes only at the packet
// center; diverges at the edges.
RealOrSingular energy_density_expectation(double x, const PacketSpec& packet);

// Spatial overlap of two identical-width packet profiles whose centers are
// separated by u, at t = 0. Entire in u: the x log x kinks are removable.
Complex overlap_kernel(double u, double half_width);

// Detector-mode amplitude <detector | source(t)>: overlap of the evolved
// source with a static detector packet of the same half width. Real part is
// supported on the causal triangle |t - d| < 2b; the imaginary part leaks
// outside it.
Complex detector_overlap(double t, const PacketSpec& detector,
                         const PacketSpec& source);

// Locations where field(., t) is singular: the packet edges transported by
// +-t. Sorted, duplicates removed.
std::vector<double> singular_positions(const PacketSpec& packet, double t);

// Evaluates field() on every grid sample.
FieldSnapshot closed_form_snapshot(const PacketSpec& packet, const Grid& grid,
                                   double t);

}  // namespace pfwave
