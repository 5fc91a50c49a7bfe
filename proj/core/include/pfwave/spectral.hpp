#pragma once

#include "pfwave/types.hpp"

namespace pfwave {

// Knobs for the independent mode-sum evaluators. The damping schedule lists
// strictly decreasing widths; results at each width are extrapolated to zero.
struct SpectralConfig {
  std::vector<double> eps_schedule;
  double k_max;
  long n_k;
  double L;
  int n_x;

  static SpectralConfig defaults();
  void validate() const;
};

// Damped-sum result extrapolated to zero damping. `converged` reports whether
// the last two extrapolants agree to within ten times the error estimate;
// schedules that leave the high-k cutoff undamped fail this.
struct ExtrapolatedValue {
  Complex value;
  double error_estimate;
  bool converged;
};

enum class KRange {
  full_line,
  positive_half,
};

// Fourier amplitude of the rectangular profile at wavenumber k, relative to
// the packet center phase: e^{-i k center} sin(k b)/(k b), equal to 1 at k=0.
Complex packet_spectrum(double k, const PacketSpec& packet);

// Field value by damped midpoint quadrature over the mode integral.
// full_line reproduces the evolved field; positive_half keeps only the
// right-moving half, reproducing the packet profile at argument x - t.
ExtrapolatedValue evolve_by_quadrature(double x, double t,
                                       const PacketSpec& packet,
                                       const SpectralConfig& cfg,
                                       KRange range = KRange::full_line);

// Field on a periodic grid of cfg.n_x points spanning [-L/2, L/2): transform
// the sampled rectangle, advance each mode by e^{-i |k| t}, transform back.
// Rejects configurations where the evolved packet reaches the seam.
FieldSnapshot evolve_by_dft(const PacketSpec& packet, double t,
                            const SpectralConfig& cfg);

// Detector-mode amplitude by damped double quadrature over both boxes. The
// mode integral is evaluated exactly per displacement; cfg.n_x midpoint cells
// per box axis remain.
ExtrapolatedValue detector_overlap_by_quadrature(double t,
                                                 const PacketSpec& detector,
                                                 const PacketSpec& source,
                                                 const SpectralConfig& cfg);

// Largest centered second-difference defect |f_tt - f_xx| over the interior
// of three equally spaced snapshots sharing one grid. Stencils touching a
// singular sample or a point within exclude_radius of an entry of exclude_x
// are skipped.
double wave_equation_residual(const FieldSnapshot& before,
                              const FieldSnapshot& at,
                              const FieldSnapshot& after,
                              std::span<const double> exclude_x = {},
                              double exclude_radius = 0.0);

}  // namespace pfwave
