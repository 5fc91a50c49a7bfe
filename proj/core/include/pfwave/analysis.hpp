#pragma once

#include "pfwave/closed_form.hpp"
#include "pfwave/types.hpp"

namespace pfwave {

// Detection threshold used when locating signal onsets in an overlap series.
inline constexpr double kArrivalThreshold = 1e-10;

// Detector-mode amplitude sampled on the uniform time grid 0, dt, ..., t_max.
struct OverlapSeries {
  std::vector<double> times;
  std::vector<Complex> values;
  PacketSpec detector;
  PacketSpec source;
};

OverlapSeries make_overlap_series(const PacketSpec& detector,
                                  const PacketSpec& source, double t_max,
                                  double dt);

// Largest |Im field| over the grid at t = 0, where the two counter-moving log
// tails cancel. Zero up to rounding; the construction here makes it exactly
// zero.
double cancellation_residual(const PacketSpec& packet, const Grid& grid);

// Smallest |Im field| over grid samples lying strictly outside the transported
// support by more than one grid spacing. Positive for any t != 0: the tails
// reappear everywhere the moment the cancellation is disturbed.
double min_emerged_tail(const PacketSpec& packet, const Grid& grid, double t);

// Power-law fit |Im profile| ~ coefficient * u^(-exponent) on log axes, over
// a geometric sample of the far tail. residual is the rms misfit of log|Im|.
struct TailFit {
  double coefficient;
  double exponent;
  double residual;
  double window_lo;
  double window_hi;
};

TailFit fit_tail_power_law(const PacketSpec& packet, double x_lo, double x_hi,
                           int n);

// Detection-density audit: largest sample outside the transported support,
// and the trapezoid integral over the whole grid (1 for a unit packet when
// the grid covers the support).
struct LocalizationResult {
  double outside_max;
  double integral;
};

LocalizationResult localization_check(const PacketSpec& packet, const Grid& grid,
                                      double t = 0.0);

// Slack in the triangle inequality |right| + |left| - |right + conj(left)|
// for the two counter-moving profile copies at (x, t). Nonnegative; large
// while the copies still overlap, decaying as they separate.
double triangle_gap(double x, double t, const PacketSpec& packet);

double max_triangle_gap(const PacketSpec& packet, double t, const Grid& grid);

// First threshold crossings of an overlap series: the real part switches on
// only inside the causal window, the imaginary part immediately.
struct ArrivalReport {
  bool causal_found;
  double causal_onset;
  bool precursor_found;
  double precursor_onset;
};

ArrivalReport detect_causal_arrival(const OverlapSeries& series,
                                    double threshold = kArrivalThreshold);

}  // namespace pfwave
