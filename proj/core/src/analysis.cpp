#include "pfwave/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace pfwave {

OverlapSeries make_overlap_series(const PacketSpec& detector,
                                  const PacketSpec& source, double t_max,
                                  double dt) {
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw std::invalid_argument("make_overlap_series: dt must be positive");
  }
  if (!(t_max >= 0.0) || !std::isfinite(t_max)) {
    throw std::invalid_argument("make_overlap_series: t_max must be nonnegative");
  }
  OverlapSeries series{{}, {}, detector, source};
  const long n = static_cast<long>(std::floor(t_max / dt * (1.0 + 1e-12))) + 1;
  series.times.reserve(static_cast<size_t>(n));
  series.values.reserve(static_cast<size_t>(n));
  for (long i = 0; i < n; ++i) {
    const double t = dt * static_cast<double>(i);
    series.times.push_back(t);
    series.values.push_back(detector_overlap(t, detector, source));
  }
  return series;
}

double cancellation_residual(const PacketSpec& packet, const Grid& grid) {
  double worst = 0.0;
  for (double x : grid.samples) {
    const ComplexOrSingular v = field(x, 0.0, packet);
    if (is_singular(v)) continue;
    worst = std::max(worst, std::fabs(std::get<Complex>(v).imag()));
  }
  return worst;
}

double min_emerged_tail(const PacketSpec& packet, const Grid& grid, double t) {
  const double reach = packet.half_width + std::fabs(t) + grid.spacing();
  double least = std::numeric_limits<double>::infinity();
  bool any = false;
  for (double x : grid.samples) {
    if (std::fabs(x - packet.center) <= reach) continue;
    const ComplexOrSingular v = field(x, t, packet);
    if (is_singular(v)) continue;
    least = std::min(least, std::fabs(std::get<Complex>(v).imag()));
    any = true;
  }
  if (!any) {
    throw std::invalid_argument(
        "min_emerged_tail: no grid samples outside the transported support");
  }
  return least;
}

TailFit fit_tail_power_law(const PacketSpec& packet, double x_lo, double x_hi,
                           int n) {
  if (n < 3) {
    throw std::invalid_argument("fit_tail_power_law: need at least 3 samples");
  }
  if (!(x_hi > x_lo)) {
    throw std::invalid_argument("fit_tail_power_law: x_hi must exceed x_lo");
  }
  const double u_lo = x_lo - packet.center;
  if (!(u_lo > 10.0 * packet.half_width)) {
    throw std::invalid_argument(
        "fit_tail_power_law: window must start beyond 10 half widths");
  }
  const double u_hi = x_hi - packet.center;

  // Least squares on log|Im| = log C - p log u over geometrically spaced u.
  const double ratio = u_hi / u_lo;
  double s_l = 0.0, s_y = 0.0, s_ll = 0.0, s_ly = 0.0;
  for (int i = 0; i < n; ++i) {
    const double frac = static_cast<double>(i) / static_cast<double>(n - 1);
    const double u = u_lo * std::pow(ratio, frac);
    const ComplexOrSingular v = analytic_packet(packet.center + u, packet);
    const double l = std::log(u);
    const double y = std::log(std::fabs(std::get<Complex>(v).imag()));
    s_l += l;
    s_y += y;
    s_ll += l * l;
    s_ly += l * y;
  }
  const double nd = static_cast<double>(n);
  const double slope = (nd * s_ly - s_l * s_y) / (nd * s_ll - s_l * s_l);
  const double intercept = (s_y - slope * s_l) / nd;

  double rss = 0.0;
  for (int i = 0; i < n; ++i) {
    const double frac = static_cast<double>(i) / static_cast<double>(n - 1);
    const double u = u_lo * std::pow(ratio, frac);
    const ComplexOrSingular v = analytic_packet(packet.center + u, packet);
    const double y = std::log(std::fabs(std::get<Complex>(v).imag()));
    const double fit = intercept + slope * std::log(u);
    rss += (y - fit) * (y - fit);
  }

  TailFit out;
  out.coefficient = std::exp(intercept);
  out.exponent = -slope;
  out.residual = std::sqrt(rss / nd);
  out.window_lo = x_lo;
  out.window_hi = x_hi;
  return out;
}

LocalizationResult localization_check(const PacketSpec& packet, const Grid& grid,
                                      double t) {
  const double reach = packet.half_width + std::fabs(t);
  const double dx = grid.spacing();
  double outside_max = 0.0;
  std::vector<double> density(grid.samples.size());
  for (size_t i = 0; i < grid.samples.size(); ++i) {
    const double x = grid.samples[i];
    const RealOrSingular v = density_expectation(x, t, packet);
    if (is_singular(v)) {
      throw std::invalid_argument(
          "localization_check: grid passes through a singular point");
    }
    density[i] = std::get<double>(v);
    if (std::fabs(x - packet.center) > reach) {
      outside_max = std::max(outside_max, density[i]);
    }
  }
  double integral = 0.0;
  for (size_t i = 0; i + 1 < density.size(); ++i) {
    integral += 0.5 * dx * (density[i] + density[i + 1]);
  }
  return {outside_max, integral};
}

double triangle_gap(double x, double t, const PacketSpec& packet) {
  const ComplexOrSingular right = analytic_packet(x - t, packet);
  const ComplexOrSingular left = analytic_packet(x + t, packet);
  if (is_singular(right) || is_singular(left)) {
    throw std::invalid_argument("triangle_gap: point is in a singular window");
  }
  const Complex r = std::get<Complex>(right);
  const Complex l = std::get<Complex>(left);
  return std::abs(r) + std::abs(l) - std::abs(r + std::conj(l));
}

double max_triangle_gap(const PacketSpec& packet, double t, const Grid& grid) {
  double worst = 0.0;
  for (double x : grid.samples) {
    const ComplexOrSingular right = analytic_packet(x - t, packet);
    const ComplexOrSingular left = analytic_packet(x + t, packet);
    if (is_singular(right) || is_singular(left)) continue;
    const Complex r = std::get<Complex>(right);
    const Complex l = std::get<Complex>(left);
    worst = std::max(worst, std::abs(r) + std::abs(l) - std::abs(r + std::conj(l)));
  }
  return worst;
}

ArrivalReport detect_causal_arrival(const OverlapSeries& series, double threshold) {
  if (series.times.size() < 2) {
    throw std::invalid_argument("detect_causal_arrival: series needs at least 2 samples");
  }
  const double dt = series.times[1] - series.times[0];
  if (!(dt > 0.0) || dt > series.source.half_width / 10.0) {
    throw std::invalid_argument(
        "detect_causal_arrival: time step must be at most a tenth of the half width");
  }
  ArrivalReport report{false, 0.0, false, 0.0};
  for (size_t i = 0; i < series.times.size(); ++i) {
    if (!report.causal_found && std::fabs(series.values[i].real()) > threshold) {
      report.causal_found = true;
      report.causal_onset = series.times[i];
    }
    if (!report.precursor_found && std::fabs(series.values[i].imag()) > threshold) {
      report.precursor_found = true;
      report.precursor_onset = series.times[i];
    }
    if (report.causal_found && report.precursor_found) break;
  }
  return report;
}

}  // namespace pfwave
