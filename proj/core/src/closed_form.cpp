#include "pfwave/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pfwave {

namespace {

constexpr double kPi = std::numbers::pi;

// w log|w| extended by its limit 0 at w = 0. Odd under w -> -w bit for bit.
double x_log_x(double w) {
  if (w == 0.0) return 0.0;
  return w * std::log(std::fabs(w));
}

}  // namespace

Regularization::Regularization(double epsilon_) : epsilon(epsilon_) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw std::invalid_argument("Regularization: epsilon must be positive");
  }
}

ComplexOrSingular analytic_packet(double x, const PacketSpec& packet) {
  const double b = packet.half_width;
  const double u = x - packet.center;
  const double wm = u - b;
  const double wp = u + b;
  if (std::fabs(wm) <= kSingularExclusion) {
    return SingularPoint{packet.center + b, SingularKind::log_divergence};
  }
  if (std::fabs(wp) <= kSingularExclusion) {
    return SingularPoint{packet.center - b, SingularKind::log_divergence};
  }
  const double re = (sign(wp) - sign(wm)) / (8.0 * b);
  const double im = (std::log(std::fabs(wp)) - std::log(std::fabs(wm))) / (4.0 * kPi * b);
  return Complex{re, im};
}

Complex analytic_packet_regularized(double x, const PacketSpec& packet,
                                    const Regularization& reg) {
  const double b = packet.half_width;
  const double eps = reg.epsilon;
  const double u = x - packet.center;
  const double wm = u - b;
  const double wp = u + b;
  const double am = std::atan2(eps, wm);
  const double ap = std::atan2(eps, wp);
  const double lm = 0.5 * std::log(wm * wm + eps * eps);
  const double lp = 0.5 * std::log(wp * wp + eps * eps);
  return Complex{(am - ap) / (4.0 * kPi * b), (lp - lm) / (4.0 * kPi * b)};
}

ComplexOrSingular field(double x, double t, const PacketSpec& packet) {
  const ComplexOrSingular right = analytic_packet(x - t, packet);
  if (const auto* s = std::get_if<SingularPoint>(&right)) {
    return SingularPoint{s->location + t, s->kind};
  }
  const ComplexOrSingular left = analytic_packet(x + t, packet);
  if (const auto* s = std::get_if<SingularPoint>(&left)) {
    return SingularPoint{s->location - t, s->kind};
  }
  return std::get<Complex>(right) + std::conj(std::get<Complex>(left));
}

ComplexOrSingular initial_time_derivative(double x, const PacketSpec& packet) {
  const double b = packet.half_width;
  const double u = x - packet.center;
  const double wm = u - b;
  const double wp = u + b;
  if (std::fabs(wm) <= kSingularExclusion) {
    return SingularPoint{packet.center + b, SingularKind::simple_pole};
  }
  if (std::fabs(wp) <= kSingularExclusion) {
    return SingularPoint{packet.center - b, SingularKind::simple_pole};
  }
  return Complex{0.0, (1.0 / wm - 1.0 / wp) / (2.0 * kPi * b)};
}

RealOrSingular density_expectation(double x, double t, const PacketSpec& packet) {
  const ComplexOrSingular value = field(x, t, packet);
  if (const auto* s = std::get_if<SingularPoint>(&value)) return *s;
  return 2.0 * packet.half_width * std::norm(std::get<Complex>(value));
}

RealOrSingular energy_density_expectation(double x, const PacketSpec& packet) {
  const double b = packet.half_width;
  const double u = x - packet.center;
  const double wm = u - b;
  const double wp = u + b;
  if (std::fabs(wm) <= kSingularExclusion) {
    return SingularPoint{packet.center + b, SingularKind::simple_pole};
  }
  if (std::fabs(wp) <= kSingularExclusion) {
    return SingularPoint{packet.center - b, SingularKind::simple_pole};
  }
  const double am = std::fabs(wm);
  const double ap = std::fabs(wp);
  if (sign(wm) * sign(wp) < 0.0) {
    // Inside the box the cross term completes a square, which also keeps the
    // evaluation nonnegative in floating point.
    const double root = 1.0 / std::sqrt(am) - 1.0 / std::sqrt(ap);
    return root * root / (4.0 * kPi * b);
  }
  return (1.0 / am + 1.0 / ap) / (4.0 * kPi * b);
}

Complex overlap_kernel(double u, double half_width) {
  if (!(half_width > 0.0)) {
    throw std::invalid_argument("overlap_kernel: half_width must be positive");
  }
  const double b = half_width;
  const double tent = std::fabs(u - 2.0 * b) + std::fabs(u + 2.0 * b) - 2.0 * std::fabs(u);
  const double logs = x_log_x(u - 2.0 * b) + x_log_x(u + 2.0 * b) - 2.0 * x_log_x(u);
  return Complex{tent / (8.0 * b), logs / (4.0 * kPi * b)};
}

Complex detector_overlap(double t, const PacketSpec& detector,
                         const PacketSpec& source) {
  if (std::fabs(detector.half_width - source.half_width) >
      1e-12 * std::max(detector.half_width, source.half_width)) {
    throw std::invalid_argument(
        "detector_overlap: detector and source must share one half width");
  }
  const double b = source.half_width;
  const double d = detector.center - source.center;
  return overlap_kernel(d - t, b) + std::conj(overlap_kernel(d + t, b));
}

std::vector<double> singular_positions(const PacketSpec& packet, double t) {
  const double at = std::fabs(t);
  std::vector<double> out;
  for (double e : {packet.center - packet.half_width, packet.center + packet.half_width}) {
    out.push_back(e - at);
    out.push_back(e + at);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

FieldSnapshot closed_form_snapshot(const PacketSpec& packet, const Grid& grid,
                                   double t) {
  FieldSnapshot snap;
  snap.grid = grid;
  snap.t = t;
  snap.provenance = Provenance::closed_form;
  snap.values.reserve(grid.samples.size());
  for (double x : grid.samples) {
    snap.values.push_back(field(x, t, packet));
  }
  return snap;
}

}  // namespace pfwave
