#include "pfwave/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "pfwave/detail/fft.hpp"

namespace pfwave {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr long kResyncBlock = 65536;

// Linear extrapolation to zero damping from the last two schedule entries,
// cross-checked against the extrapolant of the preceding pair.
ExtrapolatedValue extrapolate_to_zero(const std::vector<double>& eps,
                                      const std::vector<Complex>& v) {
  const size_t n = eps.size();
  const Complex v_last = v[n - 1];
  const Complex v_prev = v[n - 2];
  const double e_last = eps[n - 1];
  const double e_prev = eps[n - 2];
  const Complex value = v_last + (v_last - v_prev) * (e_last / (e_prev - e_last));
  const double error_estimate = std::abs(value - v_last);
  bool converged = false;
  if (n >= 3) {
    const Complex earlier =
        v_prev + (v_prev - v[n - 3]) * (e_prev / (eps[n - 3] - e_prev));
    converged = std::abs(value - earlier) <= 10.0 * error_estimate + 1e-11;
  }
  return {value, error_estimate, converged};
}

}  // namespace

SpectralConfig SpectralConfig::defaults() {
  SpectralConfig cfg;
  cfg.eps_schedule = {1e-1, 3e-2, 1e-2, 3e-3, 1e-3};
  cfg.k_max = 2e4;
  cfg.n_k = 4194304;
  cfg.L = 64.0;
  cfg.n_x = 16384;
  return cfg;
}

void SpectralConfig::validate() const {
  if (eps_schedule.size() < 2) {
    throw std::invalid_argument("SpectralConfig: need at least 2 damping widths");
  }
  for (size_t i = 0; i < eps_schedule.size(); ++i) {
    const double e = eps_schedule[i];
    if (!(e > 0.0) || !std::isfinite(e)) {
      throw std::invalid_argument("SpectralConfig: damping widths must be positive");
    }
    if (i > 0 && !(e < eps_schedule[i - 1])) {
      throw std::invalid_argument(
          "SpectralConfig: damping widths must be strictly decreasing");
    }
  }
  if (!(k_max > 0.0) || !std::isfinite(k_max)) {
    throw std::invalid_argument("SpectralConfig: k_max must be positive");
  }
  if (n_k < 2) {
    throw std::invalid_argument("SpectralConfig: n_k must be at least 2");
  }
  if (!(L > 0.0) || !std::isfinite(L)) {
    throw std::invalid_argument("SpectralConfig: L must be positive");
  }
  if (n_x < 2 || (n_x & (n_x - 1)) != 0) {
    throw std::invalid_argument("SpectralConfig: n_x must be a power of two");
  }
}

Complex packet_spectrum(double k, const PacketSpec& packet) {
  const double kb = k * packet.half_width;
  const double sinc = (kb == 0.0) ? 1.0 : std::sin(kb) / kb;
  return std::polar(sinc, -k * packet.center);
}

ExtrapolatedValue evolve_by_quadrature(double x, double t,
                                       const PacketSpec& packet,
                                       const SpectralConfig& cfg, KRange range) {
  cfg.validate();
  const double b = packet.half_width;
  const double u = x - packet.center;
  const double arg_right = u - t;
  const double arg_left = u + t;
  const double h = cfg.k_max / static_cast<double>(cfg.n_k);
  const size_t n_eps = cfg.eps_schedule.size();

  const Complex step_right = std::polar(1.0, h * arg_right);
  const Complex step_left = std::polar(1.0, -h * arg_left);
  const Complex step_width = std::polar(1.0, h * b);
  std::vector<double> damp_step(n_eps);
  for (size_t e = 0; e < n_eps; ++e) damp_step[e] = std::exp(-cfg.eps_schedule[e] * h);

  std::vector<Complex> sums(n_eps, Complex{0.0, 0.0});
  std::vector<Complex> block(n_eps);
  std::vector<double> damp(n_eps);

  for (long j0 = 0; j0 < cfg.n_k; j0 += kResyncBlock) {
    const long j1 = std::min(j0 + kResyncBlock, cfg.n_k);
    const double k0 = (static_cast<double>(j0) + 0.5) * h;
    // Exact phases at the block start; the per-node rotations drift by only
    // ~1e-12 before the next resync.
    Complex rot_right = std::polar(1.0, k0 * arg_right);
    Complex rot_left = std::polar(1.0, -k0 * arg_left);
    Complex rot_width = std::polar(1.0, k0 * b);
    for (size_t e = 0; e < n_eps; ++e) damp[e] = std::exp(-cfg.eps_schedule[e] * k0);
    std::fill(block.begin(), block.end(), Complex{0.0, 0.0});

    for (long j = j0; j < j1; ++j) {
      const double k = (static_cast<double>(j) + 0.5) * h;
      const double sinc = rot_width.imag() / (k * b);
      const Complex w =
          sinc * (range == KRange::full_line ? rot_right + rot_left : rot_right);
      for (size_t e = 0; e < n_eps; ++e) {
        block[e] += damp[e] * w;
        damp[e] *= damp_step[e];
      }
      rot_right *= step_right;
      rot_left *= step_left;
      rot_width *= step_width;
    }
    for (size_t e = 0; e < n_eps; ++e) sums[e] += block[e];
  }

  const double norm = h / (2.0 * kPi);
  for (Complex& s : sums) s *= norm;
  return extrapolate_to_zero(cfg.eps_schedule, sums);
}

FieldSnapshot evolve_by_dft(const PacketSpec& packet, double t,
                            const SpectralConfig& cfg) {
  cfg.validate();
  const int n = cfg.n_x;
  const double L = cfg.L;
  const double b = packet.half_width;
  if (L < 50.0 * b) {
    throw std::invalid_argument("evolve_by_dft: L must be at least 50 half widths");
  }
  if (std::fabs(packet.center) + b + std::fabs(t) > 0.5 * L) {
    throw std::invalid_argument(
        "evolve_by_dft: evolved packet would reach the periodic seam");
  }

  const double dx = L / static_cast<double>(n);
  std::vector<Complex> data(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double x = -0.5 * L + dx * static_cast<double>(i);
    const double dist = std::fabs(x - packet.center);
    double value = 0.0;
    if (std::fabs(dist - b) <= 1e-12) {
      value = 1.0 / (4.0 * b);
    } else if (dist < b) {
      value = 1.0 / (2.0 * b);
    }
    data[static_cast<size_t>(i)] = Complex{value, 0.0};
  }

  detail::fft_radix2(data, false);
  for (int m = 0; m < n; ++m) {
    const int folded = (m <= n / 2) ? m : m - n;
    const double omega = std::fabs(2.0 * kPi * static_cast<double>(folded) / L);
    data[static_cast<size_t>(m)] *= std::polar(1.0, -omega * t);
  }
  detail::fft_radix2(data, true);

  FieldSnapshot snap;
  snap.grid.x_min = -0.5 * L;
  snap.grid.x_max = -0.5 * L + dx * static_cast<double>(n - 1);
  snap.grid.n_points = n;
  snap.grid.samples.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    snap.grid.samples[static_cast<size_t>(i)] = -0.5 * L + dx * static_cast<double>(i);
  }
  snap.t = t;
  snap.provenance = Provenance::oracle_dft;
  snap.values.assign(data.begin(), data.end());
  return snap;
}

ExtrapolatedValue detector_overlap_by_quadrature(double t,
                                                 const PacketSpec& detector,
                                                 const PacketSpec& source,
                                                 const SpectralConfig& cfg) {
  cfg.validate();
  if (std::fabs(detector.half_width - source.half_width) >
      1e-12 * std::max(detector.half_width, source.half_width)) {
    throw std::invalid_argument(
        "detector_overlap_by_quadrature: packets must share one half width");
  }
  const double b = source.half_width;
  const double d = detector.center - source.center;
  const long n = cfg.n_x;
  const double cell = 2.0 * b / static_cast<double>(n);
  const size_t n_eps = cfg.eps_schedule.size();

  // The mode integral per displacement X is exact:
  //   1/(eps + i(t - X)) + 1/(eps + i(t + X)).
  // Both box integrals collapse onto the displacement axis: m = i - j occurs
  // n - |m| times among midpoint pairs.
  std::vector<Complex> sums(n_eps, Complex{0.0, 0.0});
  for (long m = 1 - n; m <= n - 1; ++m) {
    const double X = d + cell * static_cast<double>(m);
    const double weight = static_cast<double>(n - std::labs(m));
    for (size_t e = 0; e < n_eps; ++e) {
      const double eps = cfg.eps_schedule[e];
      const Complex kernel = 1.0 / Complex{eps, t - X} + 1.0 / Complex{eps, t + X};
      sums[e] += weight * kernel;
    }
  }
  const double norm = cell * cell / (4.0 * kPi * b);
  for (Complex& s : sums) s *= norm;
  return extrapolate_to_zero(cfg.eps_schedule, sums);
}

double wave_equation_residual(const FieldSnapshot& before, const FieldSnapshot& at,
                              const FieldSnapshot& after,
                              std::span<const double> exclude_x,
                              double exclude_radius) {
  const Grid& grid = at.grid;
  for (const FieldSnapshot* snap : {&before, &after}) {
    if (snap->grid.n_points != grid.n_points ||
        std::fabs(snap->grid.x_min - grid.x_min) > 1e-12 ||
        std::fabs(snap->grid.x_max - grid.x_max) > 1e-12) {
      throw std::invalid_argument("wave_equation_residual: snapshots must share one grid");
    }
  }
  const double h_fwd = after.t - at.t;
  const double h_bwd = at.t - before.t;
  if (!(h_fwd > 0.0) || std::fabs(h_fwd - h_bwd) > 1e-12) {
    throw std::invalid_argument(
        "wave_equation_residual: snapshot times must be equally spaced");
  }
  const double h = h_fwd;
  const double dx = grid.spacing();
  if (!(dx > 0.0)) {
    throw std::invalid_argument("wave_equation_residual: grid needs at least 2 points");
  }

  double worst = 0.0;
  for (int i = 1; i + 1 < grid.n_points; ++i) {
    const size_t s = static_cast<size_t>(i);
    const double x = grid.samples[s];
    bool skip = false;
    for (double ex : exclude_x) {
      if (std::fabs(x - ex) <= exclude_radius) {
        skip = true;
        break;
      }
    }
    if (skip) continue;
    if (is_singular(before.values[s]) || is_singular(after.values[s]) ||
        is_singular(at.values[s - 1]) || is_singular(at.values[s]) ||
        is_singular(at.values[s + 1])) {
      continue;
    }
    const Complex f_tt = (std::get<Complex>(after.values[s]) -
                          2.0 * std::get<Complex>(at.values[s]) +
                          std::get<Complex>(before.values[s])) /
                         (h * h);
    const Complex f_xx = (std::get<Complex>(at.values[s + 1]) -
                          2.0 * std::get<Complex>(at.values[s]) +
                          std::get<Complex>(at.values[s - 1])) /
                         (dx * dx);
    worst = std::max(worst, std::abs(f_tt - f_xx));
  }
  return worst;
}

}  // namespace pfwave
