#pragma once

#include <optional>
#include <string>

#include "pfwave/types.hpp"

namespace pfwave {

enum class DatasetFormat {
  dsv,
  structured,
};

// Parameters for the five bundled datasets:
//   1  packet profile at t = 0
//   2  field profiles shortly after release (default t = 0.25)
//   3  field profiles after the copies separate (default t = 1)
//   4  detection densities at several times plus the detector profile
//   5  detector overlap series against time
// Optional fields fall back to per-figure defaults. Explicit grid bounds are
// honored verbatim, so samples inside a singular window render as NA; the
// default grids avoid those windows.
struct FigureRequest {
  int figure = 1;
  std::optional<double> half_width;
  double source_center = 0.0;
  double detector_center = 2.0;
  std::optional<double> t;
  std::optional<double> grid_min;
  std::optional<double> grid_max;
  std::optional<int> grid_n;
  double t_max = 4.0;
  double dt = 0.01;
  DatasetFormat format = DatasetFormat::dsv;
};

// Renders the dataset for req.figure. Deterministic: equal requests yield
// byte-identical output.
std::string render_figure(const FigureRequest& req);

// "%.12g" with -0 normalized to 0.
std::string format_number(double v);

}  // namespace pfwave
