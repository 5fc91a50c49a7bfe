#include "pfwave/datasets.hpp"

#include <cstdio>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "json.hpp"
#include "pfwave/analysis.hpp"
#include "pfwave/closed_form.hpp"

namespace pfwave {

namespace {

using Row = std::vector<std::optional<double>>;

constexpr const char* kDatasetTag = "pfwave-dataset/1";

// Optional so singular samples can render as NA (dsv) or null (structured).
void push_complex(Row& row, const ComplexOrSingular& v) {
  if (is_singular(v)) {
    row.insert(row.end(), 3, std::nullopt);
    return;
  }
  const Complex z = std::get<Complex>(v);
  row.push_back(z.real());
  row.push_back(z.imag());
  row.push_back(std::abs(z));
}

Grid figure_grid(const FigureRequest& req, const PacketSpec& packet,
                 std::span<const double> times, std::span<const double> extra,
                 double default_min, double default_max, int default_n) {
  if (req.grid_min || req.grid_max || req.grid_n) {
    return make_uniform_grid(req.grid_min.value_or(default_min),
                             req.grid_max.value_or(default_max),
                             req.grid_n.value_or(default_n));
  }
  std::vector<double> avoid(extra.begin(), extra.end());
  for (double t : times) {
    for (double s : singular_positions(packet, t)) avoid.push_back(s);
  }
  return make_edge_avoiding_grid(packet, default_min, default_max, default_n,
                                 0.0, avoid);
}

struct Dataset {
  int figure;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<std::string> columns;
  std::vector<Row> rows;
};

std::string render_dsv(const Dataset& ds) {
  std::string out;
  out += "# ";
  out += kDatasetTag;
  out += "\n# figure: ";
  out += std::to_string(ds.figure);
  out += "\n";
  for (const auto& [key, value] : ds.params) {
    out += "# ";
    out += key;
    out += ": ";
    out += value;
    out += "\n";
  }
  out += "# columns:";
  for (const auto& c : ds.columns) {
    out += " ";
    out += c;
  }
  out += "\n";
  for (const Row& row : ds.rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out += " ";
      out += row[i] ? format_number(*row[i]) : "NA";
    }
    out += "\n";
  }
  return out;
}

std::string render_structured(const Dataset& ds) {
  nlohmann::json j;
  j["dataset"] = kDatasetTag;
  j["figure"] = ds.figure;
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [key, value] : ds.params) params[key] = value;
  j["params"] = params;
  j["columns"] = ds.columns;
  nlohmann::json rows = nlohmann::json::array();
  for (const Row& row : ds.rows) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& cell : row) {
      if (cell) {
        r.push_back(*cell);
      } else {
        r.push_back(nullptr);
      }
    }
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  return j.dump(2) + "\n";
}

std::string render(const Dataset& ds, DatasetFormat format) {
  return format == DatasetFormat::dsv ? render_dsv(ds) : render_structured(ds);
}

std::string grid_param(const Grid& g) {
  return format_number(g.x_min) + " " + format_number(g.x_max) + " " +
         std::to_string(g.n_points);
}

// Datasets 1-3: profile of both moving copies and their sum.
std::string render_profile_figure(const FigureRequest& req) {
  const double b = req.half_width.value_or(0.5);
  const PacketSpec packet{req.source_center, b};
  const double default_t = req.figure == 1 ? 0.0 : (req.figure == 2 ? 0.25 : 1.0);
  const double t = req.t.value_or(default_t);
  const Grid grid =
      figure_grid(req, packet, std::vector<double>{t}, {},
                  req.source_center - 3.0, req.source_center + 3.0, 1201);

  Dataset ds;
  ds.figure = req.figure;
  ds.params = {{"b", format_number(b)},
               {"x0", format_number(req.source_center)},
               {"t", format_number(t)},
               {"grid", grid_param(grid)}};
  ds.columns = {"x",       "re_right", "im_right", "abs_right", "re_left",
                "im_left", "abs_left", "re_field", "im_field",  "abs_field"};
  for (double x : grid.samples) {
    Row row;
    row.push_back(x);
    const ComplexOrSingular right = analytic_packet(x - t, packet);
    const ComplexOrSingular left_profile = analytic_packet(x + t, packet);
    push_complex(row, right);
    if (is_singular(left_profile)) {
      row.insert(row.end(), 3, std::nullopt);
    } else {
      push_complex(row, Complex{std::conj(std::get<Complex>(left_profile))});
    }
    if (is_singular(right) || is_singular(left_profile)) {
      row.insert(row.end(), 3, std::nullopt);
    } else {
      push_complex(row, Complex{std::get<Complex>(right) +
                                std::conj(std::get<Complex>(left_profile))});
    }
    ds.rows.push_back(std::move(row));
  }
  return render(ds, req.format);
}

// Dataset 4: detection densities at three times plus the detector profile.
std::string render_density_figure(const FigureRequest& req) {
  const double b = req.half_width.value_or(0.5);
  const PacketSpec source{req.source_center, b};
  const PacketSpec detector{req.detector_center, b};
  const std::vector<double> times = {0.0, 0.75, 1.25};
  std::vector<double> extra = singular_positions(detector, 0.0);
  const Grid grid = figure_grid(req, source, times, extra,
                                req.source_center - 3.0, req.source_center + 5.0,
                                1601);

  Dataset ds;
  ds.figure = 4;
  ds.params = {{"b", format_number(b)},
               {"x0", format_number(req.source_center)},
               {"x1", format_number(req.detector_center)},
               {"t", "0 0.75 1.25"},
               {"grid", grid_param(grid)}};
  ds.columns = {"x", "density_t0", "density_t0.75", "density_t1.25",
                "density_detector"};
  for (double x : grid.samples) {
    Row row;
    row.push_back(x);
    for (double t : times) {
      const RealOrSingular v = density_expectation(x, t, source);
      if (is_singular(v)) {
        row.push_back(std::nullopt);
      } else {
        row.push_back(std::get<double>(v));
      }
    }
    const RealOrSingular v = density_expectation(x, 0.0, detector);
    if (is_singular(v)) {
      row.push_back(std::nullopt);
    } else {
      row.push_back(std::get<double>(v));
    }
    ds.rows.push_back(std::move(row));
  }
  return render(ds, req.format);
}

// Dataset 5: overlap series, by default for both the wide and narrow packet.
std::string render_overlap_figure(const FigureRequest& req) {
  std::vector<double> widths;
  if (req.half_width) {
    widths = {*req.half_width};
  } else {
    widths = {0.5, 0.01};
  }

  std::vector<OverlapSeries> series;
  for (double b : widths) {
    series.push_back(make_overlap_series(PacketSpec{req.detector_center, b},
                                         PacketSpec{req.source_center, b},
                                         req.t_max, req.dt));
  }

  Dataset ds;
  ds.figure = 5;
  std::string b_param = format_number(widths[0]);
  for (size_t i = 1; i < widths.size(); ++i) b_param += " " + format_number(widths[i]);
  ds.params = {{"b", b_param},
               {"x0", format_number(req.source_center)},
               {"x1", format_number(req.detector_center)},
               {"t_max", format_number(req.t_max)},
               {"dt", format_number(req.dt)}};
  ds.columns = {"t"};
  for (double b : widths) {
    const std::string suffix = widths.size() == 1 ? "" : "_b" + format_number(b);
    ds.columns.push_back("re_overlap" + suffix);
    ds.columns.push_back("im_overlap" + suffix);
    ds.columns.push_back("abs_overlap" + suffix);
  }
  for (size_t i = 0; i < series[0].times.size(); ++i) {
    Row row;
    row.push_back(series[0].times[i]);
    for (const OverlapSeries& s : series) {
      row.push_back(s.values[i].real());
      row.push_back(s.values[i].imag());
      row.push_back(std::abs(s.values[i]));
    }
    ds.rows.push_back(std::move(row));
  }
  return render(ds, req.format);
}

}  // namespace

std::string format_number(double v) {
  if (v == 0.0) v = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string render_figure(const FigureRequest& req) {
  switch (req.figure) {
    case 1:
    case 2:
    case 3:
      return render_profile_figure(req);
    case 4:
      return render_density_figure(req);
    case 5:
      return render_overlap_figure(req);
    default:
      throw std::invalid_argument("render_figure: figure must be 1 through 5");
  }
}

}  // namespace pfwave
