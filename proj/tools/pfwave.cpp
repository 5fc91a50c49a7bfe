// Command line front end: renders the bundled datasets and runs the
// self-check suite. Exit codes: 0 success, 1 failed checks or runtime error,
// 2 usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pfwave/pfwave.hpp"

namespace {

int write_output(const std::string& text, const std::string& out_path) {
  std::fwrite(text.data(), 1, text.size(), stdout);
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot open " << out_path << " for writing\n";
      return 1;
    }
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
  }
  return 0;
}

std::map<std::string, double> parse_tolerances(const std::vector<std::string>& args) {
  std::map<std::string, double> overrides;
  for (const std::string& arg : args) {
    const size_t eq = arg.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw std::invalid_argument("--tol expects name=value, got '" + arg + "'");
    }
    size_t used = 0;
    const double value = std::stod(arg.substr(eq + 1), &used);
    if (used != arg.size() - eq - 1) {
      throw std::invalid_argument("--tol expects a numeric value, got '" + arg + "'");
    }
    overrides[arg.substr(0, eq)] = value;
  }
  return overrides;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Positive-frequency wave packet toolkit"};
  app.require_subcommand(1);

  pfwave::FigureRequest request;
  std::string format = "dsv";
  std::string figure_out;
  CLI::App* figure = app.add_subcommand("figure", "Render one bundled dataset");
  figure->add_option("number", request.figure, "Dataset number")
      ->required()
      ->check(CLI::Range(1, 5));
  figure->add_option("--b", request.half_width, "Packet half width");
  figure->add_option("--x0", request.source_center, "Source center");
  figure->add_option("--x1", request.detector_center, "Detector center");
  figure->add_option("--t", request.t, "Snapshot time (datasets 1-3)");
  figure->add_option("--grid-min", request.grid_min, "Grid lower bound");
  figure->add_option("--grid-max", request.grid_max, "Grid upper bound");
  figure->add_option("--grid-n", request.grid_n, "Grid point count");
  figure->add_option("--t-max", request.t_max, "Series end time (dataset 5)");
  figure->add_option("--dt", request.dt, "Series time step (dataset 5)");
  figure->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"dsv", "structured"}));
  figure->add_option("--out", figure_out, "Also write the dataset to this file");

  std::string mode = "fast";
  std::vector<std::string> tol_args;
  std::string verify_out;
  CLI::App* verify = app.add_subcommand("verify", "Run the self-check suite");
  verify->add_option("mode", mode, "Check set")
      ->check(CLI::IsMember({"fast", "full"}));
  verify->add_option("--tol", tol_args, "Override one check tolerance, name=value");
  verify->add_option("--out", verify_out, "Also write the report to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (figure->parsed()) {
      request.format = format == "dsv" ? pfwave::DatasetFormat::dsv
                                       : pfwave::DatasetFormat::structured;
      return write_output(pfwave::render_figure(request), figure_out);
    }
    pfwave::VerifyOptions opts;
    opts.full = mode == "full";
    opts.tolerance_overrides = parse_tolerances(tol_args);
    const pfwave::VerifyReport report = pfwave::run_verification(opts);
    const int rc = write_output(pfwave::render_verification_report(report), verify_out);
    if (rc != 0) return rc;
    return report.all_passed() ? 0 : 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
