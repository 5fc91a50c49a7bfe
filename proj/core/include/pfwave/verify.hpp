#pragma once

#include <map>
#include <string>
#include <vector>

#include "pfwave/types.hpp"

namespace pfwave {

// One named self-check: pass iff `measured cmp tolerance`, where cmp is one
// of lt, le, gt, ge.
struct CheckResult {
  std::string name;
  double measured;
  double tolerance;
  std::string cmp;
  bool pass;
  double wall_ms;
};

struct VerifyOptions {
  bool full = false;
  std::map<std::string, double> tolerance_overrides;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  int total() const { return static_cast<int>(checks.size()); }
  int passed() const;
  bool all_passed() const { return passed() == total(); }
};

// Runs the library self-checks: closed-form identities, conservation and
// localization audits, causal-arrival detection, and cross-checks against the
// independent mode-sum evaluators. The fast set keeps only a probe subset of
// the oracle comparisons; full adds the complete probe sweeps, the periodic
// grid evolver, and the wave-operator residual.
VerifyReport run_verification(const VerifyOptions& opts);

// One "check: ..." line per result plus a trailing "summary: ..." line.
std::string render_verification_report(const VerifyReport& report);

// Canonical cross-check geometry shared by the self-checks and the external
// test suites: unit packet of half width 1/2 at the origin, detector of the
// same width centered 2 light-seconds away.
PacketSpec canonical_source();
PacketSpec canonical_detector();

// Field probe locations grouped by evolution time, all kept clear of the
// transported packet edges.
struct ProbeSet {
  double t;
  std::vector<double> x;
};
std::vector<ProbeSet> oracle_probe_sets();

// Overlap probe times, clear of the overlap kinks at |d - 2b|, d, d + 2b.
std::vector<double> overlap_probe_times();

}  // namespace pfwave
