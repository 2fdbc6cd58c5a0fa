#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "tjcm/types.hpp"

namespace tjcm::cli {

class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// One resolved run: scenario plus every knob the scenarios share. Values left
// at their sentinel (-1 / empty) fall back to scenario defaults.
struct RunConfig {
  std::string scenario;
  SdnParams sdn{};
  int k = 1;
  double g = 1.0;
  int cutoff = -1;  // evolution block cutoff; field basis extends 2k above
  double tmax = -1.0;
  int steps = -1;
  std::vector<double> t_list;
  int grid_points = -1;  // wigner axis points; phase theta count
  double grid_radius = -1.0;
  int atom = 1;
  std::string preset;
  std::string out = "-";
  std::string format = "csv";
};

/// Loads a flat key-value JSON file whose keys mirror the long flags
/// (alpha, epsilon, m, k, g, cutoff, tmax, steps, t_list, grid, grid_radius,
/// atom, preset, out, format). Unknown keys are rejected.
void apply_config_file(RunConfig& config, const std::string& path);

/// Exit codes: 0 success, 1 config error, 2 validation failure.
int run(const RunConfig& config);

/// Scaled time of the strongest revival after the first collapse. The
/// envelope is a 10-sample sliding-window maximum of |values - mean|; the
/// collapse is the first sample where it drops below a quarter of its
/// initial value. Throws std::runtime_error when no collapse is found.
double locate_revival(const TimeSeries& series);

}  // namespace tjcm::cli
