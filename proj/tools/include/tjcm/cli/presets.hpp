#pragma once

#include <string>
#include <vector>

#include "tjcm/types.hpp"

namespace tjcm::cli {

// One plotted curve of a figure preset. T is used by the single-time
// scenarios (wigner, phase); series scenarios take the preset time grid.
struct PresetCurve {
  SdnParams sdn;
  int k = 1;
  double g = 1.0;
  double T = 0.0;
  std::string label;
};

struct Preset {
  std::string name;
  std::string scenario;
  std::vector<PresetCurve> curves;
  int cutoff = 0;  // pinned evolution cutoff
  double tmax = 50.0;
  int steps = 1001;
  int grid_points = 201;
  int thetas = 720;
};

/// nullptr when the name is unknown.
const Preset* find_preset(const std::string& name);

std::vector<std::string> preset_names();

}  // namespace tjcm::cli
