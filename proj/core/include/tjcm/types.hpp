#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace tjcm {

// Field-state specification: a pair of opposite displacements applied to a
// seed Fock state, weighted by epsilon. epsilon = 0 gives a displaced number
// state (a coherent state for m = 0), epsilon = +/-1 the even/odd cat-like
// superpositions.
struct SdnParams {
  double alpha = 0.0;    // real displacement amplitude, >= 0
  double epsilon = 0.0;  // weight of the opposite displacement
  int m = 0;             // seed Fock number, >= 0
};

// Interaction specification in units of the first atom's coupling constant,
// so g = lambda2/lambda1. g = 1 is the symmetric two-atom case.
struct CouplingParams {
  int k = 1;       // photons exchanged per atomic transition, >= 1
  double g = 1.0;  // coupling ratio, >= 0
  int cutoff = 0;  // largest evolved excitation block index n
};

// Uniform square grid for phase-space evaluation; axes span [-radius, radius].
struct GridSpec {
  int points = 201;
  double radius = 0.0;
};

struct TimeSeries {
  std::vector<double> times;   // strictly increasing
  std::vector<double> values;  // same length as times
};

class CutoffError : public std::runtime_error {
 public:
  explicit CutoffError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tjcm
