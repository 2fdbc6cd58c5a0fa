#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "tjcm/cli/presets.hpp"
#include "tjcm/cli/run_config.hpp"
#include "tjcm/entanglement.hpp"
#include "tjcm/fock.hpp"
#include "tjcm/observables.hpp"
#include "tjcm/oracle.hpp"

namespace tjcm::cli {

namespace {

using nlohmann::ordered_json;

struct Table {
  std::vector<std::string> comments;  // emitted as '# ...' lines in CSV
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.16e", v);
  return buf;
}

void write_csv(const Table& table, std::ostream& os) {
  for (const auto& c : table.comments) os << "# " << c << "\n";
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    os << (i ? "," : "") << table.columns[i];
  }
  os << "\n";
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      os << (i ? "," : "") << format_double(row[i]);
    }
    os << "\n";
  }
}

void write_json(const Table& table, const RunConfig& config, std::ostream& os) {
  ordered_json j;
  j["scenario"] = config.scenario;
  if (!config.preset.empty()) j["preset"] = config.preset;
  j["comments"] = table.comments;
  j["columns"] = table.columns;
  j["rows"] = table.rows;
  os << j.dump(2) << "\n";
}

void emit(const Table& table, const RunConfig& config) {
  std::ostringstream body;
  if (config.format == "csv") {
    write_csv(table, body);
  } else {
    write_json(table, config, body);
  }
  if (config.out.empty() || config.out == "-") {
    std::cout << body.str();
  } else {
    std::ofstream file(config.out, std::ios::binary | std::ios::trunc);
    if (!file) throw ConfigError("cannot open output file " + config.out);
    file << body.str();
  }
}

std::vector<double> linspace(double hi, int n) {
  std::vector<double> xs(n);
  for (int i = 0; i < n; ++i) xs[i] = hi * i / (n - 1);
  return xs;
}

// Effective parameters of a run, after preset resolution.
struct Plan {
  std::vector<PresetCurve> curves;
  int cutoff = -1;
  std::vector<double> times;  // series scenarios
  int grid_points = 201;
  double grid_radius = -1.0;
  int thetas = 720;
};

bool needs_time_series(const std::string& scenario) {
  return scenario == "inversion" || scenario == "tangle-fa" || scenario == "tangle-ar";
}

Plan make_plan(const RunConfig& config) {
  Plan plan;
  double tmax = config.tmax;
  int steps = config.steps;

  if (!config.preset.empty()) {
    const Preset* preset = find_preset(config.preset);
    if (preset == nullptr) throw ConfigError("unknown preset " + config.preset);
    if (preset->scenario != config.scenario) {
      throw ConfigError("preset " + config.preset + " belongs to scenario " +
                        preset->scenario);
    }
    plan.curves = preset->curves;
    plan.cutoff = preset->cutoff;
    plan.grid_points = preset->grid_points;
    plan.thetas = preset->thetas;
    if (tmax <= 0.0) tmax = preset->tmax;
    if (steps < 0) steps = preset->steps;
  } else {
    PresetCurve curve;
    curve.sdn = config.sdn;
    curve.k = config.k;
    curve.g = config.g;
    if (!config.t_list.empty()) curve.T = config.t_list.front();
    plan.curves = {curve};
  }

  if (config.cutoff >= 0) plan.cutoff = config.cutoff;
  if (config.grid_points > 0) {
    plan.grid_points = config.grid_points;
    plan.thetas = config.grid_points;
  }
  plan.grid_radius = config.grid_radius;

  for (const auto& curve : plan.curves) {
    if (curve.sdn.alpha < 0.0) throw ConfigError("alpha must be >= 0");
    if (curve.sdn.m < 0) throw ConfigError("m must be >= 0");
    if (curve.k < 1) throw ConfigError("k must be >= 1");
    if (curve.g < 0.0) throw ConfigError("g must be >= 0");
  }

  if (needs_time_series(config.scenario)) {
    if (!config.t_list.empty()) {
      plan.times = config.t_list;
      if (plan.times.size() < 2) throw ConfigError("t-list needs at least 2 samples");
      for (std::size_t i = 1; i < plan.times.size(); ++i) {
        if (plan.times[i] <= plan.times[i - 1]) {
          throw ConfigError("t-list must be strictly increasing");
        }
      }
    } else {
      if (tmax <= 0.0) tmax = 50.0;
      if (steps < 0) steps = 1001;
      if (steps < 2) throw ConfigError("steps must be >= 2");
      plan.times = linspace(tmax, steps);
    }
  }
  return plan;
}

// Evolution cutoff for one curve; the field basis extends 2k above it.
int curve_cutoff(const Plan& plan, const PresetCurve& curve) {
  if (plan.cutoff >= 0) return plan.cutoff;
  return default_field_cutoff(curve.sdn, curve.k) - 2 * curve.k;
}

BlockEvolver make_evolver(const Plan& plan, const PresetCurve& curve) {
  const int nc = curve_cutoff(plan, curve);
  const FieldState field = build_sdn_state(curve.sdn, nc + 2 * curve.k);
  return BlockEvolver(field, CouplingParams{curve.k, curve.g, nc});
}

std::string curve_suffix(const Plan& plan, const PresetCurve& curve) {
  return plan.curves.size() > 1 || !curve.label.empty() ? "_" + curve.label : "";
}

double single_time(const RunConfig& config, const PresetCurve& curve) {
  if (!config.preset.empty()) return curve.T;
  if (config.t_list.size() != 1) {
    throw ConfigError(config.scenario + " needs exactly one time via --t-list");
  }
  return config.t_list.front();
}

int run_pn(const RunConfig& config, const Plan& plan) {
  Table table;
  table.columns = {"n"};
  std::vector<std::vector<double>> dists;
  std::size_t rows = 0;
  for (const auto& curve : plan.curves) {
    const int nc = curve_cutoff(plan, curve);
    const FieldState field = build_sdn_state(curve.sdn, nc + 2 * curve.k);
    dists.push_back(photon_distribution(field));
    rows = std::max(rows, dists.back().size());
    table.columns.push_back("P" + curve_suffix(plan, curve));
  }
  for (std::size_t n = 0; n < rows; ++n) {
    std::vector<double> row{static_cast<double>(n)};
    for (const auto& d : dists) row.push_back(n < d.size() ? d[n] : 0.0);
    table.rows.push_back(std::move(row));
  }
  emit(table, config);
  return 0;
}

int run_inversion(const RunConfig& config, const Plan& plan) {
  Table table;
  table.columns = {"T"};
  std::vector<TimeSeries> series;
  for (const auto& curve : plan.curves) {
    const BlockEvolver evolver = make_evolver(plan, curve);
    series.push_back(inversion_series(evolver, plan.times));
    const std::string suffix = curve_suffix(plan, curve);
    table.columns.push_back("sigma_z" + suffix);
    std::ostringstream note;
    note << "revival_analytic" << suffix << " = "
         << format_double(revival_time(evolver.field()));
    try {
      note << "  revival_located" << suffix << " = "
           << format_double(locate_revival(series.back()));
    } catch (const std::runtime_error&) {
      note << "  revival_located" << suffix << " = none";
    }
    table.comments.push_back(note.str());
  }
  for (std::size_t i = 0; i < plan.times.size(); ++i) {
    std::vector<double> row{plan.times[i]};
    for (const auto& s : series) row.push_back(s.values[i]);
    table.rows.push_back(std::move(row));
  }
  emit(table, config);
  return 0;
}

int run_tangle(const RunConfig& config, const Plan& plan, TangleKind kind) {
  Table table;
  table.columns = {"T"};
  std::vector<TimeSeries> series;
  for (const auto& curve : plan.curves) {
    const BlockEvolver evolver = make_evolver(plan, curve);
    series.push_back(tangle_series(evolver, plan.times, kind, config.atom));
    table.columns.push_back("I" + curve_suffix(plan, curve));
  }
  for (std::size_t i = 0; i < plan.times.size(); ++i) {
    std::vector<double> row{plan.times[i]};
    for (const auto& s : series) row.push_back(s.values[i]);
    table.rows.push_back(std::move(row));
  }
  emit(table, config);
  return 0;
}

void fill_wigner_rows(const WignerGrid& grid, Table& table) {
  for (std::size_t ix = 0; ix < grid.x_axis.size(); ++ix) {
    for (std::size_t iy = 0; iy < grid.y_axis.size(); ++iy) {
      table.rows.push_back({grid.x_axis[ix], grid.y_axis[iy], grid.values(ix, iy)});
    }
  }
}

int run_wigner(const RunConfig& config, const Plan& plan) {
  if (plan.curves.size() != 1) throw ConfigError("wigner runs a single parameter set");
  const PresetCurve& curve = plan.curves.front();
  const double T = single_time(config, curve);
  const BlockEvolver evolver = make_evolver(plan, curve);
  GridSpec grid{plan.grid_points,
                plan.grid_radius > 0.0 ? plan.grid_radius
                                       : default_grid_radius(curve.sdn.alpha)};
  const WignerGrid w = wigner(evolver.evolve(T), grid);
  if (w.boundary_warning) {
    std::cerr << "warning: |W| > 1e-6 on the grid boundary; enlarge --grid-radius\n";
  }
  Table table;
  table.comments.push_back("T = " + format_double(T));
  table.columns = {"x", "y", "W"};
  fill_wigner_rows(w, table);
  emit(table, config);
  return 0;
}

int run_wigner_asymptotic(const RunConfig& config, const Plan& plan) {
  if (plan.curves.size() != 1) throw ConfigError("wigner-asymptotic runs a single parameter set");
  const PresetCurve& curve = plan.curves.front();
  const double T = single_time(config, curve);
  GridSpec grid{plan.grid_points,
                plan.grid_radius > 0.0 ? plan.grid_radius
                                       : default_grid_radius(curve.sdn.alpha)};
  const WignerGrid w = wigner_asymptotic(curve.sdn.alpha, T, grid);
  Table table;
  table.comments.push_back("T = " + format_double(T));
  table.columns = {"x", "y", "W"};
  fill_wigner_rows(w, table);
  emit(table, config);
  return 0;
}

int run_phase(const RunConfig& config, const Plan& plan) {
  Table table;
  table.columns = {"theta"};
  std::vector<PhaseDistribution> dists;
  for (const auto& curve : plan.curves) {
    const double T = single_time(config, curve);
    const BlockEvolver evolver = make_evolver(plan, curve);
    dists.push_back(phase_distribution(evolver.evolve(T), plan.thetas));
    table.columns.push_back("P" + curve_suffix(plan, curve));
    table.comments.push_back("T" + curve_suffix(plan, curve) + " = " + format_double(T));
  }
  for (std::size_t i = 0; i < dists.front().thetas.size(); ++i) {
    std::vector<double> row{dists.front().thetas[i]};
    for (const auto& d : dists) row.push_back(d.values[i]);
    table.rows.push_back(std::move(row));
  }
  emit(table, config);
  return 0;
}

int run_validate(const RunConfig& config) {
  ValidationConfig vc;
  if (config.cutoff >= 0) vc.cutoff = config.cutoff;
  if (config.sdn.alpha > 0.0) vc.alpha = config.sdn.alpha;
  const ValidationReport report = run_oracle_validation(vc);
  for (const auto& check : report.checks) {
    std::cout << (check.pass ? "[PASS] " : "[FAIL] ") << check.name
              << "  max|diff| = " << format_double(check.max_diff) << "\n";
  }
  std::cout << (report.all_pass() ? "validation passed" : "validation FAILED") << "\n";
  return report.all_pass() ? 0 : 2;
}

}  // namespace

void apply_config_file(RunConfig& config, const std::string& path) {
  std::ifstream file(path);
  if (!file) throw ConfigError("cannot open config file " + path);
  nlohmann::json j;
  try {
    file >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config file parse error: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config file must hold a JSON object");
  for (const auto& [key, value] : j.items()) {
    try {
      if (key == "alpha") config.sdn.alpha = value.get<double>();
      else if (key == "epsilon") config.sdn.epsilon = value.get<double>();
      else if (key == "m") config.sdn.m = value.get<int>();
      else if (key == "k") config.k = value.get<int>();
      else if (key == "g") config.g = value.get<double>();
      else if (key == "cutoff") config.cutoff = value.get<int>();
      else if (key == "tmax") config.tmax = value.get<double>();
      else if (key == "steps") config.steps = value.get<int>();
      else if (key == "t_list") config.t_list = value.get<std::vector<double>>();
      else if (key == "grid") config.grid_points = value.get<int>();
      else if (key == "grid_radius") config.grid_radius = value.get<double>();
      else if (key == "atom") config.atom = value.get<int>();
      else if (key == "preset") config.preset = value.get<std::string>();
      else if (key == "out") config.out = value.get<std::string>();
      else if (key == "format") config.format = value.get<std::string>();
      else throw ConfigError("unknown config key " + key);
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError("config key " + key + ": " + e.what());
    }
  }
}

double locate_revival(const TimeSeries& series) {
  const std::size_t n = series.values.size();
  if (n < 20 || series.times.size() != n) {
    throw std::runtime_error("locate_revival: series too short");
  }
  double mean = 0.0;
  for (double v : series.values) mean += v;
  mean /= static_cast<double>(n);

  // 10-sample sliding-window maximum of the deviation from the mean.
  std::vector<double> envelope(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t lo = i >= 5 ? i - 5 : 0;
    const std::size_t hi = std::min(n, i + 5);
    double e = 0.0;
    for (std::size_t j = lo; j < hi; ++j) e = std::max(e, std::abs(series.values[j] - mean));
    envelope[i] = e;
  }

  const double threshold = 0.25 * envelope.front();
  if (!(threshold > 0.0)) throw std::runtime_error("locate_revival: no collapse detected");
  std::size_t collapse = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (envelope[i] <= threshold) {
      collapse = i;
      break;
    }
  }
  if (collapse == n) throw std::runtime_error("locate_revival: no collapse detected");

  std::size_t best = collapse;
  for (std::size_t i = collapse; i < n; ++i) {
    if (envelope[i] > envelope[best]) best = i;
  }
  return series.times[best];
}

int run(const RunConfig& config) {
  if (config.format != "csv" && config.format != "json") {
    throw ConfigError("format must be csv or json");
  }
  if (config.scenario == "validate") return run_validate(config);

  const Plan plan = make_plan(config);
  if (config.scenario == "pn") return run_pn(config, plan);
  if (config.scenario == "inversion") return run_inversion(config, plan);
  if (config.scenario == "wigner") return run_wigner(config, plan);
  if (config.scenario == "wigner-asymptotic") return run_wigner_asymptotic(config, plan);
  if (config.scenario == "phase") return run_phase(config, plan);
  if (config.scenario == "tangle-fa") return run_tangle(config, plan, TangleKind::FieldAtoms);
  if (config.scenario == "tangle-ar") return run_tangle(config, plan, TangleKind::OneAtom);
  throw ConfigError("unknown scenario " + config.scenario);
}

}  // namespace tjcm::cli
