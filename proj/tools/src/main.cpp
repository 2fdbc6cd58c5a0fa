#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tjcm/cli/presets.hpp"
#include "tjcm/cli/run_config.hpp"

namespace {

struct FlagSet {
  tjcm::cli::RunConfig flags;
  std::string config_path;
  CLI::App* sub = nullptr;
};

void add_common_options(CLI::App& sub, FlagSet& fs) {
  sub.add_option("--alpha", fs.flags.sdn.alpha, "displacement amplitude (>= 0)");
  sub.add_option("--epsilon", fs.flags.sdn.epsilon, "superposition parameter");
  sub.add_option("--m", fs.flags.sdn.m, "seed Fock number");
  sub.add_option("--k", fs.flags.k, "photons per atomic transition");
  sub.add_option("--g", fs.flags.g, "coupling ratio lambda2/lambda1");
  sub.add_option("--cutoff", fs.flags.cutoff, "evolution cutoff (field extends 2k above)");
  sub.add_option("--tmax", fs.flags.tmax, "end of the time grid");
  sub.add_option("--steps", fs.flags.steps, "number of time samples");
  sub.add_option("--t-list", fs.flags.t_list, "explicit times, comma separated")
      ->delimiter(',');
  sub.add_option("--grid", fs.flags.grid_points, "grid points per axis / theta samples");
  sub.add_option("--grid-radius", fs.flags.grid_radius, "phase-space half-width");
  sub.add_option("--atom", fs.flags.atom, "atom index for tangle-ar (1 or 2)")
      ->check(CLI::IsMember({1, 2}));
  sub.add_option("--preset", fs.flags.preset, "figure preset (fig1a .. fig6b)");
  sub.add_option("--out", fs.flags.out, "output path, '-' for stdout");
  sub.add_option("--format", fs.flags.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  sub.add_option("--config", fs.config_path, "flat JSON config file; flags override");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"two-atom k-photon cavity simulator"};
  app.require_subcommand(1);

  const std::vector<std::string> scenarios = {
      "pn",     "inversion", "wigner",    "wigner-asymptotic",
      "phase",  "tangle-fa", "tangle-ar", "validate"};
  const std::vector<std::string> blurbs = {
      "photon-number distribution of the initial field",
      "atomic inversion time series",
      "Wigner function at one time",
      "strong-intensity Wigner closed form",
      "phase distribution at one time",
      "field vs two-atom tangle time series",
      "one-atom vs remainder tangle time series",
      "dense-oracle self check"};

  std::vector<FlagSet> flag_sets(scenarios.size());
  for (std::size_t i = 0; i < scenarios.size(); ++i) {
    flag_sets[i].sub = app.add_subcommand(scenarios[i], blurbs[i]);
    flag_sets[i].flags.scenario = scenarios[i];
    add_common_options(*flag_sets[i].sub, flag_sets[i]);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Normalize CLI11's parse-error codes onto the documented contract:
    // 0 for --help and friends, 1 for any bad invocation.
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    for (auto& fs : flag_sets) {
      if (!fs.sub->parsed()) continue;
      tjcm::cli::RunConfig config;
      config.scenario = fs.flags.scenario;
      if (!fs.config_path.empty()) {
        tjcm::cli::apply_config_file(config, fs.config_path);
      }
      // Flags the user actually passed override the config file.
      for (const CLI::Option* opt : fs.sub->get_options()) {
        if (opt->count() == 0) continue;
        const std::string name = opt->get_name();
        if (name == "--alpha") config.sdn.alpha = fs.flags.sdn.alpha;
        else if (name == "--epsilon") config.sdn.epsilon = fs.flags.sdn.epsilon;
        else if (name == "--m") config.sdn.m = fs.flags.sdn.m;
        else if (name == "--k") config.k = fs.flags.k;
        else if (name == "--g") config.g = fs.flags.g;
        else if (name == "--cutoff") config.cutoff = fs.flags.cutoff;
        else if (name == "--tmax") config.tmax = fs.flags.tmax;
        else if (name == "--steps") config.steps = fs.flags.steps;
        else if (name == "--t-list") config.t_list = fs.flags.t_list;
        else if (name == "--grid") config.grid_points = fs.flags.grid_points;
        else if (name == "--grid-radius") config.grid_radius = fs.flags.grid_radius;
        else if (name == "--atom") config.atom = fs.flags.atom;
        else if (name == "--preset") config.preset = fs.flags.preset;
        else if (name == "--out") config.out = fs.flags.out;
        else if (name == "--format") config.format = fs.flags.format;
      }
      return tjcm::cli::run(config);
    }
  } catch (const tjcm::cli::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const tjcm::CutoffError& e) {
    std::cerr << "cutoff error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
