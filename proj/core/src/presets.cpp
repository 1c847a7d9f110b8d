#include <algorithm>

#include "zenolse/errors.hpp"
#include "zenolse/scenario.hpp"

namespace zenolse {

namespace {

// Breather presets pin the domain to exactly four spatial periods so the
// periodic boundary is an exact symmetry of the sampled solution.
GridConfig breather_grid(double a) {
  const double half = 2.0 * AkhmedievBreather{a}.spatial_period();
  return {2048, -half, half};
}

ScenarioConfig base_config(std::string name, AnalyticSolution solution,
                           double t0, GridConfig grid = {}) {
  ScenarioConfig config;
  config.name = std::move(name);
  config.initial.solution = solution;
  config.initial.t0 = t0;
  config.grid = grid;
  config.solver = SsfmParams{1e-3, Splitting::Lie, 50};
  return config;
}

ScenarioConfig free_run(std::string name, AnalyticSolution solution,
                        GridConfig grid) {
  auto config = base_config(std::move(name), solution, -5.0, grid);
  config.phases = {FreePhase{5.0}};
  config.output.probability_table = false;
  config.output.profile_snapshots = false;
  return config;
}

ScenarioConfig observed_run(std::string name, AnalyticSolution solution,
                            GridConfig grid, Window window) {
  auto config = base_config(std::move(name), solution, -5.0, grid);
  ZenoPhaseConfig zeno;
  zeno.t_end = 5.0;
  zeno.window = window;
  zeno.per_step = true;
  zeno.mode = ProjectionMode::Raw;  // unnormalized profiles
  config.phases = {FreePhase{0.0}, PhaseConfig{zeno}};
  return config;
}

ScenarioConfig sweep_run(std::string name, AnalyticSolution solution,
                         Window window, std::vector<std::size_t> counts,
                         ProjectionMode mode) {
  auto config = base_config(std::move(name), solution, 0.0);
  ZenoPhaseConfig zeno;
  zeno.t_end = 2.0;
  zeno.window = window;
  zeno.measurements = std::move(counts);
  zeno.mode = mode;
  config.phases = {PhaseConfig{zeno}};
  config.output.field_surface = false;
  config.output.spectrum_surface = false;
  return config;
}

struct PresetDefinition {
  PresetInfo info;
  std::vector<ScenarioConfig> (*build)();
};

const PresetDefinition kPresets[] = {
    {{"fig1",
      "Akhmediev breather (a=0.45): free run and continuous observation in "
      "[-7.5,7.5] during t=0..5 (unnormalized)"},
     [] {
       return std::vector<ScenarioConfig>{
           free_run("fig1-free", AkhmedievBreather{0.45}, breather_grid(0.45)),
           observed_run("fig1-zeno", AkhmedievBreather{0.45},
                        breather_grid(0.45), Window{-7.5, 7.5})};
     }},
    {{"fig1a", "Akhmediev breather (a=0.45), free evolution t=-5..5 only"},
     [] {
       return std::vector<ScenarioConfig>{
           free_run("fig1a", AkhmedievBreather{0.45}, breather_grid(0.45))};
     }},
    {{"fig2",
      "Akhmediev breather (a=0.45): free run and continuous observation in "
      "the narrower window [-5,5] during t=0..5 (unnormalized)"},
     [] {
       return std::vector<ScenarioConfig>{
           free_run("fig2-free", AkhmedievBreather{0.45}, breather_grid(0.45)),
           observed_run("fig2-zeno", AkhmedievBreather{0.45},
                        breather_grid(0.45), Window{-5.0, 5.0})};
     }},
    {{"fig3",
      "Peregrine soliton: free run and continuous observation in [-7.5,7.5] "
      "during t=0..5 (unnormalized)"},
     [] {
       return std::vector<ScenarioConfig>{
           free_run("fig3-free", Peregrine{}, GridConfig{}),
           observed_run("fig3-zeno", Peregrine{}, GridConfig{},
                        Window{-7.5, 7.5})};
     }},
    {{"fig4",
      "Peregrine soliton, unnormalized profiles after N measurements in "
      "[-0.8,0.8] over t=0..2, N in {10,100,1000}"},
     [] {
       return std::vector<ScenarioConfig>{
           sweep_run("fig4", Peregrine{}, Window{-0.8, 0.8}, {10, 100, 1000},
                     ProjectionMode::Raw)};
     }},
    {{"fig5",
      "Peregrine soliton, survival probability in [-0.8,0.8] over t=0..2, N "
      "sweep {10,50,100,500,1000}, with closed-form comparison columns"},
     [] {
       return std::vector<ScenarioConfig>{
           sweep_run("fig5", Peregrine{}, Window{-0.8, 0.8},
                     {10, 50, 100, 500, 1000}, ProjectionMode::Normalized)};
     }},
    {{"fig6",
      "Akhmediev-Peregrine soliton: free run and continuous observation in "
      "Zeno window [-7.5,7.5], t=0..5 (unnormalized)"},
     [] {
       return std::vector<ScenarioConfig>{
           free_run("fig6-free", AkhmedievPeregrine{}, GridConfig{}),
           observed_run("fig6-zeno", AkhmedievPeregrine{}, GridConfig{},
                        Window{-7.5, 7.5})};
     }},
    {{"fig7",
      "Akhmediev-Peregrine soliton, unnormalized profiles after N "
      "measurements in [-1.7,1.7] over t=0..2, N in {10,100,1000}"},
     [] {
       return std::vector<ScenarioConfig>{
           sweep_run("fig7", AkhmedievPeregrine{}, Window{-1.7, 1.7},
                     {10, 100, 1000}, ProjectionMode::Raw)};
     }},
    {{"fig8",
      "Akhmediev-Peregrine soliton, survival probability in [-0.8,0.8] over "
      "t=0..2, N sweep {10,50,100,500,1000}, with closed-form columns"},
     [] {
       return std::vector<ScenarioConfig>{
           sweep_run("fig8", AkhmedievPeregrine{}, Window{-0.8, 0.8},
                     {10, 50, 100, 500, 1000}, ProjectionMode::Normalized)};
     }},
    {{"planewave-smoke", "Plane-wave background, free t=0..1 on a small grid"},
     [] {
       auto config =
           base_config("planewave-smoke", PlaneWave{}, 0.0, {256, -20.0, 20.0});
       config.phases = {FreePhase{1.0}};
       config.solver.record_every = 100;
       config.output.probability_table = false;
       return std::vector<ScenarioConfig>{config};
     }},
    {{"peregrine-smoke", "Peregrine soliton, free t=-1..1 on a small grid"},
     [] {
       auto config =
           base_config("peregrine-smoke", Peregrine{}, -1.0, {512, -20.0, 20.0});
       config.phases = {FreePhase{1.0}};
       config.solver.record_every = 100;
       config.output.probability_table = false;
       return std::vector<ScenarioConfig>{config};
     }},
    {{"zeno-smoke",
      "Peregrine soliton, 10 normalized measurements in [-5,5] over t=0..1 on "
      "a small grid"},
     [] {
       auto config =
           base_config("zeno-smoke", Peregrine{}, 0.0, {512, -20.0, 20.0});
       ZenoPhaseConfig zeno;
       zeno.t_end = 1.0;
       zeno.window = Window{-5.0, 5.0};
       zeno.measurements = {10};
       config.phases = {PhaseConfig{zeno}};
       config.solver.record_every = 10;
       return std::vector<ScenarioConfig>{config};
     }},
};

}  // namespace

std::vector<PresetInfo> list_presets() {
  std::vector<PresetInfo> out;
  out.reserve(std::size(kPresets));
  for (const auto& preset : kPresets) out.push_back(preset.info);
  return out;
}

std::vector<ScenarioConfig> preset_configs(const std::string& name) {
  for (const auto& preset : kPresets) {
    if (preset.info.name == name) return preset.build();
  }
  throw ConfigError("unknown preset '" + name +
                    "' (see `zenolse list-presets`)");
}

}  // namespace zenolse
