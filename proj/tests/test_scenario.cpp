#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "zenolse/errors.hpp"
#include "zenolse/scenario.hpp"

using namespace zenolse;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& name)
      : path(fs::temp_directory_path() / ("zenolse_test_" + name)) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("minimal config applies defaults") {
  const auto config = parse_config("initial = peregrine\n");
  CHECK(solution_name(config.initial.solution) == "peregrine");
  CHECK(config.initial.t0 == -5.0);
  CHECK(config.grid.points == 2048);
  CHECK(config.grid.x_min == -20.0);
  CHECK(config.grid.x_max == 20.0);
  CHECK(config.solver.dt == 1e-3);
  REQUIRE(config.phases.size() == 1);
  const auto* free_phase = std::get_if<FreePhase>(&config.phases[0]);
  REQUIRE(free_phase != nullptr);
  CHECK(free_phase->t_end == 5.0);
  CHECK(validate_config(config) == std::vector<std::string>{""});
}

TEST_CASE("sections and dotted keys are equivalent") {
  const std::string with_sections = R"(
name = demo
initial = akhmediev_breather

[initial]
a = 0.4
t0 = -3

[grid]
points = 512

[phase.1]
kind = free
t_end = -1

[phase.2]
kind = zeno
t_end = 0
window = -5 5
measurements = 100
normalize = false
)";
  const std::string flat = R"(
name = demo
initial = akhmediev_breather
initial.a = 0.4
initial.t0 = -3
grid.points = 512
phase.1.kind = free
phase.1.t_end = -1
phase.2.kind = zeno
phase.2.t_end = 0
phase.2.window = -5, 5
phase.2.measurements = 100
phase.2.normalize = false
)";
  const auto a = parse_config(with_sections);
  const auto b = parse_config(flat);
  CHECK(render_config(a) == render_config(b));
  const auto* zeno = std::get_if<ZenoPhaseConfig>(&a.phases[1]);
  REQUIRE(zeno != nullptr);
  CHECK(zeno->mode == ProjectionMode::Raw);
  CHECK(zeno->window.left == -5.0);
  CHECK(zeno->measurements == std::vector<std::size_t>{100});
}

TEST_CASE("unknown keys are rejected") {
  CHECK_THROWS_AS(parse_config("initial = peregrine\nbogus = 1\n"),
                  ConfigError);
  CHECK_THROWS_AS(parse_config("initial = peregrine\ngrid.shape = round\n"),
                  ConfigError);
  CHECK_THROWS_AS(
      parse_config("initial = peregrine\nphase.1.kind = free\n"
                   "phase.1.t_end = 0\nphase.1.knob = 3\n"),
      ConfigError);
  CHECK_THROWS_AS(parse_config("grid.points = 2048\n"), ConfigError);
}

TEST_CASE("commensurability is enforced with the phase named") {
  // 5/5000 = 1e-3: accepted.
  const auto good = parse_config(
      "initial = peregrine\ninitial.t0 = 0\n"
      "phase.1.kind = zeno\nphase.1.t_end = 5\n"
      "phase.1.window = -5 5\nphase.1.measurements = 5000\n");
  CHECK(validate_config(good) == std::vector<std::string>{""});

  // 5/7 is not a multiple of 1e-3: rejected, phase named.
  const auto bad = parse_config(
      "initial = peregrine\ninitial.t0 = 0\n"
      "phase.1.kind = zeno\nphase.1.t_end = 5\n"
      "phase.1.window = -5 5\nphase.1.measurements = 7\n");
  try {
    validate_config(bad);
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("phase 1") != std::string::npos);
  }
}

TEST_CASE("phase ordering and sweep constraints") {
  const auto decreasing = parse_config(
      "initial = peregrine\ninitial.t0 = 0\n"
      "phase.1.kind = free\nphase.1.t_end = 1\n"
      "phase.2.kind = free\nphase.2.t_end = 0.5\n");
  CHECK_THROWS_AS(validate_config(decreasing), ConfigError);

  const auto sweep = parse_config(
      "initial = peregrine\ninitial.t0 = 0\n"
      "phase.1.kind = zeno\nphase.1.t_end = 2\n"
      "phase.1.window = -0.8 0.8\nphase.1.measurements = 10 50 100\n");
  CHECK(validate_config(sweep) ==
        std::vector<std::string>{"N10", "N50", "N100"});

  const auto double_sweep = parse_config(
      "initial = peregrine\ninitial.t0 = 0\n"
      "phase.1.kind = zeno\nphase.1.t_end = 1\n"
      "phase.1.window = -0.8 0.8\nphase.1.measurements = 10 100\n"
      "phase.2.kind = zeno\nphase.2.t_end = 2\n"
      "phase.2.window = -0.8 0.8\nphase.2.measurements = 10 100\n");
  CHECK_THROWS_AS(validate_config(double_sweep), ConfigError);
}

TEST_CASE("breather parameter reaches validation") {
  const auto config = parse_config(
      "initial = akhmediev_breather\ninitial.a = 0.9\n");
  CHECK_THROWS_AS(validate_config(config), ConfigError);
}

TEST_CASE("run_scenario emits the requested files deterministically") {
  TempDir tmp("run");
  ScenarioConfig config = parse_config(R"(
name = smoke
initial = peregrine
initial.t0 = 0
grid.points = 256
solver.record_every = 100

[phase.1]
kind = zeno
t_end = 0.5
window = -5 5
measurements = 5
)");
  config.output.directory = tmp.path / "a";
  const auto manifest = run_scenario(config);

  REQUIRE(manifest.files.size() == 4);
  CHECK(fs::exists(tmp.path / "a" / "field.csv"));
  CHECK(fs::exists(tmp.path / "a" / "spectrum.csv"));
  CHECK(fs::exists(tmp.path / "a" / "probability.csv"));
  CHECK(fs::exists(tmp.path / "a" / "profile_final.csv"));
  CHECK(fs::exists(tmp.path / "a" / "manifest.json"));

  const std::string field = slurp(tmp.path / "a" / "field.csv");
  CHECK(field.starts_with("t,x,abs_psi,re_psi,im_psi\n"));
  CHECK(field.find("\r") == std::string::npos);
  const std::string probability = slurp(tmp.path / "a" / "probability.csv");
  CHECK(probability.starts_with(
      "N,n,t_n,survival,cumulative,analytic_survival,analytic_cumulative\n"));
  CHECK(std::count(probability.begin(), probability.end(), '\n') == 6);

  // Re-running the same config reproduces byte-identical CSV bodies.
  config.output.directory = tmp.path / "b";
  run_scenario(config);
  for (const char* name :
       {"field.csv", "spectrum.csv", "probability.csv", "profile_final.csv"}) {
    CHECK(slurp(tmp.path / "a" / name) == slurp(tmp.path / "b" / name));
  }

  // Manifest row counts match the files.
  for (const auto& file : manifest.files) {
    const std::string body = slurp(tmp.path / "a" / file.path);
    CHECK(static_cast<std::size_t>(
              std::count(body.begin(), body.end(), '\n')) == file.rows + 1);
  }
}

TEST_CASE("sweep members write suffixed files") {
  TempDir tmp("sweep");
  ScenarioConfig config = parse_config(R"(
name = sweepdemo
initial = peregrine
initial.t0 = 0
grid.points = 256
solver.record_every = 0

[phase.1]
kind = zeno
t_end = 0.2
window = -5 5
measurements = 2 4
)");
  config.output.directory = tmp.path;
  config.output.field_surface = false;
  config.output.spectrum_surface = false;
  run_scenario(config);
  CHECK(fs::exists(tmp.path / "probability_N2.csv"));
  CHECK(fs::exists(tmp.path / "probability_N4.csv"));
  CHECK(fs::exists(tmp.path / "profile_final_N2.csv"));
  CHECK(fs::exists(tmp.path / "profile_final_N4.csv"));
}

TEST_CASE("phase boundaries are exact") {
  TempDir tmp("boundary");
  ScenarioConfig config = parse_config(
      "initial = peregrine\ninitial.t0 = -1\ngrid.points = 256\n"
      "solver.record_every = 0\n"
      "phase.1.kind = free\nphase.1.t_end = -0.5\n"
      "phase.2.kind = zeno\nphase.2.t_end = 0\n"
      "phase.2.window = -5 5\nphase.2.measurements = 10\n"
      "phase.3.kind = free\nphase.3.t_end = 0.25\n");
  config.output.directory = tmp.path;
  config.output.field_surface = false;
  config.output.spectrum_surface = false;
  const auto manifest = run_scenario(config);
  (void)manifest;
  const std::string profile = slurp(tmp.path / "profile_final.csv");
  CHECK(profile.find("\n0.25,") != std::string::npos);
}

TEST_CASE("list_presets covers the experiment protocols") {
  const auto presets = list_presets();
  CHECK(presets.size() >= 10);

  auto find = [&](const std::string& name) -> const PresetInfo* {
    for (const auto& preset : presets) {
      if (preset.name == name) return &preset;
    }
    return nullptr;
  };
  REQUIRE(find("fig6") != nullptr);
  CHECK(find("fig6")->description.find("Akhmediev-Peregrine") !=
        std::string::npos);
  CHECK(find("fig6")->description.find("[-7.5,7.5]") != std::string::npos);
  CHECK(find("fig6")->description.find("t=0..5") != std::string::npos);
  CHECK(find("planewave-smoke") != nullptr);
  CHECK(find("fig5") != nullptr);

  // Stable ordering.
  const auto again = list_presets();
  for (std::size_t i = 0; i < presets.size(); ++i) {
    CHECK(presets[i].name == again[i].name);
  }

  for (const auto& preset : presets) {
    for (const auto& member : preset_configs(preset.name)) {
      CHECK_NOTHROW(validate_config(member));
    }
  }
  CHECK_THROWS_AS(preset_configs("figX"), ConfigError);
}

TEST_CASE("free breather preset peaks at the focus") {
  TempDir tmp("fig1a");
  PresetOverrides overrides;
  overrides.output_dir = tmp.path;
  const auto manifests = run_preset("fig1a", overrides);
  REQUIRE(manifests.size() == 1);
  CHECK(fs::exists(tmp.path / "manifest.json"));

  // Scan the surface for the maximum of |psi|.
  std::ifstream in(tmp.path / "field.csv");
  REQUIRE(in.good());
  std::string line;
  std::getline(in, line);  // header
  double best = 0.0, best_t = 1e9;
  double origin_mag = 0.0;
  while (std::getline(in, line)) {
    const auto c1 = line.find(',');
    const auto c2 = line.find(',', c1 + 1);
    const auto c3 = line.find(',', c2 + 1);
    const double t = std::stod(line.substr(0, c1));
    const double x = std::stod(line.substr(c1 + 1, c2 - c1 - 1));
    const double mag = std::stod(line.substr(c2 + 1, c3 - c2 - 1));
    if (mag > best) {
      best = mag;
      best_t = t;
    }
    if (std::abs(t) <= 0.025 && std::abs(x) <= 0.01) origin_mag = mag;
  }
  CHECK(best == doctest::Approx(2.8974).epsilon(2e-4));
  CHECK(std::abs(best_t) <= 0.025 + 1e-12);  // nearest recorded slice
  // The breather is x-periodic, so equal peaks recur every spatial period;
  // the bin nearest the origin must attain the surface maximum.
  CHECK(origin_mag == doctest::Approx(best).epsilon(1e-9));
}
