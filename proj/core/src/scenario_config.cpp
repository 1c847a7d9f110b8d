#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <utility>

#include "zenolse/csv.hpp"
#include "zenolse/errors.hpp"
#include "zenolse/scenario.hpp"

namespace zenolse {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("config: key '" + key + "' expects a number, got '" +
                      value + "'");
  }
}

std::size_t parse_count(const std::string& key, const std::string& value) {
  std::size_t out = 0;
  const auto res = std::from_chars(value.data(), value.data() + value.size(), out);
  if (res.ec != std::errc() || res.ptr != value.data() + value.size() || out == 0) {
    throw ConfigError("config: key '" + key +
                      "' expects a positive integer, got '" + value + "'");
  }
  return out;
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw ConfigError("config: key '" + key + "' expects true/false, got '" +
                    value + "'");
}

AnalyticSolution parse_solution(const std::string& value, double a) {
  if (value == "plane_wave") return PlaneWave{};
  if (value == "peregrine") return Peregrine{};
  if (value == "akhmediev_peregrine") return AkhmedievPeregrine{};
  if (value == "akhmediev_breather") return AkhmedievBreather{a};
  throw ConfigError(
      "config: unknown solution '" + value +
      "' (expected plane_wave | akhmediev_breather | peregrine | "
      "akhmediev_peregrine)");
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> items;
  std::string current;
  for (char c : value) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      if (!current.empty()) items.push_back(std::exchange(current, {}));
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) items.push_back(current);
  return items;
}

struct RawPhase {
  std::map<std::string, std::string> keys;
};

}  // namespace

ScenarioConfig parse_config(const std::string& text,
                            const std::string& origin) {
  std::map<std::string, std::string> keys;       // non-phase dotted keys
  std::map<std::size_t, RawPhase> phases;        // phase index -> keys
  std::string section;

  std::istringstream stream(text);
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(stream, line)) {
    ++line_number;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;

    if (stripped.front() == '[') {
      if (stripped.back() != ']') {
        throw ConfigError(origin + ":" + std::to_string(line_number) +
                          ": malformed section header '" + stripped + "'");
      }
      section = trim(stripped.substr(1, stripped.size() - 2));
      continue;
    }
    const auto eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(origin + ":" + std::to_string(line_number) +
                        ": expected key = value, got '" + stripped + "'");
    }
    std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw ConfigError(origin + ":" + std::to_string(line_number) +
                        ": empty key or value");
    }
    if (!section.empty()) key = section + "." + key;

    // Route phase.N.* keys to their phase block.
    if (key.starts_with("phase.")) {
      const auto rest = key.substr(6);
      const auto dot = rest.find('.');
      if (dot == std::string::npos) {
        throw ConfigError("config: malformed phase key '" + key + "'");
      }
      std::size_t index = 0;
      const auto ires =
          std::from_chars(rest.data(), rest.data() + dot, index);
      if (ires.ec != std::errc() || index == 0) {
        throw ConfigError("config: malformed phase index in '" + key + "'");
      }
      const std::string field = rest.substr(dot + 1);
      auto& phase = phases[index];
      if (!phase.keys.emplace(field, value).second) {
        throw ConfigError("config: duplicate key '" + key + "'");
      }
      continue;
    }

    if (key == "initial") key = "initial.solution";  // flat shorthand
    if (!keys.emplace(key, value).second) {
      throw ConfigError("config: duplicate key '" + key + "'");
    }
  }

  ScenarioConfig config;
  auto take = [&keys](const std::string& key) -> std::optional<std::string> {
    auto it = keys.find(key);
    if (it == keys.end()) return std::nullopt;
    std::string value = it->second;
    keys.erase(it);
    return value;
  };

  if (auto v = take("name")) config.name = *v;

  double breather_a = 0.45;
  if (auto v = take("initial.a")) breather_a = parse_double("initial.a", *v);
  if (auto v = take("initial.solution")) {
    config.initial.solution = parse_solution(*v, breather_a);
  } else {
    throw ConfigError("config: missing required key 'initial'");
  }
  if (auto v = take("initial.t0")) {
    config.initial.t0 = parse_double("initial.t0", *v);
  }

  if (auto v = take("grid.points"))
    config.grid.points = parse_count("grid.points", *v);
  if (auto v = take("grid.x_min"))
    config.grid.x_min = parse_double("grid.x_min", *v);
  if (auto v = take("grid.x_max"))
    config.grid.x_max = parse_double("grid.x_max", *v);

  if (auto v = take("solver.dt")) config.solver.dt = parse_double("solver.dt", *v);
  if (auto v = take("solver.splitting")) {
    if (*v == "lie") {
      config.solver.splitting = Splitting::Lie;
    } else if (*v == "strang") {
      config.solver.splitting = Splitting::Strang;
    } else {
      throw ConfigError("config: solver.splitting must be lie or strang, got '" +
                        *v + "'");
    }
  }
  if (auto v = take("solver.record_every")) {
    // 0 is allowed: record nothing.
    std::size_t out = 0;
    const auto res = std::from_chars(v->data(), v->data() + v->size(), out);
    if (res.ec != std::errc() || res.ptr != v->data() + v->size()) {
      throw ConfigError("config: solver.record_every expects an integer");
    }
    config.solver.record_every = out;
  }

  if (auto v = take("output.dir")) config.output.directory = *v;
  if (auto v = take("output.field_surface"))
    config.output.field_surface = parse_bool("output.field_surface", *v);
  if (auto v = take("output.spectrum_surface"))
    config.output.spectrum_surface = parse_bool("output.spectrum_surface", *v);
  if (auto v = take("output.probability_table"))
    config.output.probability_table = parse_bool("output.probability_table", *v);
  if (auto v = take("output.profile_snapshots"))
    config.output.profile_snapshots =
        parse_bool("output.profile_snapshots", *v);

  if (!keys.empty()) {
    throw ConfigError("config: unknown key '" + keys.begin()->first + "'");
  }

  // Phases must be numbered 1..K.
  std::size_t expected = 1;
  for (auto& [index, raw] : phases) {
    if (index != expected) {
      throw ConfigError("config: phase." + std::to_string(expected) +
                        " is missing (phases must be numbered consecutively)");
    }
    ++expected;
    auto take_phase = [&raw](const std::string& field)
        -> std::optional<std::string> {
      auto it = raw.keys.find(field);
      if (it == raw.keys.end()) return std::nullopt;
      std::string value = it->second;
      raw.keys.erase(it);
      return value;
    };
    const std::string prefix = "phase." + std::to_string(index) + ".";
    auto kind = take_phase("kind");
    if (!kind) throw ConfigError("config: missing key '" + prefix + "kind'");
    auto t_end = take_phase("t_end");
    if (!t_end) throw ConfigError("config: missing key '" + prefix + "t_end'");
    const double t_end_value = parse_double(prefix + "t_end", *t_end);

    if (*kind == "free") {
      config.phases.emplace_back(FreePhase{t_end_value});
    } else if (*kind == "zeno") {
      ZenoPhaseConfig zeno;
      zeno.t_end = t_end_value;
      if (auto w = take_phase("window")) {
        const auto parts = split_list(*w);
        if (parts.size() != 2) {
          throw ConfigError("config: '" + prefix +
                            "window' expects two numbers (left right)");
        }
        zeno.window.left = parse_double(prefix + "window", parts[0]);
        zeno.window.right = parse_double(prefix + "window", parts[1]);
      } else {
        throw ConfigError("config: missing key '" + prefix + "window'");
      }
      if (auto m = take_phase("measurements")) {
        if (*m == "per_step") {
          zeno.per_step = true;
        } else {
          for (const auto& item : split_list(*m)) {
            zeno.measurements.push_back(
                parse_count(prefix + "measurements", item));
          }
          if (zeno.measurements.empty()) {
            throw ConfigError("config: '" + prefix + "measurements' is empty");
          }
        }
      } else {
        throw ConfigError("config: missing key '" + prefix + "measurements'");
      }
      if (auto n = take_phase("normalize")) {
        zeno.mode = parse_bool(prefix + "normalize", *n)
                        ? ProjectionMode::Normalized
                        : ProjectionMode::Raw;
      }
      config.phases.emplace_back(std::move(zeno));
    } else {
      throw ConfigError("config: '" + prefix + "kind' must be free or zeno");
    }
    if (!raw.keys.empty()) {
      throw ConfigError("config: unknown key '" + prefix +
                        raw.keys.begin()->first + "'");
    }
  }

  // Minimal configs default to a single free run over ten time units.
  if (config.phases.empty()) {
    config.phases.emplace_back(FreePhase{config.initial.t0 + 10.0});
  }
  return config;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open config file " + path.string());
  }
  std::ostringstream text;
  text << in.rdbuf();
  auto config = parse_config(text.str(), path.string());
  if (config.name == "scenario") {
    config.name = path.stem().string();
  }
  return config;
}

std::vector<std::string> validate_config(const ScenarioConfig& config) {
  const auto grid = make_grid(config.grid.points, config.grid.x_min,
                              config.grid.x_max);
  if (!(config.solver.dt > 0.0)) {
    throw ConfigError("config: solver.dt must be positive");
  }
  if (std::holds_alternative<AkhmedievBreather>(config.initial.solution)) {
    const auto& breather = std::get<AkhmedievBreather>(config.initial.solution);
    (void)breather.lambda();  // validates the parameter range
  }
  if (config.phases.empty()) {
    throw ConfigError("config: at least one phase is required");
  }

  std::vector<std::string> labels{""};
  double t_prev = config.initial.t0;
  std::size_t phase_index = 0;
  for (const auto& phase : config.phases) {
    ++phase_index;
    const std::string context = "phase " + std::to_string(phase_index);
    const double t_end = std::visit([](const auto& p) { return p.t_end; }, phase);
    if (!(t_end > t_prev)) {
      throw ConfigError("config: " + context +
                        ": t_end must exceed the previous boundary");
    }
    const std::size_t span_steps =
        commensurate_steps(t_prev, t_end, config.solver.dt, "config: " + context);

    if (const auto* zeno = std::get_if<ZenoPhaseConfig>(&phase)) {
      (void)window_index_range(*grid, zeno->window);
      std::vector<std::size_t> counts = zeno->measurements;
      if (zeno->per_step) counts = {span_steps};
      if (counts.empty()) {
        throw ConfigError("config: " + context + ": no measurement count");
      }
      for (const std::size_t n : counts) {
        const double interval =
            (t_end - t_prev) / static_cast<double>(n);
        commensurate_steps(0.0, interval, config.solver.dt,
                           "config: " + context + " (N = " + std::to_string(n) +
                               ")");
      }
      if (counts.size() > 1) {
        if (labels.size() > 1) {
          throw ConfigError(
              "config: only one phase may sweep measurement counts");
        }
        labels.clear();
        for (const std::size_t n : counts) {
          labels.push_back("N" + std::to_string(n));
        }
      }
    }
    t_prev = t_end;
  }
  return labels;
}

std::string render_config(const ScenarioConfig& config) {
  std::ostringstream out;
  out << "name = " << config.name << "\n";
  out << "initial = " << solution_name(config.initial.solution) << "\n";
  if (const auto* breather =
          std::get_if<AkhmedievBreather>(&config.initial.solution)) {
    out << "initial.a = " << CsvWriter::format_double(breather->a) << "\n";
  }
  out << "initial.t0 = " << CsvWriter::format_double(config.initial.t0) << "\n";
  out << "grid.points = " << config.grid.points << "\n";
  out << "grid.x_min = " << CsvWriter::format_double(config.grid.x_min) << "\n";
  out << "grid.x_max = " << CsvWriter::format_double(config.grid.x_max) << "\n";
  out << "solver.dt = " << CsvWriter::format_double(config.solver.dt) << "\n";
  out << "solver.splitting = "
      << (config.solver.splitting == Splitting::Lie ? "lie" : "strang") << "\n";
  out << "solver.record_every = " << config.solver.record_every << "\n";
  std::size_t index = 0;
  for (const auto& phase : config.phases) {
    ++index;
    const std::string prefix = "phase." + std::to_string(index) + ".";
    if (const auto* free_phase = std::get_if<FreePhase>(&phase)) {
      out << prefix << "kind = free\n";
      out << prefix << "t_end = " << CsvWriter::format_double(free_phase->t_end)
          << "\n";
    } else {
      const auto& zeno = std::get<ZenoPhaseConfig>(phase);
      out << prefix << "kind = zeno\n";
      out << prefix << "t_end = " << CsvWriter::format_double(zeno.t_end) << "\n";
      out << prefix << "window = " << CsvWriter::format_double(zeno.window.left)
          << " " << CsvWriter::format_double(zeno.window.right) << "\n";
      out << prefix << "measurements = ";
      if (zeno.per_step) {
        out << "per_step";
      } else {
        for (std::size_t i = 0; i < zeno.measurements.size(); ++i) {
          if (i) out << " ";
          out << zeno.measurements[i];
        }
      }
      out << "\n";
      out << prefix << "normalize = "
          << (zeno.mode == ProjectionMode::Normalized ? "true" : "false")
          << "\n";
    }
  }
  out << "output.dir = " << config.output.directory.string() << "\n";
  out << "output.field_surface = "
      << (config.output.field_surface ? "true" : "false") << "\n";
  out << "output.spectrum_surface = "
      << (config.output.spectrum_surface ? "true" : "false") << "\n";
  out << "output.probability_table = "
      << (config.output.probability_table ? "true" : "false") << "\n";
  out << "output.profile_snapshots = "
      << (config.output.profile_snapshots ? "true" : "false") << "\n";
  return out.str();
}

}  // namespace zenolse
