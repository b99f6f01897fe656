// Copyright 2026 The svkit developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Everything goes through the C API in svkit.h;
// this translation unit owns only configuration parsing and formatting.

#include <svkit.h>

#include <CLI11.hpp>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitSolver = 3;

constexpr double kPi = 3.14159265358979323846;

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

[[noreturn]] void fail_config(const std::string& message) {
  throw ConfigError(message);
}

// Maps a C API status to a process exit code, raising ConfigError for
// argument-level problems so the caller reports them uniformly.
int check_status(svkit_status status, const std::string& context) {
  switch (status) {
    case SVKIT_OK:
      return kExitOk;
    case SVKIT_ERR_ARGUMENT:
    case SVKIT_ERR_IO:
      fail_config(context + ": " + svkit_last_error());
    case SVKIT_ERR_SOLVER:
    case SVKIT_ERR_CONSISTENCY:
    default:
      std::cerr << "error: " << context << ": " << svkit_last_error()
                << "\n";
      std::exit(kExitSolver);
  }
}

// ----- configuration ------------------------------------------------------

struct ConfigValue {
  std::string text;
  std::string origin;  // "file:line" or "command line"
};

using ConfigMap = std::map<std::string, ConfigValue>;

const std::array<std::string, 6> kSettingKeys = {"a", "a_prime", "b",
                                                 "b_prime", "c", "c_prime"};

bool known_key(const std::string& key) {
  for (const std::string& s : kSettingKeys) {
    if (key == s) return true;
  }
  static const std::array<std::string, 12> others = {
      "state", "scenario", "menu", "shots", "seed", "trials",
      "tolerance", "space", "seeds", "max_iterations", "step_tolerance",
      "out"};
  for (const std::string& s : others) {
    if (key == s) return true;
  }
  return false;
}

std::string trim(const std::string& s) {
  const size_t begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const size_t end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

void load_config_file(const std::string& path, ConfigMap& config) {
  std::ifstream in(path);
  if (!in) fail_config(path + ": cannot open config file");
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const std::string origin = path + ":" + std::to_string(line_number);
    const size_t comment = line.find('#');
    if (comment != std::string::npos) line.erase(comment);
    const std::string text = trim(line);
    if (text.empty()) continue;
    const size_t eq = text.find('=');
    if (eq == std::string::npos) {
      fail_config(origin + ": expected 'key = value'");
    }
    const std::string key = trim(text.substr(0, eq));
    const std::string value = trim(text.substr(eq + 1));
    if (!known_key(key)) fail_config(origin + ": unknown key '" + key + "'");
    if (value.empty()) fail_config(origin + ": empty value for '" + key + "'");
    config[key] = {value, origin};
  }
}

std::optional<ConfigValue> get(const ConfigMap& config,
                               const std::string& key) {
  const auto it = config.find(key);
  if (it == config.end()) return std::nullopt;
  return it->second;
}

// ----- token parsing ------------------------------------------------------

double parse_number(const std::string& token, const std::string& origin) {
  std::string body = token;
  double scale = 1.0;
  if (body.size() >= 2 && body.substr(body.size() - 2) == "pi") {
    scale = kPi;
    body = body.substr(0, body.size() - 2);
    if (body.empty() || body == "+") body = "1";
    if (body == "-") body = "-1";
  }
  try {
    size_t used = 0;
    const double value = std::stod(body, &used);
    if (used != body.size()) throw std::invalid_argument(body);
    return value * scale;
  } catch (const std::exception&) {
    fail_config(origin + ": '" + token + "' is not a number");
  }
}

struct SettingSpec {
  std::array<double, 3> direction;
  std::string label;
};

// A setting token is a named axis (x, y, z), an xy-plane angle in radians
// (suffix pi multiplies, e.g. 0.25pi), or a colon-separated direction
// nx:ny:nz.
SettingSpec parse_setting(const std::string& token,
                          const std::string& origin) {
  if (token == "x") return {{1, 0, 0}, "x"};
  if (token == "y") return {{0, 1, 0}, "y"};
  if (token == "z") return {{0, 0, 1}, "z"};
  if (token.find(':') != std::string::npos) {
    std::array<double, 3> d{};
    std::stringstream ss(token);
    std::string part;
    int i = 0;
    while (std::getline(ss, part, ':')) {
      if (i >= 3) fail_config(origin + ": '" + token + "' has too many components");
      d[i++] = parse_number(trim(part), origin);
    }
    if (i != 3) fail_config(origin + ": '" + token + "' needs three components");
    return {d, token};
  }
  const double angle = parse_number(token, origin);
  return {{std::cos(angle), std::sin(angle), 0.0}, token};
}

std::vector<std::string> split_tokens(const std::string& value) {
  std::vector<std::string> tokens;
  std::stringstream ss(value);
  std::string token;
  while (ss >> token) tokens.push_back(token);
  return tokens;
}

// ----- object construction through the C API ------------------------------

struct StateHandle {
  svkit_state* ptr = nullptr;
  ~StateHandle() { svkit_state_free(ptr); }
};

struct ScenarioHandle {
  svkit_scenario* ptr = nullptr;
  ~ScenarioHandle() { svkit_scenario_free(ptr); }
};

void make_state(const ConfigMap& config, StateHandle& state) {
  const auto spec = get(config, "state");
  if (!spec || spec->text == "ghz") {
    check_status(svkit_state_create_ghz(&state.ptr), "state");
    return;
  }
  const std::vector<std::string> tokens = split_tokens(spec->text);
  if (tokens.size() != 16) {
    fail_config(spec->origin +
                ": state needs 'ghz' or 16 amplitude components "
                "(re im per basis ket), got " +
                std::to_string(tokens.size()));
  }
  double amps[16];
  for (size_t i = 0; i < 16; ++i) {
    amps[i] = parse_number(tokens[i], spec->origin);
  }
  check_status(svkit_state_create(amps, &state.ptr), "state");
}

void make_scenario(const ConfigMap& config, ScenarioHandle& scenario) {
  const auto preset = get(config, "scenario");
  if (preset) {
    if (preset->text != "optimal") {
      fail_config(preset->origin + ": unknown scenario preset '" +
                  preset->text + "' (only 'optimal')");
    }
    check_status(svkit_scenario_create_optimal(&scenario.ptr), "scenario");
    return;
  }
  double directions[18];
  std::array<std::string, 6> labels;
  const char* label_ptrs[6];
  for (int i = 0; i < 6; ++i) {
    const auto value = get(config, kSettingKeys[i]);
    if (!value) {
      fail_config("missing setting '" + kSettingKeys[i] +
                  "' (give all six settings or scenario = optimal)");
    }
    const SettingSpec s = parse_setting(value->text, value->origin);
    for (int k = 0; k < 3; ++k) directions[3 * i + k] = s.direction[k];
    labels[i] = s.label;
    label_ptrs[i] = labels[i].c_str();
  }
  check_status(svkit_scenario_create_vectors(directions, label_ptrs,
                                             &scenario.ptr),
               "scenario");
}

struct MenuSpec {
  std::vector<double> directions;
  std::vector<std::string> labels;
  std::vector<const char*> label_ptrs;

  size_t size() const { return labels.size(); }
  void finalize() {
    label_ptrs.clear();
    for (const std::string& l : labels) label_ptrs.push_back(l.c_str());
  }
};

MenuSpec make_menu(const ConfigMap& config) {
  const auto value = get(config, "menu");
  if (!value) fail_config("missing 'menu' (space-separated settings)");
  MenuSpec menu;
  for (const std::string& token : split_tokens(value->text)) {
    const SettingSpec s = parse_setting(token, value->origin);
    menu.directions.insert(menu.directions.end(), s.direction.begin(),
                           s.direction.end());
    menu.labels.push_back(s.label);
  }
  if (menu.labels.empty()) fail_config(value->origin + ": menu is empty");
  menu.finalize();
  return menu;
}

std::uint64_t parse_u64(const ConfigValue& value, const std::string& key) {
  try {
    size_t used = 0;
    const unsigned long long v = std::stoull(value.text, &used);
    if (used != value.text.size()) throw std::invalid_argument(value.text);
    return v;
  } catch (const std::exception&) {
    fail_config(value.origin + ": '" + value.text + "' is not a valid " +
                key);
  }
}

// ----- output -------------------------------------------------------------

struct Printer {
  bool machine = false;

  void kv(const std::string& key, const std::string& value) const {
    if (machine) {
      std::cout << key << " = " << value << "\n";
    } else {
      std::cout << key << ": " << value << "\n";
    }
  }
  void kv(const std::string& key, double value) const { kv(key, num(value)); }
  void note(const std::string& text) const {
    if (!machine) std::cout << text << "\n";
  }
};

std::string triple_name(int t) {
  std::string name = "E_";
  name += (t & 4) ? "Ap" : "A";
  name += (t & 2) ? "Bp" : "B";
  name += (t & 1) ? "Cp" : "C";
  return name;
}

const std::array<std::string, 6> kSettingNames = {"a", "a_prime", "b",
                                                  "b_prime", "c", "c_prime"};

void print_scenario(const Printer& out, const svkit_scenario* scenario,
                    const std::string& prefix) {
  double directions[18];
  check_status(svkit_scenario_directions(scenario, directions), "scenario");
  for (int i = 0; i < 6; ++i) {
    char label[128];
    check_status(
        svkit_scenario_label(scenario, i / 2, i % 2, label, sizeof(label)),
        "scenario");
    const double nx = directions[3 * i], ny = directions[3 * i + 1],
                 nz = directions[3 * i + 2];
    const std::string key = prefix + kSettingNames[i];
    out.kv(key + "_label", label);
    out.kv(key + "_nx", nx);
    out.kv(key + "_ny", ny);
    out.kv(key + "_nz", nz);
    if (std::abs(nz) < 1e-12) {
      out.kv(key + "_angle", std::atan2(ny, nx));
    }
  }
}

// ----- subcommands --------------------------------------------------------

int cmd_evaluate(const ConfigMap& config, const Printer& out) {
  StateHandle state;
  make_state(config, state);
  ScenarioHandle scenario;
  make_scenario(config, scenario);

  double table[8];
  double sv_signed = 0, sv_abs = 0, s_form = 0;
  check_status(svkit_evaluate(state.ptr, scenario.ptr, table, &sv_signed,
                              &sv_abs, &s_form),
               "evaluate");

  for (int t = 0; t < 8; ++t) out.kv(triple_name(t), table[t]);
  out.kv("sv_signed", sv_signed);
  out.kv("sv_abs", sv_abs);
  out.kv("s_form", s_form);
  out.kv("classical_bound", 4.0);
  out.kv("quantum_bound", num(4.0 * std::sqrt(2.0)));
  const bool identity = std::abs(8.0 - 2.0 * s_form - sv_signed) <= 1e-12;
  out.kv("identity_check",
         std::string("8 - 2S == Sv_signed: ") + (identity ? "pass" : "fail"));
  return identity ? kExitOk : kExitSolver;
}

int cmd_optimize(const ConfigMap& config, const Printer& out) {
  StateHandle state;
  make_state(config, state);

  svkit_search_kind kind = SVKIT_SEARCH_PLANAR;
  if (const auto space = get(config, "space")) {
    if (space->text == "planar") {
      kind = SVKIT_SEARCH_PLANAR;
    } else if (space->text == "sphere") {
      kind = SVKIT_SEARCH_FULL_SPHERE;
    } else if (space->text == "menu") {
      kind = SVKIT_SEARCH_FIXED_MENU;
    } else {
      fail_config(space->origin + ": space must be planar, sphere or menu");
    }
  }

  MenuSpec menu;
  if (kind == SVKIT_SEARCH_FIXED_MENU) menu = make_menu(config);

  int seeds = 0;
  int max_iterations = 0;
  double step_tolerance = 0;
  std::uint64_t seed = 0;
  if (const auto v = get(config, "seeds")) {
    seeds = static_cast<int>(parse_u64(*v, "seeds"));
  }
  if (const auto v = get(config, "max_iterations")) {
    max_iterations = static_cast<int>(parse_u64(*v, "max_iterations"));
  }
  if (const auto v = get(config, "step_tolerance")) {
    step_tolerance = parse_number(v->text, v->origin);
  }
  if (const auto v = get(config, "seed")) seed = parse_u64(*v, "seed");

  ScenarioHandle best;
  double best_abs = 0, best_signed = 0;
  int converged = 0;
  check_status(
      svkit_optimize(state.ptr, kind,
                     menu.size() ? menu.directions.data() : nullptr,
                     menu.size() ? menu.label_ptrs.data() : nullptr,
                     menu.size(), seeds, max_iterations, step_tolerance, seed,
                     &best.ptr, &best_abs, &best_signed, &converged),
      "optimize");

  out.kv("best_abs", best_abs);
  out.kv("best_signed", best_signed);
  out.kv("converged", converged ? "true" : "false");
  if (!converged) out.note("warning: search stopped at the iteration cap");
  print_scenario(out, best.ptr, "");
  return kExitOk;
}

int cmd_audit(const ConfigMap& config, const Printer& out) {
  StateHandle state;
  make_state(config, state);
  MenuSpec menu = make_menu(config);

  ScenarioHandle best;
  double best_abs = 0;
  int can_certify = 0;
  std::uint64_t scenarios = 0;
  check_status(
      svkit_audit_menu(state.ptr, menu.directions.data(),
                       menu.label_ptrs.data(), menu.size(), &best.ptr,
                       &best_abs, &can_certify, &scenarios),
      "audit");

  out.kv("menu_size", num(double(menu.size())));
  out.kv("scenarios", std::to_string(scenarios));
  out.kv("best_abs", best_abs);
  print_scenario(out, best.ptr, "best_");
  if (out.machine) {
    out.kv("verdict", can_certify ? "can-certify" : "cannot-certify");
  } else {
    std::cout << "verdict: " << (can_certify ? "can-certify" : "cannot-certify")
              << "\n";
  }
  return kExitOk;
}

int cmd_polytope(const ConfigMap& config, const Printer& out,
                 bool uniform_mixture, int vertex_index) {
  size_t count = 0;
  check_status(svkit_polytope_vertex_count(&count), "polytope");
  std::vector<double> vertices(count * 8);
  check_status(svkit_polytope_vertices(vertices.data(), vertices.size()),
               "polytope");

  double target[8] = {0, 0, 0, 0, 0, 0, 0, 0};
  if (uniform_mixture && vertex_index >= 0) {
    fail_config("choose one of --uniform-mixture and --vertex");
  }
  if (uniform_mixture) {
    for (size_t i = 0; i < count; ++i) {
      for (int k = 0; k < 8; ++k) target[k] += vertices[8 * i + k] / count;
    }
  } else if (vertex_index >= 0) {
    if (static_cast<size_t>(vertex_index) >= count) {
      fail_config("--vertex index out of range (have " +
                  std::to_string(count) + " vertices)");
    }
    for (int k = 0; k < 8; ++k) target[k] = vertices[8 * vertex_index + k];
  } else {
    StateHandle state;
    make_state(config, state);
    ScenarioHandle scenario;
    make_scenario(config, scenario);
    check_status(svkit_correlator_table(state.ptr, scenario.ptr, target),
                 "polytope");
  }

  double tolerance = 1e-9;
  if (const auto v = get(config, "tolerance")) {
    tolerance = parse_number(v->text, v->origin);
  }

  int inside = 0;
  double margin = 0;
  std::vector<double> weights(count, 0.0);
  check_status(
      svkit_polytope_membership(target, tolerance, &inside, &margin,
                                weights.data(), weights.size()),
      "polytope");

  out.kv("vertex_count", std::to_string(count));
  for (int t = 0; t < 8; ++t) out.kv(triple_name(t), target[t]);
  out.kv("membership", inside ? "inside" : "outside");
  out.kv("margin", margin + 0.0);  // normalizes -0
  if (inside) {
    for (size_t i = 0; i < count; ++i) {
      if (weights[i] > 1e-12) {
        out.kv("weight_" + std::to_string(i), weights[i]);
      }
    }
  }
  return kExitOk;
}

int cmd_sample(const ConfigMap& config, const Printer& out) {
  StateHandle state;
  make_state(config, state);
  ScenarioHandle scenario;
  make_scenario(config, scenario);

  std::uint64_t shots = 100000;
  std::uint64_t seed = 0;
  std::string path = "sample.csv";
  if (const auto v = get(config, "shots")) shots = parse_u64(*v, "shots");
  if (const auto v = get(config, "seed")) seed = parse_u64(*v, "seed");
  if (const auto v = get(config, "out")) path = v->text;

  std::uint64_t counts[64];
  check_status(svkit_sample(state.ptr, scenario.ptr, shots, seed, counts),
               "sample");
  check_status(
      svkit_sample_csv(state.ptr, scenario.ptr, shots, seed, path.c_str()),
      "sample");

  double estimates[8], errors[8];
  double sv_estimate = 0, sv_error = 0, sigma = 0;
  check_status(svkit_estimate(counts, shots, estimates, errors, &sv_estimate,
                              &sv_error, &sigma),
               "estimate");

  out.kv("shots_per_triple", std::to_string(shots));
  out.kv("seed", std::to_string(seed));
  for (int t = 0; t < 8; ++t) {
    out.kv(triple_name(t), estimates[t]);
    out.kv("se_" + triple_name(t).substr(2), errors[t]);
  }
  out.kv("sv_estimate", sv_estimate);
  out.kv("sv_standard_error", sv_error);
  out.kv("sigma_above_4", sigma);
  out.kv("csv", path);
  return kExitOk;
}

int cmd_network(const Printer& out) {
  int min_satisfied = 0, max_satisfied = 0;
  std::uint64_t histogram[9];
  check_status(
      svkit_network_enumerate(&min_satisfied, &max_satisfied, histogram),
      "network");
  out.kv("min_satisfied", std::to_string(min_satisfied));
  out.kv("max_satisfied", std::to_string(max_satisfied));
  std::uint64_t total = 0;
  for (int k = 0; k <= 8; ++k) {
    out.kv("hist_" + std::to_string(k), std::to_string(histogram[k]));
    total += histogram[k];
  }
  out.kv("assignments", std::to_string(total));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Genuine three-particle nonlocality toolkit"};
  app.require_subcommand(1);

  struct CommonFlags {
    std::string config_path;
    bool machine = false;
    std::map<std::string, std::string> overrides;
  };

  // Every subcommand takes --config, --machine and key overrides.
  auto add_common = [](CLI::App* sub, CommonFlags& flags) {
    sub->add_option("--config", flags.config_path,
                    "Key-value config file (key = value per line)");
    sub->add_flag("--machine", flags.machine,
                  "Machine-readable key = value output");
    const auto add_override = [sub, &flags](const std::string& name,
                                            const std::string& key,
                                            const std::string& help) {
      sub->add_option_function<std::string>(
          name,
          [&flags, key](const std::string& v) { flags.overrides[key] = v; },
          help);
    };
    add_override("--state", "state", "ghz or 16 amplitude components");
    add_override("--scenario", "scenario", "scenario preset (optimal)");
    add_override("--a", "a", "setting for A");
    add_override("--a-prime", "a_prime", "setting for A'");
    add_override("--b", "b", "setting for B");
    add_override("--b-prime", "b_prime", "setting for B'");
    add_override("--c", "c", "setting for C");
    add_override("--c-prime", "c_prime", "setting for C'");
    add_override("--menu", "menu", "space-separated menu settings");
    add_override("--shots", "shots", "shots per setting triple");
    add_override("--seed", "seed", "random seed (u64)");
    add_override("--trials", "trials", "number of scan trials");
    add_override("--tolerance", "tolerance", "membership tolerance");
    add_override("--space", "space", "search space: planar, sphere, menu");
    add_override("--seeds", "seeds", "random restarts");
    add_override("--max-iterations", "max_iterations",
                 "coordinate sweeps per restart");
    add_override("--step-tolerance", "step_tolerance",
                 "angle convergence tolerance (radians)");
    add_override("--out", "out", "CSV output path");
  };

  std::array<CommonFlags, 6> flags;
  CLI::App* evaluate =
      app.add_subcommand("evaluate", "Correlators and the Svetlichny value");
  CLI::App* optimize =
      app.add_subcommand("optimize", "Search settings maximizing |Sv|");
  CLI::App* audit = app.add_subcommand(
      "audit", "Can a fixed measurement menu certify genuine three-party "
               "nonlocality?");
  CLI::App* polytope = app.add_subcommand(
      "polytope", "Hybrid-model polytope membership of a correlator table");
  CLI::App* sample = app.add_subcommand(
      "sample", "Finite-shot Monte Carlo run with CSV output");
  CLI::App* network = app.add_subcommand(
      "network", "Exhaust the 64 deterministic network assignments");

  add_common(evaluate, flags[0]);
  add_common(optimize, flags[1]);
  add_common(audit, flags[2]);
  add_common(polytope, flags[3]);
  add_common(sample, flags[4]);
  add_common(network, flags[5]);

  bool uniform_mixture = false;
  int vertex_index = -1;
  polytope->add_flag("--uniform-mixture", uniform_mixture,
                     "Test the uniform mixture of all vertices");
  polytope->add_option("--vertex", vertex_index,
                       "Test a single vertex by index");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  const std::array<CLI::App*, 6> subs = {evaluate, optimize, audit,
                                         polytope, sample,   network};
  int index = 0;
  for (int i = 0; i < 6; ++i) {
    if (subs[i]->parsed()) index = i;
  }

  try {
    ConfigMap config;
    if (!flags[index].config_path.empty()) {
      load_config_file(flags[index].config_path, config);
    }
    for (const auto& [key, value] : flags[index].overrides) {
      config[key] = {value, "command line"};
    }
    const Printer out{flags[index].machine};
    switch (index) {
      case 0: return cmd_evaluate(config, out);
      case 1: return cmd_optimize(config, out);
      case 2: return cmd_audit(config, out);
      case 3: return cmd_polytope(config, out, uniform_mixture, vertex_index);
      case 4: return cmd_sample(config, out);
      case 5: return cmd_network(out);
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitOk;
}
