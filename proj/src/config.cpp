#include "symns/config.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "symns/errors.hpp"
#include "symns/grid.hpp"

namespace symns {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Drops a trailing comment that is not inside a quoted string.
std::string_view strip_comment(std::string_view s) {
  bool quoted = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '\\' && quoted) {
      ++i;
    } else if (s[i] == '"') {
      quoted = !quoted;
    } else if (s[i] == '#' && !quoted) {
      return s.substr(0, i);
    }
  }
  return s;
}

bool valid_key(std::string_view k) {
  if (k.empty() || k.front() == '.' || k.back() == '.') return false;
  for (char c : k) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.')) return false;
  }
  return k.find("..") == std::string_view::npos;
}

double parse_number(std::string_view v, const std::string& key, int line) {
  v = trim(v);
  if (v == "inf" || v == "+inf") return kInfinity;
  if (!v.empty() && v.front() == '+') v.remove_prefix(1);
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    throw ConfigError(key + ": expected a number, got '" + std::string(v) + "'", line);
  }
  return out;
}

long parse_integer(std::string_view v, const std::string& key, int line) {
  const double d = parse_number(v, key, line);
  if (!(std::abs(d) < 9.0e15) || d != std::floor(d)) {
    throw ConfigError(key + ": expected an integer, got '" + std::string(trim(v)) + "'", line);
  }
  return static_cast<long>(d);
}

bool parse_bool(std::string_view v, const std::string& key, int line) {
  v = trim(v);
  if (v == "true") return true;
  if (v == "false") return false;
  throw ConfigError(key + ": expected true or false, got '" + std::string(v) + "'", line);
}

std::string parse_string(std::string_view v, const std::string& key, int line) {
  v = trim(v);
  if (v.size() < 2 || v.front() != '"' || v.back() != '"') {
    throw ConfigError(key + ": expected a double-quoted string", line);
  }
  std::string out;
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    if (v[i] == '\\' && i + 2 < v.size()) {
      const char c = v[++i];
      out += c == 'n' ? '\n' : c == 't' ? '\t' : c;
    } else if (v[i] == '"') {
      throw ConfigError(key + ": unescaped quote inside string", line);
    } else {
      out += v[i];
    }
  }
  return out;
}

using Setter = std::function<void(SimConfig&, std::string_view, const std::string&, int)>;


template <class F>
Setter number_setter(F field) {
  return [field](SimConfig& c, std::string_view v, const std::string& k, int line) {
    field(c) = parse_number(v, k, line);
  };
}

template <class F>
Setter integer_setter(F field) {
  return [field](SimConfig& c, std::string_view v, const std::string& k, int line) {
    field(c) = static_cast<std::remove_reference_t<decltype(field(c))>>(parse_integer(v, k, line));
  };
}

template <class F>
Setter string_setter(F field) {
  return [field](SimConfig& c, std::string_view v, const std::string& k, int line) {
    field(c) = parse_string(v, k, line);
  };
}

#define SYMNS_FIELD(expr) [](SimConfig& c) -> auto& { return c.expr; }

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table = {
      {"grid.a", number_setter(SYMNS_FIELD(grid.a))},
      {"grid.b", number_setter(SYMNS_FIELD(grid.b))},
      {"grid.n", integer_setter(SYMNS_FIELD(grid.n))},
      {"grid.m", integer_setter(SYMNS_FIELD(grid.m))},
      {"model.family",
       [](SimConfig& c, std::string_view v, const std::string& k, int line) {
         const std::string s = parse_string(v, k, line);
         if (s == "linear") {
           c.model.family = EnergyFamily::linear;
         } else if (s == "power") {
           c.model.family = EnergyFamily::power;
         } else {
           throw ConfigError(k + ": expected \"linear\" or \"power\"", line);
         }
       }},
      {"model.cold",
       [](SimConfig& c, std::string_view v, const std::string& k, int line) {
         const std::string s = parse_string(v, k, line);
         if (s == "zero") {
           c.model.cold = ColdPressure::zero;
         } else if (s == "barotropic") {
           c.model.cold = ColdPressure::barotropic;
         } else {
           throw ConfigError(k + ": expected \"zero\" or \"barotropic\"", line);
         }
       }},
      {"model.mu", number_setter(SYMNS_FIELD(model.mu))},
      {"model.lam", number_setter(SYMNS_FIELD(model.lam))},
      {"model.r", number_setter(SYMNS_FIELD(model.r))},
      {"model.q", number_setter(SYMNS_FIELD(model.q))},
      {"model.kappa0", number_setter(SYMNS_FIELD(model.kappa0))},
      {"model.A", number_setter(SYMNS_FIELD(model.A))},
      {"model.gamma", number_setter(SYMNS_FIELD(model.gamma))},
      {"init.preset", string_setter(SYMNS_FIELD(init.preset))},
      {"init.file", string_setter(SYMNS_FIELD(init.file))},
      {"init.eps", number_setter(SYMNS_FIELD(init.eps))},
      {"init.params.rho_bar", number_setter(SYMNS_FIELD(init.params.rho_bar))},
      {"init.params.theta_bar", number_setter(SYMNS_FIELD(init.params.theta_bar))},
      {"init.params.amplitude", number_setter(SYMNS_FIELD(init.params.amplitude))},
      {"init.params.swirl", number_setter(SYMNS_FIELD(init.params.swirl))},
      {"init.params.floor", number_setter(SYMNS_FIELD(init.params.floor))},
      {"init.params.velocity", number_setter(SYMNS_FIELD(init.params.velocity))},
      {"controls.cfl", number_setter(SYMNS_FIELD(controls.cfl))},
      {"controls.picard_max", integer_setter(SYMNS_FIELD(controls.picard_max))},
      {"controls.picard_tol", number_setter(SYMNS_FIELD(controls.picard_tol))},
      {"controls.rho_vac_tol", number_setter(SYMNS_FIELD(controls.rho_vac_tol))},
      {"controls.dt_max", number_setter(SYMNS_FIELD(controls.dt_max))},
      {"controls.dt_min", number_setter(SYMNS_FIELD(controls.dt_min))},
      {"controls.t_end", number_setter(SYMNS_FIELD(t_end))},
      {"controls.max_steps", integer_setter(SYMNS_FIELD(max_steps))},
      {"output.snapshot_every", integer_setter(SYMNS_FIELD(output.snapshot_every))},
      {"output.snapshot_interval", number_setter(SYMNS_FIELD(output.snapshot_interval))},
      {"output.out_dir", string_setter(SYMNS_FIELD(output.out_dir))},
      {"output.diag_alpha", number_setter(SYMNS_FIELD(output.diag_alpha))},
      {"output.write",
       [](SimConfig& c, std::string_view v, const std::string& k, int line) {
         c.output.write = parse_bool(v, k, line);
       }},
  };
  return table;
}

#undef SYMNS_FIELD

}  // namespace

void set_config_value(SimConfig& cfg, const std::string& key, std::string_view value, int line) {
  const auto& table = setters();
  const auto it = table.find(key);
  if (it == table.end()) throw ConfigError("unknown key '" + key + "'", line);
  it->second(cfg, value, key, line);
}

void SimConfig::validate() {
  auto fail = [](const std::string& key, const std::string& what) {
    throw ConfigError(key + ": " + what);
  };
  try {
    Grid(grid.a, grid.b, grid.n, grid.m);
  } catch (const DomainError& e) {
    fail("grid", e.what());
  }
  try {
    model.validate();
  } catch (const DomainError& e) {
    fail("model", e.what());
  }
  try {
    controls.validate();
  } catch (const DomainError& e) {
    fail("controls", e.what());
  }
  if (!(t_end >= 0.0) || !std::isfinite(t_end)) fail("controls.t_end", "must be finite and >= 0");
  if (max_steps < 1) fail("controls.max_steps", "must be >= 1");
  if (!(init.eps >= 0.0) || !std::isfinite(init.eps)) fail("init.eps", "must be >= 0");
  if (init.file.empty() && init.preset.empty()) fail("init", "either preset or file is required");
  if (output.snapshot_every < 0) fail("output.snapshot_every", "must be >= 0");
  if (!(output.snapshot_interval >= 0.0)) fail("output.snapshot_interval", "must be >= 0");
  if (!(output.diag_alpha > 0.0 && output.diag_alpha < 1.0)) {
    fail("output.diag_alpha", "must lie in (0, 1)");
  }
  admissibility = check_admissible(model, grid.m);
}

SimConfig parse_config(std::string_view text) {
  SimConfig cfg;
  std::map<std::string, int> seen;
  std::string section;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string_view s = trim(strip_comment(raw));
    if (s.empty()) continue;
    if (s.front() == '[') {
      if (s.back() != ']') throw ConfigError("malformed section header", line);
      const std::string_view name = trim(s.substr(1, s.size() - 2));
      if (!valid_key(name)) throw ConfigError("invalid section name '" + std::string(name) + "'", line);
      section = std::string(name);
      continue;
    }
    const auto eq = s.find('=');
    if (eq == std::string_view::npos) throw ConfigError("expected 'key = value'", line);
    const std::string_view key = trim(s.substr(0, eq));
    const std::string_view value = trim(s.substr(eq + 1));
    if (!valid_key(key)) throw ConfigError("invalid key '" + std::string(key) + "'", line);
    if (value.empty()) throw ConfigError("missing value for '" + std::string(key) + "'", line);
    const std::string full = section.empty() ? std::string(key) : section + "." + std::string(key);
    if (const auto prev = seen.find(full); prev != seen.end()) {
      throw ConfigError("duplicate key '" + full + "' (first set on line " +
                            std::to_string(prev->second) + ")",
                        line);
    }
    seen.emplace(full, line);
    set_config_value(cfg, full, value, line);
  }
  cfg.validate();
  return cfg;
}

SimConfig load_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open config file '" + path + "'");
  std::stringstream buf;
  buf << f.rdbuf();
  SimConfig cfg = parse_config(buf.str());
  cfg.base_dir = std::filesystem::path(path).parent_path().string();
  return cfg;
}

void apply_override(SimConfig& cfg, std::string_view assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos) {
    throw ConfigError("override '" + std::string(assignment) + "' is not key=value");
  }
  const std::string key(trim(assignment.substr(0, eq)));
  std::string value(trim(assignment.substr(eq + 1)));
  // Bare words are accepted for string keys on the command line.
  if (!value.empty() && value.front() != '"' && (key == "init.preset" || key == "init.file" ||
                                                 key == "output.out_dir" || key == "model.family" ||
                                                 key == "model.cold")) {
    value = "\"" + value + "\"";
  }
  set_config_value(cfg, key, value);
  cfg.validate();
}

std::string effective_out_dir(const SimConfig& cfg) {
  if (const char* env = std::getenv("SYMNS_OUT_DIR"); env != nullptr && *env != '\0') return env;
  return cfg.output.out_dir;
}

}  // namespace symns
