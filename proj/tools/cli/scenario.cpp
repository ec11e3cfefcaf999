#include "cli/scenario.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace twofilm::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double to_double(std::string_view key, std::string_view v, int line) {
  double out = 0.0;
  const auto [end, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || end != v.data() + v.size() || !std::isfinite(out)) {
    throw ConfigError("line " + std::to_string(line) + ": " + std::string(key) +
                          " expects a number, got '" + std::string(v) + "'",
                      line);
  }
  return out;
}

int to_int(std::string_view key, std::string_view v, int line) {
  int out = 0;
  const auto [end, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || end != v.data() + v.size()) {
    throw ConfigError("line " + std::to_string(line) + ": " + std::string(key) +
                          " expects an integer, got '" + std::string(v) + "'",
                      line);
  }
  return out;
}

struct Entry {
  std::string value;
  int line;
};

const char* const kStateKeys[8] = {"f_left",  "b_left",  "g_left",  "q_left",
                                   "f_right", "b_right", "g_right", "q_right"};
const char* const kBumpKeys[8] = {"bump_f0",    "bump_b0",    "bump_g0",     "bump_q0",
                                  "bump_b_amp", "bump_q_amp", "bump_center", "bump_width"};
const char* const kOtherKeys[] = {"scenario", "cells", "cfl",   "scheme",
                                  "t_end",    "out",   "x_min", "x_max", "convergence_cells"};

bool known_key(const std::string& k) {
  for (const char* s : kStateKeys)
    if (k == s) return true;
  for (const char* s : kBumpKeys)
    if (k == s) return true;
  for (const char* s : kOtherKeys)
    if (k == s) return true;
  return false;
}

}  // namespace

std::string_view to_string(ScenarioKind k) noexcept {
  switch (k) {
    case ScenarioKind::Riemann: return "riemann";
    case ScenarioKind::Gaussian: return "gaussian";
    case ScenarioKind::Custom: return "custom";
  }
  return "?";
}

State Bump::operator()(double x) const {
  const double z = (x - center) / width;
  const double e = std::exp(-z * z);
  return {f0, b0 + b_amp * e, g0, q0 + q_amp * e};
}

InitialCondition Scenario::initial_condition() const {
  if (kind == ScenarioKind::Riemann) {
    return [l = left, r = right](double x) { return x < 0.0 ? l : r; };
  }
  return bump;
}

Scheme parse_scheme(std::string_view name) {
  if (name == "godunov") return Scheme::Godunov;
  if (name == "lxf") return Scheme::LaxFriedrichs;
  throw ConfigError("unknown scheme '" + std::string(name) + "' (expected godunov or lxf)", 0);
}

Scenario parse_config(std::string_view text) {
  std::map<std::string, Entry> entries;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view s = raw;
    if (const auto hash = s.find('#'); hash != std::string_view::npos) s = s.substr(0, hash);
    s = trim(s);
    if (s.empty()) continue;
    const auto eq = s.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line) + ": expected key = value", line);
    }
    const std::string key{trim(s.substr(0, eq))};
    const std::string value{trim(s.substr(eq + 1))};
    if (key.empty() || value.empty()) {
      throw ConfigError("line " + std::to_string(line) + ": expected key = value", line);
    }
    if (!known_key(key)) {
      throw ConfigError("line " + std::to_string(line) + ": unknown key '" + key + "'", line);
    }
    if (auto [it, fresh] = entries.emplace(key, Entry{value, line}); !fresh) {
      throw ConfigError("line " + std::to_string(line) + ": duplicate key '" + key +
                            "' (first set on line " + std::to_string(it->second.line) + ")",
                        line);
    }
  }

  Scenario sc;
  auto has = [&](const char* k) { return entries.count(k) != 0; };
  auto num = [&](const char* k) { return to_double(k, entries.at(k).value, entries.at(k).line); };

  if (has("scenario")) {
    const Entry& e = entries.at("scenario");
    if (e.value == "riemann") sc.kind = ScenarioKind::Riemann;
    else if (e.value == "gaussian") sc.kind = ScenarioKind::Gaussian;
    else if (e.value == "custom") sc.kind = ScenarioKind::Custom;
    else
      throw ConfigError("line " + std::to_string(e.line) + ": unknown scenario '" + e.value +
                            "' (expected riemann, gaussian or custom)",
                        e.line);
  }

  auto require_all = [&](const char* const* keys, int n) {
    std::string missing;
    for (int i = 0; i < n; ++i) {
      if (!has(keys[i])) missing += (missing.empty() ? "" : ", ") + std::string(keys[i]);
    }
    if (!missing.empty()) {
      throw ConfigError("scenario=" + std::string(to_string(sc.kind)) +
                            " is missing required keys: " + missing,
                        0);
    }
  };
  auto reject_all = [&](const char* const* keys, int n) {
    for (int i = 0; i < n; ++i) {
      if (has(keys[i])) {
        const int l = entries.at(keys[i]).line;
        throw ConfigError("line " + std::to_string(l) + ": " + keys[i] +
                              " is not used by scenario=" + std::string(to_string(sc.kind)),
                          l);
      }
    }
  };

  if (sc.kind == ScenarioKind::Riemann) {
    reject_all(kBumpKeys, 8);
    require_all(kStateKeys, 8);
    Vec4 l{}, r{};
    for (int i = 0; i < 4; ++i) {
      l[i] = num(kStateKeys[i]);
      r[i] = num(kStateKeys[i + 4]);
    }
    sc.left = State::from_array(l);
    sc.right = State::from_array(r);
    for (int i = 0; i < 8; ++i) {
      const double v = i < 4 ? l[i] : r[i - 4];
      if (!(v > 0.0)) {
        const int ln = entries.at(kStateKeys[i]).line;
        throw ConfigError("line " + std::to_string(ln) + ": " + kStateKeys[i] +
                              " must be positive",
                          ln);
      }
    }
    for (const auto& [s, side] : {std::pair{sc.left, "left"}, std::pair{sc.right, "right"}}) {
      if (!is_admissible(s, Admissibility::Strict)) {
        sc.warnings.push_back(std::string(side) + " state " + to_string(s) +
                              " is not strictly hyperbolic (fb >= gq)");
      }
    }
  } else {
    reject_all(kStateKeys, 8);
    if (sc.kind == ScenarioKind::Gaussian) {
      reject_all(kBumpKeys, 8);
    } else {
      require_all(kBumpKeys, 8);
      Bump& b = sc.bump;
      double* fields[8] = {&b.f0, &b.b0, &b.g0, &b.q0, &b.b_amp, &b.q_amp, &b.center, &b.width};
      for (int i = 0; i < 8; ++i) *fields[i] = num(kBumpKeys[i]);
      const int ln = entries.at("bump_width").line;
      if (!(b.width > 0.0)) {
        throw ConfigError("line " + std::to_string(ln) + ": bump_width must be positive", ln);
      }
    }
  }

  if (has("cells")) {
    const Entry& e = entries.at("cells");
    sc.cells = to_int("cells", e.value, e.line);
    if (sc.cells < 2) {
      throw ConfigError("line " + std::to_string(e.line) + ": cells must be at least 2", e.line);
    }
  }
  if (has("cfl")) {
    sc.scheme.cfl = num("cfl");
    if (!(sc.scheme.cfl > 0.0 && sc.scheme.cfl <= 1.0)) {
      const int l = entries.at("cfl").line;
      throw ConfigError("line " + std::to_string(l) + ": cfl must lie in (0, 1]", l);
    }
  }
  if (has("t_end")) {
    sc.scheme.t_end = num("t_end");
    if (!(sc.scheme.t_end >= 0.0)) {
      const int l = entries.at("t_end").line;
      throw ConfigError("line " + std::to_string(l) + ": t_end must be nonnegative", l);
    }
  }
  if (has("scheme")) {
    const Entry& e = entries.at("scheme");
    try {
      sc.scheme.scheme = parse_scheme(e.value);
    } catch (const ConfigError& err) {
      throw ConfigError("line " + std::to_string(e.line) + ": " + err.what(), e.line);
    }
  }
  if (has("x_min")) sc.x_min = num("x_min");
  if (has("x_max")) sc.x_max = num("x_max");
  if (!(sc.x_max > sc.x_min)) {
    const int l = has("x_max") ? entries.at("x_max").line : entries.at("x_min").line;
    throw ConfigError("line " + std::to_string(l) + ": x_max must exceed x_min", l);
  }
  if (has("out")) sc.out = entries.at("out").value;
  if (has("convergence_cells")) {
    const Entry& e = entries.at("convergence_cells");
    sc.convergence_cells.clear();
    std::string_view rest = e.value;
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      const std::string_view item = trim(rest.substr(0, comma));
      const int n = to_int("convergence_cells", item, e.line);
      if (n < 2) {
        throw ConfigError("line " + std::to_string(e.line) + ": convergence_cells entries must be at least 2",
                          e.line);
      }
      sc.convergence_cells.push_back(n);
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
  }
  return sc;
}

Scenario load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'", 0);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace twofilm::cli
