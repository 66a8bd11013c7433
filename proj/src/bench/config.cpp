/*
 * (C) Copyright 2026 GO-SVM authors.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "bench/config.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "core/dataset.hpp"
#include "core/error.hpp"

namespace gosvm {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(const std::string& origin, int line,
                       const std::string& what) {
  std::ostringstream oss;
  oss << origin << ":" << line << ": " << what;
  throw Error(ErrorCode::Parse, oss.str());
}

struct Entry {
  std::string value;
  int line = 0;
  bool used = false;
};
using Section = std::map<std::string, Entry>;

long parse_int(const std::string& v, const std::string& origin, int line) {
  errno = 0;
  char* end = nullptr;
  const long r = std::strtol(v.c_str(), &end, 10);
  if (errno != 0 || end == v.c_str() || *end != '\0')
    fail(origin, line, "expected integer, got '" + v + "'");
  return r;
}

std::uint64_t parse_u64(const std::string& v, const std::string& origin,
                        int line) {
  errno = 0;
  char* end = nullptr;
  const unsigned long long r = std::strtoull(v.c_str(), &end, 10);
  if (errno != 0 || end == v.c_str() || *end != '\0' || v[0] == '-')
    fail(origin, line, "expected unsigned integer, got '" + v + "'");
  return r;
}

double parse_double(const std::string& v, const std::string& origin,
                    int line) {
  try {
    return parse_real(v, "config value");
  } catch (const Error&) {
    fail(origin, line, "expected real number, got '" + v + "'");
  }
}

bool parse_bool(const std::string& v, const std::string& origin, int line) {
  if (v == "true" || v == "1") return true;
  if (v == "false" || v == "0") return false;
  fail(origin, line, "expected true/false, got '" + v + "'");
}

std::vector<double> parse_list(const std::string& v, const std::string& origin,
                               int line) {
  std::istringstream iss(v);
  std::vector<double> out;
  std::string tok;
  while (iss >> tok) out.push_back(parse_double(tok, origin, line));
  if (out.empty()) fail(origin, line, "expected a list of reals");
  return out;
}

// Fetches a key, marking it consumed so leftovers can be reported.
const Entry* get(Section& s, const std::string& key) {
  auto it = s.find(key);
  if (it == s.end()) return nullptr;
  it->second.used = true;
  return &it->second;
}

void reject_unused(const Section& s, const std::string& origin,
                   const std::string& section_name) {
  for (const auto& [key, e] : s)
    if (!e.used)
      fail(origin, e.line,
           "unknown key '" + key + "' in section [" + section_name + "]");
}

}  // namespace

void validate(const ExperimentConfig& cfg) {
  auto bad = [](const std::string& what) {
    throw Error(ErrorCode::InvalidConfig, what);
  };
  if (cfg.realizations < 1) bad("realizations must be >= 1");
  if (cfg.threads < 0) bad("threads must be >= 0");
  if (cfg.name.empty()) bad("experiment name must be non-empty");
  if (cfg.generator != "mackey-glass" && cfg.generator != "survival" &&
      cfg.generator != "file")
    bad("generator must be mackey-glass, survival, or file");
  if (cfg.generator == "file" && cfg.path.empty())
    bad("file generator needs a path");
  if (cfg.n_train < 1) bad("train size must be >= 1");
  if (cfg.valid_size() < 1) bad("validation size must be >= 1");
  if (cfg.n_extended < 1) bad("extended validation size must be >= 1");
  if (cfg.min_test < 1) bad("min_test must be >= 1");
  if (cfg.n_test < cfg.min_test)
    bad("test size is below the declared minimum");
  if (cfg.axes.nu_b.empty() || cfg.axes.nu_o.empty() || cfg.axes.alpha.empty())
    bad("grid axes must be non-empty");
  for (double v : cfg.axes.nu_b)
    if (!(v > 0.0 && v <= 1.0)) bad("grid nu_b values must lie in (0,1]");
  for (double v : cfg.axes.nu_o)
    if (!(v >= 0.0 && v <= 1.0)) bad("grid nu_o values must lie in [0,1]");
  for (double v : cfg.axes.alpha)
    if (!(v >= 0.0 && v <= 1.0)) bad("grid alpha values must lie in [0,1]");
  if (cfg.kernel == KernelKind::Rbf && cfg.fixed_width == 0.0) {
    if (cfg.quantiles.empty()) bad("rbf kernel needs width quantiles");
    for (double q : cfg.quantiles)
      if (!(q > 0.0 && q <= 1.0)) bad("width quantiles must lie in (0,1]");
  }
  if (cfg.fixed_width != 0.0 && !(cfg.fixed_width > 0.0))
    bad("fixed kernel width must be positive");
  if (cfg.strategies.empty()) bad("at least one strategy is required");
  for (std::size_t i = 0; i < cfg.strategies.size(); ++i)
    for (std::size_t j = i + 1; j < cfg.strategies.size(); ++j)
      if (cfg.strategies[i] == cfg.strategies[j])
        bad("duplicate strategy in strategies list");
}

ExperimentConfig parse_config(std::istream& in, const std::string& origin) {
  std::map<std::string, Section> sections;
  std::map<std::string, int> section_lines;
  std::string current;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') fail(origin, lineno, "unterminated section header");
      current = trim(line.substr(1, line.size() - 2));
      if (current != "experiment" && current != "data" && current != "grid" &&
          current != "methods")
        fail(origin, lineno, "unknown section [" + current + "]");
      sections[current];
      section_lines[current] = lineno;
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail(origin, lineno, "expected key = value");
    if (current.empty()) fail(origin, lineno, "key outside any section");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) fail(origin, lineno, "empty key");
    auto [it, inserted] =
        sections[current].emplace(key, Entry{value, lineno, false});
    if (!inserted) fail(origin, lineno, "duplicate key '" + key + "'");
  }

  ExperimentConfig cfg;

  Section& exp = sections["experiment"];
  if (const Entry* e = get(exp, "name")) cfg.name = e->value;
  if (const Entry* e = get(exp, "seed")) cfg.seed = parse_u64(e->value, origin, e->line);
  if (const Entry* e = get(exp, "realizations"))
    cfg.realizations = static_cast<int>(parse_int(e->value, origin, e->line));
  if (const Entry* e = get(exp, "threads"))
    cfg.threads = static_cast<int>(parse_int(e->value, origin, e->line));
  if (const Entry* e = get(exp, "out")) cfg.out_dir = e->value;
  reject_unused(exp, origin, "experiment");

  Section& data = sections["data"];
  if (const Entry* e = get(data, "generator")) cfg.generator = e->value;
  if (cfg.generator.empty())
    fail(origin, section_lines.count("data") ? section_lines["data"] : 1,
         "missing generator in [data]");
  if (const Entry* e = get(data, "train")) cfg.n_train = parse_int(e->value, origin, e->line);
  if (const Entry* e = get(data, "valid")) cfg.n_valid = parse_int(e->value, origin, e->line);
  if (const Entry* e = get(data, "extended"))
    cfg.n_extended = parse_int(e->value, origin, e->line);
  if (const Entry* e = get(data, "test")) cfg.n_test = parse_int(e->value, origin, e->line);
  if (const Entry* e = get(data, "min_test"))
    cfg.min_test = parse_int(e->value, origin, e->line);
  if (cfg.generator == "mackey-glass") {
    if (const Entry* e = get(data, "tau")) cfg.mg.tau = parse_double(e->value, origin, e->line);
    if (const Entry* e = get(data, "dt")) cfg.mg.dt = parse_double(e->value, origin, e->line);
    if (const Entry* e = get(data, "sample_every"))
      cfg.mg.sample_every = static_cast<int>(parse_int(e->value, origin, e->line));
    if (const Entry* e = get(data, "x0")) cfg.mg.x0 = parse_double(e->value, origin, e->line);
    if (const Entry* e = get(data, "beta")) cfg.mg.beta = parse_double(e->value, origin, e->line);
    if (const Entry* e = get(data, "gamma")) cfg.mg.gamma = parse_double(e->value, origin, e->line);
    if (const Entry* e = get(data, "exponent"))
      cfg.mg.exponent = static_cast<int>(parse_int(e->value, origin, e->line));
    if (const Entry* e = get(data, "horizon"))
      cfg.mg.horizon = static_cast<int>(parse_int(e->value, origin, e->line));
    if (const Entry* e = get(data, "embed"))
      cfg.mg.embed = static_cast<int>(parse_int(e->value, origin, e->line));
  } else if (cfg.generator == "survival") {
    if (const Entry* e = get(data, "dim"))
      cfg.survival.dim = static_cast<int>(parse_int(e->value, origin, e->line));
    if (const Entry* e = get(data, "noise"))
      cfg.survival.noise = parse_double(e->value, origin, e->line);
    if (const Entry* e = get(data, "censor_rate"))
      cfg.survival.censor_rate = parse_double(e->value, origin, e->line);
    if (const Entry* e = get(data, "horizon")) {
      cfg.survival.horizon = parse_double(e->value, origin, e->line);
      cfg.survival_median_horizon = false;
    }
    if (const Entry* e = get(data, "median_horizon"))
      cfg.survival_median_horizon = parse_bool(e->value, origin, e->line);
  } else if (cfg.generator == "file") {
    if (const Entry* e = get(data, "path")) cfg.path = e->value;
  }
  reject_unused(data, origin, "data");

  Section& grid = sections["grid"];
  if (const Entry* e = get(grid, "nu_b")) cfg.axes.nu_b = parse_list(e->value, origin, e->line);
  if (const Entry* e = get(grid, "nu_o")) cfg.axes.nu_o = parse_list(e->value, origin, e->line);
  if (const Entry* e = get(grid, "alpha")) cfg.axes.alpha = parse_list(e->value, origin, e->line);
  reject_unused(grid, origin, "grid");

  Section& methods = sections["methods"];
  if (const Entry* e = get(methods, "kernel")) {
    if (e->value == "rbf") cfg.kernel = KernelKind::Rbf;
    else if (e->value == "linear") cfg.kernel = KernelKind::Linear;
    else fail(origin, e->line, "kernel must be rbf or linear");
  }
  if (const Entry* e = get(methods, "ordering")) {
    if (e->value == "global") cfg.ordering = OrderingMode::Global;
    else if (e->value == "per-class") cfg.ordering = OrderingMode::PerClass;
    else fail(origin, e->line, "ordering must be global or per-class");
  }
  if (const Entry* e = get(methods, "width"))
    cfg.fixed_width = parse_double(e->value, origin, e->line);
  if (const Entry* e = get(methods, "quantiles"))
    cfg.quantiles = parse_list(e->value, origin, e->line);
  if (const Entry* e = get(methods, "strategies")) {
    cfg.strategies.clear();
    std::istringstream iss(e->value);
    std::string tok;
    while (iss >> tok) {
      if (tok == "unsmooth") cfg.strategies.push_back(SelectionStrategy::Unsmooth);
      else if (tok == "smoothed") cfg.strategies.push_back(SelectionStrategy::Smoothed);
      else if (tok == "extended") cfg.strategies.push_back(SelectionStrategy::Extended);
      else fail(origin, e->line, "unknown strategy '" + tok + "'");
    }
  }
  reject_unused(methods, origin, "methods");

  validate(cfg);
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open config file: " + path);
  return parse_config(in, path);
}

}  // namespace gosvm
