#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "wavebc/format.hpp"
#include "wavebc/harness.hpp"

namespace wavebc::cli {
namespace {

using RawMap = std::map<std::string, std::string>;

// N = 1/h + 1 must stay within [8, 1e5].
constexpr double kMaxGridSpacing = 1.0 / 7.0;
constexpr double kMinGridSpacing = 1e-5;

const std::vector<std::string>& known_keys() {
  static const std::vector<std::string> keys = {
      "command", "bc",    "a",      "b",       "b1",    "b2",       "h",
      "courant", "t_end", "every",  "beta",    "omega0", "width",   "t0",
      "variant", "problem", "monitor", "snapshot", "case", "n",     "out"};
  return keys;
}

std::string trim(std::string s) {
  const auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

std::vector<std::string> split_list(const std::string& key, const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, ',')) {
    item = trim(item);
    if (item.empty()) throw InvalidValue(key, "empty list entry");
    out.push_back(item);
  }
  if (out.empty()) throw InvalidValue(key, "empty value");
  return out;
}

double to_double(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  if (t.empty()) throw InvalidValue(key, "empty value");
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(t.c_str(), &end);
  if (end != t.c_str() + t.size() || errno == ERANGE || !std::isfinite(v)) {
    throw InvalidValue(key, "not a finite number: '" + t + "'");
  }
  return v;
}

int to_int(const std::string& key, const std::string& text) {
  const double v = to_double(key, text);
  if (v != std::floor(v) || std::abs(v) > 1e9) throw InvalidValue(key, "not an integer");
  return static_cast<int>(v);
}

std::vector<double> to_doubles(const std::string& key, const std::string& text) {
  std::vector<double> out;
  for (const auto& item : split_list(key, text)) out.push_back(to_double(key, item));
  return out;
}

std::string join(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) s += ',';
    s += format_number(v[i]);
  }
  return s;
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) s += ',';
    s += v[i];
  }
  return s;
}

Command parse_command(const std::string& text) {
  static const std::map<std::string, Command> names = {
      {"analyze", Command::Analyze}, {"solve", Command::Solve},   {"table1", Command::Table1},
      {"table2", Command::Table2},   {"growth", Command::Growth}, {"forcing", Command::Forcing},
      {"roots", Command::Roots}};
  const auto it = names.find(text);
  if (it == names.end()) throw InvalidValue("command", "unknown command '" + text + "'");
  return it->second;
}

template <class E>
E parse_enum(const std::string& key, const std::string& text,
             const std::vector<std::pair<std::string, E>>& names) {
  for (const auto& [name, value] : names) {
    if (name == text) return value;
  }
  std::string allowed;
  for (const auto& [name, value] : names) allowed += (allowed.empty() ? "" : "|") + name;
  throw InvalidValue(key, "expected one of " + allowed + ", got '" + text + "'");
}

const std::vector<std::pair<std::string, ForcingVariant>> kVariants = {
    {"G", ForcingVariant::G}, {"Gt", ForcingVariant::Gt}, {"Gtt", ForcingVariant::Gtt}};
const std::vector<std::pair<std::string, SolveProblem>> kProblems = {
    {"pulse", SolveProblem::Pulse},
    {"traveling", SolveProblem::Traveling},
    {"surface", SolveProblem::Surface}};
const std::vector<std::pair<std::string, MonitorKind>> kMonitors = {
    {"maxnorm", MonitorKind::MaxNorm}, {"error", MonitorKind::Error}};
const std::vector<std::pair<std::string, SnapshotFormat>> kSnapshots = {
    {"none", SnapshotFormat::None},
    {"matrix", SnapshotFormat::Matrix},
    {"columnar", SnapshotFormat::Columnar}};
const std::vector<std::pair<std::string, ReflectionCase>> kCases = {
    {"loss", ReflectionCase::Loss}, {"gain", ReflectionCase::Gain}};

template <class E>
std::string enum_name(E value, const std::vector<std::pair<std::string, E>>& names) {
  for (const auto& [name, v] : names) {
    if (v == value) return name;
  }
  return "?";
}

std::string canonical_coefficient(const std::string& key, const std::string& text) {
  BoundaryCoefficient bc = BoundaryCoefficient::zero();
  try {
    bc = parse_coefficient(text);
  } catch (const InvalidValue&) {
    throw InvalidValue(key, "expected a real number or i<number>, got '" + text + "'");
  }
  switch (bc.mode()) {
    case BoundaryCoefficient::Mode::Zero: return "0";
    case BoundaryCoefficient::Mode::Real: return format_number(bc.value());
    case BoundaryCoefficient::Mode::Imaginary: return "i" + format_number(bc.value());
  }
  return "0";
}

// Keys a command reads (besides `command` and `out`).
std::vector<std::string> keys_for(const RunConfig& cfg) {
  switch (cfg.command) {
    case Command::Analyze:
      if (cfg.bc == "type1") return {"bc", "a", "b"};
      if (cfg.bc == "type2" || cfg.bc == "type4") return {"bc", "b"};
      if (cfg.bc == "coupled") return {"bc", "b1", "b2"};
      return {"bc"};
    case Command::Solve: {
      std::vector<std::string> k = {"problem", "b",     "h",       "courant",
                                    "t_end",   "every", "monitor", "snapshot"};
      if (cfg.problem == SolveProblem::Pulse) k.push_back("width");
      if (cfg.problem == SolveProblem::Surface) k.push_back("omega0");
      return k;
    }
    case Command::Table1: return {"b", "h", "courant"};
    case Command::Table2: return {"beta", "omega0", "h", "courant"};
    case Command::Growth: return {"b", "h", "courant", "t_end", "every", "width"};
    case Command::Forcing:
      return {"beta", "variant", "h", "omega0", "t0", "courant", "t_end", "every"};
    case Command::Roots: return {"case", "n"};
  }
  return {};
}

void apply_defaults(RunConfig& cfg) {
  const double eight_pi = 8.0 * std::numbers::pi;
  cfg.omega0 = eight_pi;
  switch (cfg.command) {
    case Command::Analyze:
      cfg.b = {"0"};
      break;
    case Command::Solve:
      cfg.b = {"0"};
      cfg.h = {1e-2};
      cfg.t_end = 1.0;
      cfg.every = 0.25;
      break;
    case Command::Table1:
      cfg.b = {"0", "0.5", "i0.5"};
      cfg.h = {1e-2, 5e-3, 2.5e-3};
      cfg.t_end = 10.0;
      break;
    case Command::Table2:
      cfg.beta = {0.5, 0.9, 0.99};
      cfg.h = {1e-2, 5e-3, 2.5e-3};
      cfg.t_end = 10.0;
      break;
    case Command::Growth:
      cfg.b = {"0.5"};
      cfg.h = {1e-2, 5e-3};
      cfg.t_end = 20.0;
      cfg.every = 0.25;
      break;
    case Command::Forcing:
      cfg.beta = {0.5, 0.9, 0.99};
      cfg.h = {2.5e-3};
      cfg.t_end = 4.0;
      cfg.every = 0.01;
      break;
    case Command::Roots:
      break;
  }
}

void check_real_coefficient(const std::string& key, const std::string& b) {
  if (!b.empty() && b.front() == 'i') throw InvalidValue(key, "must be real here");
}

void validate(const RunConfig& cfg, const std::set<std::string>& given) {
  const auto used = keys_for(cfg);
  for (const auto& key : given) {
    if (key == "command" || key == "out") continue;
    if (std::find(used.begin(), used.end(), key) == used.end()) {
      std::string why = "not used by '" + std::string(to_string(cfg.command)) + "'";
      if (cfg.command == Command::Analyze && !cfg.bc.empty()) why += " with bc=" + cfg.bc;
      throw InvalidValue(key, why);
    }
  }
  const bool uses_b = std::find(used.begin(), used.end(), "b") != used.end();
  if (uses_b && cfg.command != Command::Table1 && cfg.b.size() != 1) {
    throw InvalidValue("b", "exactly one value expected");
  }
  const bool multi_h = cfg.command == Command::Table1 || cfg.command == Command::Table2 ||
                       cfg.command == Command::Growth;
  if (cfg.command != Command::Analyze && cfg.command != Command::Roots) {
    if (cfg.h.empty()) throw InvalidValue("h", "empty list");
    if (!multi_h && cfg.h.size() != 1) throw InvalidValue("h", "exactly one value expected");
    for (double h : cfg.h) {
      if (!(h > 0.0) || h > kMaxGridSpacing || h < kMinGridSpacing) {
        throw InvalidValue("h", "grid spacing " + format_number(h) + " outside [" +
                                    format_number(kMinGridSpacing) + ", " + format_number(kMaxGridSpacing) + "]");
      }
    }
    if (!(cfg.courant > 0.0) || cfg.courant > Grid2D::kMaxCourant) {
      throw InvalidValue("courant", "must lie in (0, 0.99/sqrt(2)] for stability, got " +
                                        format_number(cfg.courant));
    }
    if (cfg.command == Command::Solve ? !(cfg.t_end >= 0.0) : !(cfg.t_end > 0.0)) {
      throw InvalidValue("t_end", "must be positive");
    }
    if (!(cfg.every >= 0.0)) throw InvalidValue("every", "must be nonnegative");
  }
  if (!(cfg.width > 0.0)) throw InvalidValue("width", "must be positive");
  if (!(cfg.t0 > 0.0)) throw InvalidValue("t0", "must be positive");
  if (cfg.command == Command::Table2 || cfg.command == Command::Forcing) {
    if (cfg.beta.empty()) throw InvalidValue("beta", "empty list");
    for (double beta : cfg.beta) {
      if (!(std::abs(beta) < 1.0) || !(beta * cfg.omega0 > 0.0)) {
        throw InvalidValue("beta", "needs |beta| < 1 and beta*omega0 > 0");
      }
    }
  }

  switch (cfg.command) {
    case Command::Analyze: {
      if (cfg.bc.empty()) throw InvalidValue("bc", "required for analyze");
      const double b = cfg.b.front() == "0" ? 0.0 : to_double("b", cfg.b.front());
      if (cfg.bc == "type1") {
        check_real_coefficient("b", cfg.b.front());
        if (!(std::abs(b) < 1.0)) throw InvalidValue("b", "type1 needs |b| < 1");
      } else if (cfg.bc == "type2") {
        check_real_coefficient("b", cfg.b.front());
        if (!(b != 0.0 && std::abs(b) < 1.0)) throw InvalidValue("b", "type2 needs 0 < |b| < 1");
      } else if (cfg.bc == "type4") {
        check_real_coefficient("b", cfg.b.front());
        if (b == 0.0) throw InvalidValue("b", "type4 needs b != 0");
      } else if (cfg.bc != "type3" && cfg.bc != "coupled") {
        throw InvalidValue("bc", "expected type1|type2|type3|type4|coupled, got '" + cfg.bc + "'");
      }
      break;
    }
    case Command::Solve:
      if (cfg.problem == SolveProblem::Surface) {
        const BoundaryCoefficient bc = parse_coefficient(cfg.b.front());
        if (bc.mode() != BoundaryCoefficient::Mode::Imaginary || !(std::abs(bc.value()) < 1.0) ||
            !(bc.value() * cfg.omega0 > 0.0)) {
          throw InvalidValue("b", "surface problem needs b = i beta with |beta| < 1, beta*omega0 > 0");
        }
      }
      if (cfg.monitor == MonitorKind::Error && cfg.problem == SolveProblem::Pulse) {
        throw InvalidValue("monitor", "the pulse problem has no exact solution");
      }
      break;
    case Command::Growth: {
      check_real_coefficient("b", cfg.b.front());
      if (cfg.b.front() == "0") throw InvalidValue("b", "growth needs a nonzero real b");
      break;
    }
    case Command::Roots:
      if (cfg.n < 1) throw InvalidValue("n", "must be at least 1");
      break;
    case Command::Table1:
    case Command::Table2:
    case Command::Forcing:
      break;
  }
}

void read_config_file(const std::string& path, RawMap& raw) {
  std::ifstream in(path);
  if (!in) throw InvalidValue("config", "cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  std::istringstream lines(ss.str());
  std::string line;
  while (std::getline(lines, line)) {
    line = trim(line);
    if (line.empty() || line.front() == '#' || line.front() == '[') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw InvalidValue("config", "expected key=value, got '" + line + "'");
    const std::string key = trim(line.substr(0, eq));
    if (std::find(known_keys().begin(), known_keys().end(), key) == known_keys().end()) {
      throw UnknownFlag(key);
    }
    raw[key] = trim(line.substr(eq + 1));
  }
}

RawMap parse_args(const std::vector<std::string>& args, std::string& config_path) {
  CLI::App app{"wavebc"};
  app.allow_extras(false);
  app.set_help_flag();
  RawMap raw;
  std::map<std::string, std::string> values;
  std::string command;
  app.add_option("command", command);
  app.add_option("--config", config_path);
  for (const auto& key : known_keys()) {
    if (key == "command") continue;
    app.add_option("--" + key, values[key]);
  }
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ExtrasError& e) {
    std::string first = e.what();
    for (const auto& a : args) {
      if (a.rfind("--", 0) == 0 || a.rfind("-", 0) == 0) {
        const std::string name = a.substr(a.find_first_not_of('-'));
        const std::string bare = name.substr(0, name.find('='));
        if (bare != "config" &&
            std::find(known_keys().begin(), known_keys().end(), bare) == known_keys().end()) {
          throw UnknownFlag(bare);
        }
      }
    }
    throw UnknownFlag(first);
  } catch (const CLI::ParseError& e) {
    throw InvalidValue("arguments", e.what());
  }
  if (!command.empty()) raw["command"] = command;
  for (const auto& key : known_keys()) {
    if (key == "command") continue;
    if (app.count("--" + key) > 0) raw[key] = values[key];
  }
  return raw;
}

RunConfig resolve(const RawMap& raw) {
  const auto cmd = raw.find("command");
  if (cmd == raw.end()) throw InvalidValue("command", "missing command");
  RunConfig cfg;
  cfg.command = parse_command(cmd->second);
  apply_defaults(cfg);
  std::set<std::string> given;
  for (const auto& [key, value] : raw) {
    given.insert(key);
    if (key == "command") continue;
    if (key == "bc") cfg.bc = value;
    else if (key == "a") cfg.a = to_double(key, value);
    else if (key == "b") {
      cfg.b.clear();
      for (const auto& item : split_list(key, value)) cfg.b.push_back(canonical_coefficient(key, item));
    } else if (key == "b1") cfg.b1 = to_double(key, value);
    else if (key == "b2") cfg.b2 = to_double(key, value);
    else if (key == "h") cfg.h = to_doubles(key, value);
    else if (key == "courant") cfg.courant = to_double(key, value);
    else if (key == "t_end") cfg.t_end = to_double(key, value);
    else if (key == "every") cfg.every = to_double(key, value);
    else if (key == "beta") cfg.beta = to_doubles(key, value);
    else if (key == "omega0") cfg.omega0 = to_double(key, value);
    else if (key == "width") cfg.width = to_double(key, value);
    else if (key == "t0") cfg.t0 = to_double(key, value);
    else if (key == "variant") cfg.variant = parse_enum(key, value, kVariants);
    else if (key == "problem") cfg.problem = parse_enum(key, value, kProblems);
    else if (key == "monitor") cfg.monitor = parse_enum(key, value, kMonitors);
    else if (key == "snapshot") cfg.snapshot = parse_enum(key, value, kSnapshots);
    else if (key == "case") cfg.reflection = parse_enum(key, value, kCases);
    else if (key == "n") cfg.n = to_int(key, value);
    else if (key == "out") cfg.out = value;
    else throw UnknownFlag(key);
  }
  if (cfg.command == Command::Solve && cfg.problem == SolveProblem::Surface &&
      given.count("b") == 0) {
    cfg.b = {"i0.5"};
  }
  validate(cfg, given);
  return cfg;
}

}  // namespace

std::string_view to_string(Command c) {
  switch (c) {
    case Command::Analyze: return "analyze";
    case Command::Solve: return "solve";
    case Command::Table1: return "table1";
    case Command::Table2: return "table2";
    case Command::Growth: return "growth";
    case Command::Forcing: return "forcing";
    case Command::Roots: return "roots";
  }
  return "?";
}

UnknownFlag::UnknownFlag(const std::string& key)
    : std::runtime_error("unknown flag or key '" + key + "'"), key_(key) {}

InvalidValue::InvalidValue(const std::string& key, const std::string& why)
    : std::runtime_error("invalid value for '" + key + "': " + why), key_(key) {}

BoundaryCoefficient parse_coefficient(const std::string& text) {
  const std::string t = trim(text);
  if (!t.empty() && t.front() == 'i') {
    return BoundaryCoefficient::imaginary(to_double("b", t.substr(1)));
  }
  const double b = to_double("b", t);
  if (b == 0.0) return BoundaryCoefficient::zero();
  return BoundaryCoefficient::real(b);
}

RunConfig parse_config(const std::vector<std::string>& args) {
  std::string config_path;
  RawMap cli = parse_args(args, config_path);
  RawMap merged;
  if (!config_path.empty()) read_config_file(config_path, merged);
  for (const auto& [key, value] : cli) merged[key] = value;
  return resolve(merged);
}

RunConfig parse_config_text(const std::string& text, const std::vector<std::string>& args) {
  // Route the document through the same file reader used for --config.
  char name[] = "/tmp/wavebc-config-XXXXXX";
  const int fd = mkstemp(name);
  if (fd < 0) throw IoError("cannot create a temporary config file");
  {
    std::ofstream f(name);
    f << text;
  }
  std::vector<std::string> all = args;
  all.push_back("--config");
  all.push_back(name);
  try {
    RunConfig cfg = parse_config(all);
    std::remove(name);
    return cfg;
  } catch (...) {
    std::remove(name);
    throw;
  }
}

std::string serialize(const RunConfig& cfg) {
  std::ostringstream os;
  os << "command=" << to_string(cfg.command) << '\n';
  for (const auto& key : keys_for(cfg)) {
    os << key << '=';
    if (key == "bc") os << cfg.bc;
    else if (key == "a") os << format_number(cfg.a);
    else if (key == "b") os << join(cfg.b);
    else if (key == "b1") os << format_number(cfg.b1);
    else if (key == "b2") os << format_number(cfg.b2);
    else if (key == "h") os << join(cfg.h);
    else if (key == "courant") os << format_number(cfg.courant);
    else if (key == "t_end") os << format_number(cfg.t_end);
    else if (key == "every") os << format_number(cfg.every);
    else if (key == "beta") os << join(cfg.beta);
    else if (key == "omega0") os << format_number(cfg.omega0);
    else if (key == "width") os << format_number(cfg.width);
    else if (key == "t0") os << format_number(cfg.t0);
    else if (key == "variant") os << enum_name(cfg.variant, kVariants);
    else if (key == "problem") os << enum_name(cfg.problem, kProblems);
    else if (key == "monitor") os << enum_name(cfg.monitor, kMonitors);
    else if (key == "snapshot") os << enum_name(cfg.snapshot, kSnapshots);
    else if (key == "case") os << enum_name(cfg.reflection, kCases);
    else if (key == "n") os << cfg.n;
    os << '\n';
  }
  os << "out=" << cfg.out << '\n';
  return os.str();
}

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

std::string artifact_stem(const RunConfig& cfg) {
  RunConfig copy = cfg;
  copy.out = ".";
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx",
                static_cast<unsigned long long>(fnv1a64(serialize(copy))));
  return std::string(to_string(cfg.command)) + "-" + hex;
}

}  // namespace wavebc::cli
