#include "sdelab/config.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

#include "sdelab/errors.hpp"
#include "sdelab/version.hpp"

namespace sdelab {
namespace {

using Validator = std::function<void(const std::string& key, const std::string& value)>;

struct KeySpec {
  std::string default_value;
  Validator check;
};

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

double parse_double(const std::string& key, const std::string& value) {
  double out = 0.0;
  std::istringstream in(value);
  in >> out;
  if (!in || !(in >> std::ws).eof() || !std::isfinite(out)) {
    throw ValidationError("config key '" + key + "': '" + value + "' is not a number");
  }
  return out;
}

std::uint64_t parse_uint(const std::string& key, const std::string& value) {
  std::uint64_t out = 0;
  const auto* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end) {
    throw ValidationError("config key '" + key + "': '" + value +
                          "' is not a non-negative integer");
  }
  return out;
}

std::vector<std::size_t> parse_list(const std::string& key, const std::string& value) {
  std::vector<std::size_t> out;
  std::istringstream in(value);
  std::string item;
  while (std::getline(in, item, ',')) {
    out.push_back(static_cast<std::size_t>(parse_uint(key, trim(item))));
  }
  if (out.empty()) throw ValidationError("config key '" + key + "': empty list");
  return out;
}

Validator real_in(double lo, double hi, bool open_lo, bool open_hi) {
  return [=](const std::string& key, const std::string& value) {
    const double v = parse_double(key, value);
    const bool ok_lo = open_lo ? v > lo : v >= lo;
    const bool ok_hi = open_hi ? v < hi : v <= hi;
    if (!ok_lo || !ok_hi) {
      std::ostringstream msg;
      msg << "config key '" << key << "': " << v << " outside " << (open_lo ? '(' : '[')
          << lo << ", " << hi << (open_hi ? ')' : ']');
      throw ValidationError(msg.str());
    }
  };
}

Validator any_real() {
  return [](const std::string& key, const std::string& value) { parse_double(key, value); };
}

Validator uint_at_least(std::uint64_t lo) {
  return [=](const std::string& key, const std::string& value) {
    if (parse_uint(key, value) < lo) {
      throw ValidationError("config key '" + key + "' must be >= " + std::to_string(lo));
    }
  };
}

Validator power_of_two(std::uint64_t lo) {
  return [=](const std::string& key, const std::string& value) {
    const auto v = parse_uint(key, value);
    if (!std::has_single_bit(v) || v < lo) {
      throw ValidationError("config key '" + key + "' must be a power of two >= " +
                            std::to_string(lo));
    }
  };
}

Validator one_of(std::vector<std::string> choices) {
  return [choices = std::move(choices)](const std::string& key, const std::string& value) {
    if (std::find(choices.begin(), choices.end(), value) == choices.end()) {
      throw ValidationError("config key '" + key + "': unsupported value '" + value + "'");
    }
  };
}

Validator auto_or(Validator inner) {
  return [inner = std::move(inner)](const std::string& key, const std::string& value) {
    if (value != "auto") inner(key, value);
  };
}

const std::map<std::string, KeySpec>& key_table() {
  static const std::map<std::string, KeySpec> table = {
      {"run.command", {"", [](const std::string&, const std::string&) {}}},
      {"grid.L", {"16", real_in(0.0, 1e6, true, false)}},
      {"grid.N", {"16384", power_of_two(SpectralGrid::kMinPoints)}},
      {"drift.kind",
       {"smooth_benchmark",
        [](const std::string&, const std::string& v) { parse_drift_kind(v); }}},
      {"drift.beta", {"0.25", real_in(0.0, 0.5, true, true)}},
      {"drift.holder_exponent", {"0.6", real_in(0.0, 1.0, true, true)}},
      {"drift.seed", {"0", uint_at_least(0)}},
      {"drift.amplitude", {"1", any_real()}},
      {"drift.frequency", {"1", any_real()}},
      {"drift.time_modulation",
       {"constant",
        [](const std::string&, const std::string& v) { parse_time_modulation(v); }}},
      {"drift.m", {"64", uint_at_least(1)}},
      {"pde.lambda", {"auto", auto_or(real_in(0.0, kMaxLambda, true, false))}},
      {"pde.time_nodes", {"64", uint_at_least(8)}},
      {"pde.tol", {"1e-8", real_in(0.0, 1.0, true, true)}},
      {"scheme.n_list", {"16,32,64,128,256,512", [](const std::string& k, const std::string& v) {
                           for (auto n : parse_list(k, v)) {
                             if (n == 0) throw ValidationError("config key '" + k + "': n must be >= 1");
                           }
                         }}},
      {"scheme.n_fine", {"8192", power_of_two(1)}},
      {"scheme.m_ref", {"auto", auto_or(uint_at_least(1))}},
      {"scheme.paths", {"10000", uint_at_least(2)}},
      {"scheme.x0", {"0", any_real()}},
      {"scheme.T", {"1", real_in(0.0, 1.0, true, false)}},
      {"scheme.master_seed", {"0", uint_at_least(0)}},
      {"rate.beta_hat", {"auto", auto_or(real_in(0.0, 0.5, true, true))}},
      {"rate.epsilon", {"0.05", real_in(0.0, 0.5, true, true)}},
      {"rate.p", {"2", [](const std::string& k, const std::string& v) {
                    const double p = parse_double(k, v);
                    if (!(p == 1.0 || p >= 2.0))
                      throw ValidationError("config key '" + k + "' must be 1 or >= 2");
                  }}},
      {"rate.m_fixed", {"0", uint_at_least(0)}},
      {"besov.func", {"sin", one_of({"sin", "lacunary", "zero", "drift"})}},
      {"besov.gamma", {"0.5", real_in(-2.0, 3.0, false, false)}},
      {"besov.theta", {"0.25", real_in(0.0, 1.0, false, true)}},
      {"yw.delta", {"2.718281828459045", real_in(1.0, 1e12, true, false)}},
      {"yw.kappa", {"0.1", real_in(0.0, 1.0, true, true)}},
      {"yw.points", {"10001", uint_at_least(10000)}},
  };
  return table;
}

}  // namespace

ExperimentConfig::ExperimentConfig() {
  for (const auto& [key, spec] : key_table()) values_[key] = spec.default_value;
}

void ExperimentConfig::set(const std::string& key, const std::string& raw) {
  const auto it = key_table().find(key);
  if (it == key_table().end()) throw ValidationError("unknown config key '" + key + "'");
  const std::string value = trim(raw);
  it->second.check(key, value);
  values_[key] = value;
}

void ExperimentConfig::set_assignment(const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos) {
    throw ValidationError("expected key = value, got '" + assignment + "'");
  }
  set(trim(assignment.substr(0, eq)), assignment.substr(eq + 1));
}

ExperimentConfig ExperimentConfig::from_stream(std::istream& in, const std::string& source) {
  ExperimentConfig config;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const std::string body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    try {
      config.set_assignment(body);
    } catch (const ValidationError& e) {
      throw ValidationError(source + ":" + std::to_string(number) + ": " + e.what());
    }
  }
  return config;
}

ExperimentConfig ExperimentConfig::from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open config file '" + path.string() + "'");
  return from_stream(in, path.string());
}

const std::string& ExperimentConfig::get(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) throw ValidationError("unknown config key '" + key + "'");
  return it->second;
}

bool ExperimentConfig::has_key(const std::string& key) const {
  return key_table().contains(key);
}

std::vector<std::string> ExperimentConfig::known_keys() {
  std::vector<std::string> keys;
  for (const auto& [key, spec] : key_table()) keys.push_back(key);
  return keys;
}

double ExperimentConfig::get_double(const std::string& key) const {
  return parse_double(key, get(key));
}

std::uint64_t ExperimentConfig::get_uint(const std::string& key) const {
  return parse_uint(key, get(key));
}

std::vector<std::size_t> ExperimentConfig::get_size_list(const std::string& key) const {
  return parse_list(key, get(key));
}

SpectralGrid ExperimentConfig::grid() const {
  return SpectralGrid(get_double("grid.L"), get_uint("grid.N"));
}

DriftSpec ExperimentConfig::drift_spec() const {
  DriftSpec spec;
  spec.kind = parse_drift_kind(get("drift.kind"));
  spec.beta = get_double("drift.beta");
  spec.holder_exponent = get_double("drift.holder_exponent");
  spec.seed = get_uint("drift.seed");
  spec.amplitude = get_double("drift.amplitude");
  spec.frequency = get_double("drift.frequency");
  spec.time_modulation = parse_time_modulation(get("drift.time_modulation"));
  return spec;
}

std::size_t ExperimentConfig::drift_m() const { return get_uint("drift.m"); }

PdeOptions ExperimentConfig::pde_options() const {
  PdeOptions options;
  options.T = get_double("scheme.T");
  options.time_nodes = get_uint("pde.time_nodes");
  options.tol = get_double("pde.tol");
  return options;
}

std::optional<double> ExperimentConfig::pde_lambda() const {
  if (get("pde.lambda") == "auto") return std::nullopt;
  return get_double("pde.lambda");
}

EnsembleOptions ExperimentConfig::ensemble_options() const {
  EnsembleOptions options;
  options.master_seed = get_uint("scheme.master_seed");
  options.paths = get_uint("scheme.paths");
  options.T = get_double("scheme.T");
  options.n_fine = get_uint("scheme.n_fine");
  options.x0 = get_double("scheme.x0");
  options.p = get_double("rate.p");
  return options;
}

RateParams ExperimentConfig::rate_params() const {
  RateParams params;
  params.beta = get_double("drift.beta");
  params.beta_hat =
      get("rate.beta_hat") == "auto" ? params.beta + 0.05 : get_double("rate.beta_hat");
  params.epsilon = get_double("rate.epsilon");
  params.p = get_double("rate.p");
  return params;
}

RateStudyConfig ExperimentConfig::rate_study() const {
  RateStudyConfig config;
  config.drift = drift_spec();
  config.grid_half_length = get_double("grid.L");
  config.grid_points = get_uint("grid.N");
  config.rate = rate_params();
  config.n_list = get_size_list("scheme.n_list");
  config.m_ref = get("scheme.m_ref") == "auto" ? 0 : get_uint("scheme.m_ref");
  config.m_fixed = get_uint("rate.m_fixed");
  config.ensemble = ensemble_options();
  return config;
}

YWParams ExperimentConfig::yw_params() const {
  YWParams params;
  params.delta = get_double("yw.delta");
  params.kappa = get_double("yw.kappa");
  return params;
}

void ExperimentConfig::validate() const {
  (void)grid();
  rate_params().validate();
  const auto n_fine = get_uint("scheme.n_fine");
  for (auto n : get_size_list("scheme.n_list")) {
    require(n_fine % n == 0, "scheme.n_list entries must divide scheme.n_fine");
  }
}

void ExperimentConfig::write_manifest(std::ostream& out, const std::string& command) const {
  out << "# sdelab run manifest\n";
  out << "# version = " << kVersion << '\n';
  out << "# seed = " << get("scheme.master_seed") << '\n';
  for (const auto& [key, value] : values_) {
    out << key << " = " << (key == "run.command" ? command : value) << '\n';
  }
}

}  // namespace sdelab
