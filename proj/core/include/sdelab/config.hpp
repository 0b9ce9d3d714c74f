#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sdelab/drift.hpp"
#include "sdelab/ensemble.hpp"
#include "sdelab/rate_study.hpp"
#include "sdelab/spectral_grid.hpp"
#include "sdelab/yw.hpp"
#include "sdelab/zvonkin.hpp"

namespace sdelab {

// Flat `key = value` experiment configuration. Lines starting with '#' are
// comments. Every key has a default; unknown keys and out-of-range values are
// rejected with ValidationError as soon as they are set.
class ExperimentConfig {
 public:
  ExperimentConfig();

  static ExperimentConfig from_stream(std::istream& in, const std::string& source = "<stream>");
  static ExperimentConfig from_file(const std::filesystem::path& path);

  void set(const std::string& key, const std::string& value);
  // "key=value"
  void set_assignment(const std::string& assignment);
  const std::string& get(const std::string& key) const;
  bool has_key(const std::string& key) const;
  static std::vector<std::string> known_keys();

  double get_double(const std::string& key) const;
  std::uint64_t get_uint(const std::string& key) const;
  std::vector<std::size_t> get_size_list(const std::string& key) const;

  // Cross-key checks (e.g. beta < beta_hat). Throws ValidationError.
  void validate() const;

  SpectralGrid grid() const;
  DriftSpec drift_spec() const;
  std::size_t drift_m() const;
  PdeOptions pde_options() const;
  std::optional<double> pde_lambda() const;  // nullopt = auto-tune
  EnsembleOptions ensemble_options() const;
  RateParams rate_params() const;
  RateStudyConfig rate_study() const;
  YWParams yw_params() const;

  // Config snapshot that reproduces the run when fed back via --config.
  void write_manifest(std::ostream& out, const std::string& command) const;

 private:
  std::map<std::string, std::string> values_;
};

}  // namespace sdelab
