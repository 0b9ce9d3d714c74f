#include "sdelab/csv.hpp"

#include <stdexcept>

namespace sdelab {

std::ofstream open_output(const std::filesystem::path& dir, const std::string& name) {
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  return out;
}

}  // namespace sdelab
