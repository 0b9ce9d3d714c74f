#pragma once

#include <filesystem>
#include <fstream>
#include <string>

namespace sdelab {

// Opens `dir/name` for writing, creating `dir` if needed. Throws
// std::runtime_error when the file cannot be created.
std::ofstream open_output(const std::filesystem::path& dir, const std::string& name);

}  // namespace sdelab
