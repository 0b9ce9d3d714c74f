#pragma once

#include <cstdint>

namespace sdelab {

// Counter-based random numbers: every draw is a pure function of
// (seed, stream, counter), so results do not depend on generation order or
// on how work is split across threads.
std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter);

// Uniform on the open interval (0, 1), 53-bit resolution.
double counter_uniform(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter);

// Standard normal by inversion of the Gaussian CDF.
double counter_normal(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter);

}  // namespace sdelab
