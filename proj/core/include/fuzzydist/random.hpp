#pragma once

#include <cstdint>
#include <random>

namespace fuzzydist {

/// The project-wide PRNG: the 64-bit Mersenne Twister (MT19937-64). Its
/// output sequence is fixed by the C++ standard, so a seed reproduces the
/// same stream on every conforming implementation.
using Rng = std::mt19937_64;

/// Uniform double in [0, 1) built from the top 53 bits of one draw.
/// std::uniform_real_distribution is not used because its output is
/// implementation-defined.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace fuzzydist
