#pragma once

#include <cstdint>
#include <random>

#include "cet/cbba.hpp"

namespace cet {

// Deterministic helpers on top of mt19937_64. Distribution classes from
// <random> are implementation-defined, so doubles are derived from raw engine
// output to keep streams reproducible for a fixed seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // Uniform in [0, 1) with 53-bit resolution.
  double uniform01() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  // Uniform in (0, 1], safe as a log argument.
  double positive01() { return 1.0 - uniform01(); }

  double normal();

  // Uniform integer in [0, bound) by rejection.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 eng_;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

enum class RandomProfile { RealBayesian, RealGeneral, ComplexGeneral };

RandomProfile random_profile_from_id(const std::string& id);

// Valid CBBA drawn from the profile's family:
//  real-bayesian   simplex over singletons
//  real-general    simplex over all nonempty subsets
//  complex-general real parts a simplex, imaginary parts summing to 0 with
//                  every per-focal magnitude kept <= 1
Cbba random_cbba(const Frame& frame, Rng& rng, RandomProfile profile);
Cbba random_cbba(const Frame& frame, std::uint64_t seed, RandomProfile profile);

}  // namespace cet
