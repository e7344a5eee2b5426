#include "cet/random.hpp"

#include <cmath>
#include <vector>

namespace cet {

double Rng::normal() {
  if (has_cached_) {
    has_cached_ = false;
    return cached_;
  }
  const double u1 = positive01();
  const double u2 = uniform01();
  const double r = std::sqrt(-2.0 * std::log(u1));
  cached_ = r * std::sin(2.0 * M_PI * u2);
  has_cached_ = true;
  return r * std::cos(2.0 * M_PI * u2);
}

std::uint64_t Rng::below(std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t v;
  do {
    v = next();
  } while (v >= limit);
  return v % bound;
}

RandomProfile random_profile_from_id(const std::string& id) {
  if (id == "real-bayesian") return RandomProfile::RealBayesian;
  if (id == "real-general") return RandomProfile::RealGeneral;
  if (id == "complex-general") return RandomProfile::ComplexGeneral;
  fail(Errc::InvalidArgument, "unknown random profile '" + id + "'");
}

Cbba random_cbba(const Frame& frame, Rng& rng, RandomProfile profile) {
  const int n = frame.size();
  std::vector<FocalSet> support;
  if (profile == RandomProfile::RealBayesian) {
    for (int i = 0; i < n; ++i) support.push_back(focal::singleton(i));
  } else {
    if (n > kMaxEnumerationSize) {
      fail(Errc::FrameTooLarge, "random support enumeration requires n <= " +
                                    std::to_string(kMaxEnumerationSize));
    }
    for (FocalSet s = 1; s <= frame.full_set(); ++s) support.push_back(s);
  }

  // Real parts: normalized exponentials form a uniform simplex draw.
  std::vector<double> re(support.size());
  double total = 0.0;
  for (auto& v : re) {
    v = -std::log(rng.positive01());
    total += v;
  }
  for (auto& v : re) v /= total;

  std::vector<double> im(support.size(), 0.0);
  if (profile == RandomProfile::ComplexGeneral) {
    double mean = 0.0;
    for (auto& v : im) {
      v = rng.uniform01() - 0.5;
      mean += v;
    }
    mean /= static_cast<double>(im.size());
    for (auto& v : im) v -= mean;  // imaginary parts sum to zero
    double scale = 1.0;
    for (size_t i = 0; i < im.size(); ++i) {
      if (std::abs(im[i]) < 1e-12) continue;
      const double headroom = std::sqrt(std::max(0.0, 1.0 - re[i] * re[i]));
      scale = std::min(scale, 0.9 * headroom / std::abs(im[i]));
    }
    for (auto& v : im) v *= scale;  // per-focal magnitude stays <= 1
  }

  Cbba out;
  out.frame = frame;
  for (size_t i = 0; i < support.size(); ++i) {
    out.masses[support[i]] = Complex{re[i], im[i]};
  }
  return out;
}

Cbba random_cbba(const Frame& frame, std::uint64_t seed, RandomProfile profile) {
  Rng rng(seed);
  return random_cbba(frame, rng, profile);
}

}  // namespace cet
