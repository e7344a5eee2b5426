#pragma once

// Shared builders for the worked examples plus independent oracles used to
// cross-check the library paths.

#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "cet/cbba.hpp"
#include "cet/random.hpp"
#include "cet/transforms.hpp"

namespace fixtures {

using cet::Cbba;
using cet::Complex;
using cet::FocalSet;
using cet::Frame;

inline Cbba make(const Frame& frame,
                 std::initializer_list<std::pair<FocalSet, Complex>> masses) {
  Cbba c;
  c.frame = frame;
  for (const auto& [s, z] : masses) c.masses[s] = z;
  return c;
}

// Two-element CBBA of the fractal allocation walkthrough.
inline Cbba example1() {
  return make(Frame({"x1", "x2"}),
              {{0b01, {0.1, -0.1}}, {0b11, {0.9, 0.1}}});
}

// The additive pair from the appendix.
inline Cbba example2_mx() {
  return make(Frame({"x1", "x2"}),
              {{0b01, {0.2, 0.1}}, {0b10, {0.5, 0.1}}, {0b11, {0.3, -0.2}}});
}
inline Cbba example2_my() {
  return make(Frame({"y1", "y2"}),
              {{0b01, {0.3, 0.2}}, {0b10, {0.2, 0.1}}, {0b11, {0.5, -0.3}}});
}

// Three six-element CBBAs with identical mass values on differently
// intersecting focal sets.
inline Frame frame6() { return Frame({"x1", "x2", "x3", "x4", "x5", "x6"}); }

inline FocalSet bits(std::initializer_list<int> elems) {
  FocalSet s = 0;
  for (int e : elems) s |= cet::focal::singleton(e - 1);
  return s;
}

inline Cbba example3_m1() {
  return make(frame6(), {{bits({1, 2}), {0.2, 0.1}},
                         {bits({3, 4}), {0.6, 0.2}},
                         {bits({5, 6}), {0.2, -0.3}}});
}
inline Cbba example3_m2() {
  return make(frame6(), {{bits({1, 2}), {0.2, 0.1}},
                         {bits({2, 3}), {0.6, 0.2}},
                         {bits({3, 6}), {0.2, -0.3}}});
}
inline Cbba example3_m3() {
  return make(frame6(), {{bits({1, 2}), {0.2, 0.1}},
                         {bits({2, 3}), {0.6, 0.2}},
                         {bits({5, 6}), {0.2, -0.3}}});
}

inline std::string data_dir() {
  const char* d = std::getenv("CET_DATA_DIR");
  return d ? d : "data";
}

// Five-source fusion scenario on {T1,T2,T3} with a dominant first target;
// acceptance arrives only once enough evidence has been folded in.
inline std::vector<Cbba> fusion_evidence() {
  const Frame f({"T1", "T2", "T3"});
  const FocalSet t1 = 0b001, t2 = 0b010, t3 = 0b100, t12 = 0b011, t23 = 0b110,
                 all = 0b111;
  return {
      make(f, {{t1, {0.32, 0.03}}, {t2, {0.26, -0.02}}, {t3, {0.14, -0.01}},
               {t12, {0.10, 0.0}}, {t23, {0.06, 0.0}}, {all, {0.12, 0.0}}}),
      make(f, {{t1, {0.30, -0.02}}, {t2, {0.28, 0.02}}, {t3, {0.12, 0.0}},
               {t12, {0.12, 0.0}}, {t23, {0.06, 0.0}}, {all, {0.12, 0.0}}}),
      make(f, {{t1, {0.38, 0.02}}, {t2, {0.22, -0.01}}, {t3, {0.14, -0.01}},
               {t12, {0.08, 0.0}}, {t23, {0.06, 0.0}}, {all, {0.12, 0.0}}}),
      make(f, {{t1, {0.45, 0.01}}, {t2, {0.20, 0.0}}, {t3, {0.13, -0.01}},
               {t12, {0.08, 0.0}}, {t23, {0.04, 0.0}}, {all, {0.10, 0.0}}}),
      make(f, {{t1, {0.50, 0.02}}, {t2, {0.18, -0.01}}, {t3, {0.12, -0.01}},
               {t12, {0.08, 0.0}}, {t23, {0.04, 0.0}}, {all, {0.08, 0.0}}}),
  };
}

// Seed-fixed two-Gaussian dataset as CSV text: two classes whose per-attribute
// spreads alternate tight/wide, which gives the entropy-change classifier a
// strong signal. Classes alternate row by row.
inline std::string two_gauss_csv(std::uint64_t seed, int rows) {
  constexpr int kAttrs = 8;
  constexpr double kMeans[2][kAttrs] = {
      {0, 0, 0, 0, 0, 0, 0, 0},
      {10, -10, 12, -12, 9, -9, 11, -11},
  };
  constexpr double kSds[2][kAttrs] = {
      {0.5, 4.0, 0.5, 4.0, 0.5, 4.0, 0.5, 4.0},
      {4.0, 0.5, 4.0, 0.5, 4.0, 0.5, 4.0, 0.5},
  };
  cet::Rng rng(seed);
  std::string csv = "f0,f1,f2,f3,f4,f5,f6,f7,label\n";
  char buf[64];
  for (int i = 0; i < rows; ++i) {
    const int cls = i % 2;
    for (int a = 0; a < kAttrs; ++a) {
      std::snprintf(buf, sizeof(buf), "%.17g,", kMeans[cls][a] + kSds[cls][a] * rng.normal());
      csv += buf;
    }
    csv += cls == 0 ? "alpha\n" : "beta\n";
  }
  return csv;
}

namespace oracle {

// Subset scan over the full power set, independent of the bit tricks in the
// library path.
inline std::vector<FocalSet> strict_supersets(FocalSet s, int n) {
  std::vector<FocalSet> out;
  for (FocalSet b = 1; b < (FocalSet{1} << n); ++b) {
    if ((s & b) == s && b != s) out.push_back(b);
  }
  return out;
}

// Pairwise-cosine form of the interference effect (unordered pairs, factor 2).
inline double interference_pairwise(const Cbba& c, FocalSet b) {
  std::vector<Complex> zs;
  for (const auto& [s, z] : c.masses) {
    if ((s & b) == s && std::abs(z) > 0.0) zs.push_back(z);
  }
  double total = 0.0;
  for (size_t i = 0; i < zs.size(); ++i) {
    for (size_t j = i + 1; j < zs.size(); ++j) {
      total += 2.0 * std::abs(zs[i]) * std::abs(zs[j]) *
               std::cos(std::arg(zs[i]) - std::arg(zs[j]));
    }
  }
  return total;
}

// Real-arithmetic fractal rule for BBAs, kept apart from the complex path.
inline std::map<FocalSet, double> fb_fractal(const Cbba& bba, int n) {
  std::map<FocalSet, double> out;
  for (FocalSet a = 1; a < (FocalSet{1} << n); ++a) {
    double v = 0.0;
    for (const auto& [b, z] : bba.masses) {
      if ((a & b) == a) {
        v += z.real() /
             static_cast<double>((std::uint64_t{1} << cet::focal::cardinality(b)) - 1);
      }
    }
    if (v != 0.0) out[a] = v;
  }
  return out;
}

// Conflict-free triple combination by direct triple sum (no pairwise folds).
inline Cbba combine_triple(const Cbba& a, const Cbba& b, const Cbba& c) {
  Cbba out;
  out.frame = a.frame;
  Complex conflict;
  for (const auto& [sa, za] : a.masses) {
    for (const auto& [sb, zb] : b.masses) {
      for (const auto& [sc, zc] : c.masses) {
        const FocalSet meet = sa & sb & sc;
        const Complex w = za * zb * zc;
        if (meet == 0) {
          conflict += w;
        } else {
          out.masses[meet] += w;
        }
      }
    }
  }
  const Complex divisor = Complex{1.0, 0.0} - conflict;
  for (auto& [s, z] : out.masses) z /= divisor;
  return out;
}

inline double shannon_of(const std::vector<double>& p) {
  double e = 0.0;
  for (double v : p) {
    if (v > 1e-15) e -= v * std::log2(v);
  }
  return e;
}

}  // namespace oracle

}  // namespace fixtures
