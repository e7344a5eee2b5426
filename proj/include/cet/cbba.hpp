#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "cet/frame.hpp"

namespace cet {

using Complex = std::complex<double>;

// Masses keyed by focal set in ascending bitmask order; absent keys are zero.
using MassMap = std::map<FocalSet, Complex>;

// Default tolerance for the complex sum-to-one check (overridable per call).
inline constexpr double kDefaultTolerance = 1e-9;

// Conflict threshold of the combination rule: |1-K| below this is total conflict.
inline constexpr double kConflictTolerance = 1e-12;

// Weights below this contribute zero to entropy sums (0 log 0 := 0).
inline constexpr double kEntropyFloor = 1e-15;

double magnitude(Complex z) noexcept;

// Quadrant-correct phase in (-pi, pi] from the five-case piecewise rule.
// Throws ZeroPhaseUndefined on z == 0.
double phase(Complex z);

Complex from_euler(double mag, double angle) noexcept;

// Complex basic belief assignment over one frame. A BBA is the special case
// with all-real non-negative masses. The optional product_dims marks a joint
// CBBA on a product frame (rows x cols, row-major pairing); it changes the
// fractal redistribution rule, nothing else.
struct Cbba {
  Frame frame;
  MassMap masses;
  std::optional<std::pair<int, int>> product_dims;

  Complex at(FocalSet s) const noexcept {
    auto it = masses.find(s);
    return it == masses.end() ? Complex{} : it->second;
  }
  Complex sum() const noexcept {
    Complex t;
    for (const auto& [s, z] : masses) t += z;
    return t;
  }

  bool operator==(const Cbba&) const = default;
};

struct ValidationReport {
  bool ok = true;
  std::string violation;  // name of the first violated invariant
  double residual = 0.0;
  std::string detail;
};

// Diagnostic check of the CBBA invariants: M(empty)=0, sum = 1+0i within tol,
// every stored magnitude <= 1+tol. Reports the first violation, never throws.
ValidationReport validate(const Cbba& c, double tol = kDefaultTolerance);

bool is_real(const Cbba& c, double tol = kDefaultTolerance);
bool is_bayesian(const Cbba& c, double tol = kDefaultTolerance);
// Real with non-negative masses, i.e. a classical BBA.
bool is_bba(const Cbba& c, double tol = kDefaultTolerance);

// Com(a) = |M(a)| / sum_B |M(B)|. Throws DegenerateMass on an all-zero CBBA.
double commitment(const Cbba& c, FocalSet a);
std::map<FocalSet, double> commitments(const Cbba& c);

// IE(b) = |sum_{X subset b} M(X)|^2 - sum_{X subset b} |M(X)|^2, the residual
// of the squared modulus of a complex sum over the sum of squared moduli.
double interference(const Cbba& c, FocalSet b);

}  // namespace cet
