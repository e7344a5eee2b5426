#include "cet/cbba.hpp"

#include <cmath>

namespace cet {

double magnitude(Complex z) noexcept { return std::abs(z); }

double phase(Complex z) {
  const double u = z.real();
  const double v = z.imag();
  if (u == 0.0 && v == 0.0) {
    fail(Errc::ZeroPhaseUndefined, "phase of the zero mass is undefined");
  }
  if (u > 0.0) return std::atan(v / u);
  if (u == 0.0) return v > 0.0 ? M_PI / 2 : -M_PI / 2;
  if (v >= 0.0) return std::atan(v / u) + M_PI;
  return std::atan(v / u) - M_PI;
}

Complex from_euler(double mag, double angle) noexcept {
  return std::polar(mag, angle);
}

ValidationReport validate(const Cbba& c, double tol) {
  ValidationReport r;
  for (const auto& [s, z] : c.masses) {
    if (!c.frame.contains(s)) {
      r.ok = false;
      r.violation = "FocalOutOfRange";
      r.residual = 0.0;
      r.detail = "a focal set references positions outside the frame";
      return r;
    }
  }
  const double empty_mass = magnitude(c.at(0));
  if (empty_mass > 0.0) {
    r.ok = false;
    r.violation = "EmptySetMass";
    r.residual = empty_mass;
    r.detail = "the empty set carries nonzero mass";
    return r;
  }
  const double sum_residual = magnitude(c.sum() - Complex{1.0, 0.0});
  if (sum_residual > tol) {
    r.ok = false;
    r.violation = "SumViolation";
    r.residual = sum_residual;
    r.detail = "masses do not sum to 1+0i";
    return r;
  }
  for (const auto& [s, z] : c.masses) {
    const double m = magnitude(z);
    if (m > 1.0 + tol) {
      r.ok = false;
      r.violation = "MagnitudeViolation";
      r.residual = m - 1.0;
      r.detail = "a mass magnitude exceeds 1 at " + focal::to_string(s, c.frame);
      return r;
    }
  }
  return r;
}

bool is_real(const Cbba& c, double tol) {
  for (const auto& [s, z] : c.masses) {
    if (std::abs(z.imag()) > tol) return false;
  }
  return true;
}

bool is_bayesian(const Cbba& c, double tol) {
  for (const auto& [s, z] : c.masses) {
    if (focal::cardinality(s) > 1 && magnitude(z) > tol) return false;
  }
  return true;
}

bool is_bba(const Cbba& c, double tol) {
  if (!is_real(c, tol)) return false;
  for (const auto& [s, z] : c.masses) {
    if (z.real() < -tol) return false;
  }
  return true;
}

double commitment(const Cbba& c, FocalSet a) {
  double total = 0.0;
  for (const auto& [s, z] : c.masses) total += magnitude(z);
  if (total == 0.0) {
    fail(Errc::DegenerateMass, "commitment of an all-zero mass function");
  }
  return magnitude(c.at(a)) / total;
}

std::map<FocalSet, double> commitments(const Cbba& c) {
  double total = 0.0;
  for (const auto& [s, z] : c.masses) total += magnitude(z);
  if (total == 0.0) {
    fail(Errc::DegenerateMass, "commitment of an all-zero mass function");
  }
  std::map<FocalSet, double> out;
  for (const auto& [s, z] : c.masses) out[s] = magnitude(z) / total;
  return out;
}

double interference(const Cbba& c, FocalSet b) {
  if (!c.frame.contains(b)) {
    fail(Errc::InvalidArgument, "focal set has bits outside the frame");
  }
  Complex total;
  double squares = 0.0;
  for (const auto& [s, z] : c.masses) {
    if (focal::subset_of(s, b)) {
      total += z;
      squares += std::norm(z);
    }
  }
  return std::norm(total) - squares;
}

}  // namespace cet
