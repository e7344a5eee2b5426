#include "cet/transforms.hpp"

#include <cmath>

namespace cet {

namespace {

double pow2m1(int cardinality) {
  return static_cast<double>((std::uint64_t{1} << cardinality) - 1);
}

int largest_multi_cardinality(const Cbba& c) {
  int largest = 1;
  for (const auto& [s, z] : c.masses) {
    const int k = focal::cardinality(s);
    if (k > 1 && magnitude(z) > 0.0) largest = std::max(largest, k);
  }
  return largest;
}

}  // namespace

std::map<FocalSet, Complex> cpbt(const Cbba& c) {
  std::map<FocalSet, Complex> out;
  for (int i = 0; i < c.frame.size(); ++i) out[focal::singleton(i)] = Complex{};
  for (const auto& [b, z] : c.masses) {
    if (b == 0) continue;
    const double k = focal::cardinality(b);
    for (int i = 0; i < c.frame.size(); ++i) {
      if (b & focal::singleton(i)) out[focal::singleton(i)] += z / k;
    }
  }
  return out;
}

Cbba cpbt_step(const Cbba& c, int p) {
  const int largest = largest_multi_cardinality(c);
  if (p <= largest) {
    fail(Errc::InvalidSpeed, "allocation speed p must exceed the largest focal "
                             "cardinality " + std::to_string(largest));
  }
  Cbba out;
  out.frame = c.frame;
  out.product_dims = c.product_dims;
  for (const auto& [b, z] : c.masses) {
    const int k = focal::cardinality(b);
    if (k <= 1) {
      out.masses[b] += z;
      continue;
    }
    out.masses[b] += z * (1.0 - static_cast<double>(k) / p);
    for (int i = 0; i < c.frame.size(); ++i) {
      if (b & focal::singleton(i)) {
        out.masses[focal::singleton(i)] += z / static_cast<double>(p);
      }
    }
  }
  return out;
}

std::vector<Cbba> cpbt_iterate(const Cbba& c, int p, int steps) {
  if (steps < 0) fail(Errc::InvalidArgument, "steps must be non-negative");
  std::vector<Cbba> seq;
  seq.reserve(static_cast<size_t>(steps) + 1);
  seq.push_back(c);
  for (int t = 0; t < steps; ++t) {
    seq.push_back(cpbt_step(seq.back(), p));
  }
  return seq;
}

Fcbba fcbba(const Cbba& c) {
  Fcbba out;
  out.frame = c.frame;
  out.product_dims = c.product_dims;
  if (c.frame.size() > kMaxEnumerationSize) {
    fail(Errc::FrameTooLarge, "fractal redistribution requires frame size <= " +
                                  std::to_string(kMaxEnumerationSize));
  }
  if (!c.product_dims) {
    for (const auto& [b, z] : c.masses) {
      if (b == 0 || magnitude(z) == 0.0) continue;
      const Complex share = z / pow2m1(focal::cardinality(b));
      for (FocalSet s = b; s != 0; s = (s - 1) & b) {
        out.masses[s] += share;
      }
    }
    return out;
  }
  // Joint rule: each product cell BxC spreads over its product sub-cells.
  const auto [rows, cols] = *c.product_dims;
  for (const auto& [d, z] : c.masses) {
    if (d == 0 || magnitude(z) == 0.0) continue;
    const auto dec = product::decompose(d, rows, cols);
    if (!dec.exact) {
      fail(Errc::InvalidArgument,
           "joint CBBA carries mass on the non-product focal set " +
               focal::to_string(d, c.frame));
    }
    const Complex share =
        z / (pow2m1(focal::cardinality(dec.rows)) * pow2m1(focal::cardinality(dec.cols)));
    for (FocalSet sb = dec.rows; sb != 0; sb = (sb - 1) & dec.rows) {
      for (FocalSet sc = dec.cols; sc != 0; sc = (sc - 1) & dec.cols) {
        out.masses[product::compose(sb, sc, cols)] += share;
      }
    }
  }
  return out;
}

Cbba exp_negation(const Cbba& c, bool include_empty) {
  const int n = c.frame.size();
  if (n > kMaxEnumerationSize) {
    fail(Errc::FrameTooLarge, "negation enumerates the power set; frame size "
                              "must be <= " + std::to_string(kMaxEnumerationSize));
  }
  const FocalSet full = c.frame.full_set();

  // Focal sets in range with nonzero mass; everything else in range
  // contributes exp(0) = 1 per target set.
  std::vector<std::pair<FocalSet, Complex>> active;
  for (const auto& [b, z] : c.masses) {
    if (b == full) continue;
    if (b == 0 && !include_empty) continue;
    if (magnitude(z) == 0.0) continue;
    active.emplace_back(b, z);
  }
  const double range_count = static_cast<double>(full) - (include_empty ? 0.0 : 1.0);
  const double constant_terms = range_count - static_cast<double>(active.size());

  Cbba out;
  out.frame = c.frame;
  Complex denominator;
  std::map<FocalSet, Complex> numerators;
  for (FocalSet a = 1; a <= full; ++a) {
    Complex num{constant_terms, 0.0};
    for (const auto& [b, z] : active) {
      const double k = focal::cardinality(a & (full & ~b));
      num += std::exp(-z * k);
    }
    numerators[a] = num;
    denominator += num;
  }
  for (auto& [a, num] : numerators) {
    out.masses[a] = num / denominator;
  }
  return out;
}

CombineResult combine(const Cbba& a, const Cbba& b) {
  if (a.frame != b.frame) {
    fail(Errc::FrameMismatch, "combination requires a shared frame");
  }
  Complex conflict;
  MassMap out;
  for (const auto& [sa, za] : a.masses) {
    for (const auto& [sb, zb] : b.masses) {
      const FocalSet meet = sa & sb;
      const Complex w = za * zb;
      if (meet == 0) {
        conflict += w;
      } else {
        out[meet] += w;
      }
    }
  }
  const Complex divisor = Complex{1.0, 0.0} - conflict;
  if (magnitude(divisor) < kConflictTolerance) {
    fail(Errc::TotalConflict, "evidence is in total conflict (|1-K| ~ 0)");
  }
  CombineResult r;
  r.combined.frame = a.frame;
  if (a.product_dims && a.product_dims == b.product_dims) {
    r.combined.product_dims = a.product_dims;  // meets of product cells are product cells
  }
  for (const auto& [s, z] : out) r.combined.masses[s] = z / divisor;
  r.conflict = conflict;
  return r;
}

Cbba joint(const Cbba& cx, const Cbba& cy) {
  Cbba out;
  out.frame = product_frame(cx.frame, cy.frame);
  out.product_dims = std::pair{cx.frame.size(), cy.frame.size()};
  for (const auto& [b, zb] : cx.masses) {
    if (b == 0) continue;
    for (const auto& [c, zc] : cy.masses) {
      if (c == 0) continue;
      out.masses[product::compose(b, c, cy.frame.size())] += zb * zc;
    }
  }
  return out;
}

Fcbba joint_fcbba(const Cbba& cx, const Cbba& cy) {
  return fcbba(joint(cx, cy));
}

}  // namespace cet
