#pragma once

#include <vector>

#include "cet/cbba.hpp"

namespace cet {

// Complex pignistic belief transformation: CBet(e) = sum_{e in B} M(B)/|B|
// for every singleton e of the frame. The complex values sum to 1+0i.
std::map<FocalSet, Complex> cpbt(const Cbba& c);

// One step of the fractal allocation behind CPBT at speed p: every
// multi-element focal A keeps (1-|A|/p) of its mass and sheds 1/p of it to
// each member singleton. Throws InvalidSpeed unless p exceeds the largest
// multi-element focal cardinality.
Cbba cpbt_step(const Cbba& c, int p);

// The sequence [input, step 1, ..., step `steps`]; every entry is a valid
// CBBA and the singleton commitments converge to the CPBT limit as steps grow.
std::vector<Cbba> cpbt_iterate(const Cbba& c, int p, int steps);

// Fractal-redistributed CBBA: M_F(A) = sum over supersets B of A (including
// A itself) of M(B)/(2^|B|-1). Joint CBBAs redistribute over product cells
// instead: M_F(BxC) = sum_{B' >= B, C' >= C} M(B'xC')/S(B',C') with
// S(B,C) = (2^|B|-1)(2^|C|-1).
struct Fcbba {
  Frame frame;
  MassMap masses;
  std::optional<std::pair<int, int>> product_dims;
};

Fcbba fcbba(const Cbba& c);

// Exponential negation. For A != empty:
//   neg(A) ∝ sum_{B != frame} exp(-M(B) * |A ∩ complement(B)|)
// normalized by the same double sum over all nonempty A. The sum over B runs
// over the whole power set except the frame itself; include_empty controls
// whether B = empty participates (it contributes the constant exp(0) = 1).
Cbba exp_negation(const Cbba& c, bool include_empty = true);

struct CombineResult {
  Cbba combined;
  Complex conflict;  // K = sum_{A ∩ B = empty} M1(A) M2(B)
};

// Complex evidence combination: M(C) = sum_{A ∩ B = C} M1(A)M2(B) / (1-K).
// Throws TotalConflict when |1-K| < kConflictTolerance, FrameMismatch when
// the operands live on different frames.
CombineResult combine(const Cbba& a, const Cbba& b);

// Joint CBBA on the product frame: M(BxC) = M_x(B) * M_y(C) for every pair of
// stored focal sets; only product-structured sets carry mass. The result is
// tagged with product_dims so downstream fractal operations use the joint rule.
Cbba joint(const Cbba& cx, const Cbba& cy);

// Joint FCBBA computed in the product frame via the joint redistribution rule.
// Satisfies |M_F(BxC)| = |M_F_x(B)| * |M_F_y(C)|.
Fcbba joint_fcbba(const Cbba& cx, const Cbba& cy);

}  // namespace cet
