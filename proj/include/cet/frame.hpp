#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "cet/errors.hpp"

namespace cet {

// Focal sets are bitmasks over the positions of a frame of discernment.
using FocalSet = std::uint32_t;

inline constexpr int kMaxFrameSize = 24;        // bitmask encoding bound
inline constexpr int kMaxEnumerationSize = 16;  // bound for full power-set walks

// Ordered set of mutually exclusive, uniquely labeled elements.
class Frame {
 public:
  Frame() = default;
  // Throws InvalidFrame on empty/duplicate labels or size outside [1, 24].
  explicit Frame(std::vector<std::string> labels);

  int size() const noexcept { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(int i) const { return labels_.at(static_cast<size_t>(i)); }

  FocalSet full_set() const noexcept {
    return (FocalSet{1} << labels_.size()) - 1;
  }
  bool contains(FocalSet s) const noexcept { return (s & ~full_set()) == 0; }
  // -1 when the label is not an element of the frame.
  int index_of(const std::string& label) const noexcept;

  bool operator==(const Frame&) const = default;

 private:
  std::vector<std::string> labels_;
};

namespace focal {

inline int cardinality(FocalSet s) noexcept { return std::popcount(s); }
inline FocalSet intersect(FocalSet a, FocalSet b) noexcept { return a & b; }
inline bool subset_of(FocalSet a, FocalSet b) noexcept { return (a & b) == a; }
inline FocalSet singleton(int i) noexcept { return FocalSet{1} << i; }

FocalSet complement(FocalSet s, const Frame& frame);

// Every B with s ⊂ B ⊆ frame, in ascending bitmask order.
// Throws EmptyFocal when s is empty.
std::vector<FocalSet> strict_supersets(FocalSet s, const Frame& frame);

// All nonempty subsets of s in ascending bitmask order.
std::vector<FocalSet> nonempty_subsets(FocalSet s);

// "{e1,e3}" using the frame's labels, ascending positions.
std::string to_string(FocalSet s, const Frame& frame);

}  // namespace focal

// Frame-checked intersection; throws FrameMismatch when the frames differ.
FocalSet intersect(const Frame& fa, FocalSet a, const Frame& fb, FocalSet b);

// Cartesian product frame with pair labels "(x,y)" in row-major order.
// Throws FrameTooLarge when |x|*|y| exceeds the bitmask bound.
Frame product_frame(const Frame& x, const Frame& y);

namespace product {

// Pairing convention: element (i, j) of a product frame occupies bit i*cols + j.
FocalSet compose(FocalSet rows, FocalSet cols, int n_cols) noexcept;

struct Decomposition {
  FocalSet rows = 0;
  FocalSet cols = 0;
  bool exact = false;  // true iff the input equals rows x cols
};
Decomposition decompose(FocalSet bits, int n_rows, int n_cols) noexcept;

}  // namespace product

}  // namespace cet
