#include "cet/frame.hpp"

#include <algorithm>
#include <unordered_set>

namespace cet {

Frame::Frame(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty() || labels_.size() > static_cast<size_t>(kMaxFrameSize)) {
    fail(Errc::InvalidFrame, "frame size must be in [1, " +
                                 std::to_string(kMaxFrameSize) + "], got " +
                                 std::to_string(labels_.size()));
  }
  std::unordered_set<std::string> seen;
  for (const auto& l : labels_) {
    if (l.empty()) fail(Errc::InvalidFrame, "frame labels must be non-empty");
    if (!seen.insert(l).second) {
      fail(Errc::InvalidFrame, "duplicate frame label '" + l + "'");
    }
  }
}

int Frame::index_of(const std::string& label) const noexcept {
  for (size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return static_cast<int>(i);
  }
  return -1;
}

namespace focal {

FocalSet complement(FocalSet s, const Frame& frame) {
  if (!frame.contains(s)) {
    fail(Errc::InvalidArgument, "focal set has bits outside the frame");
  }
  return frame.full_set() & ~s;
}

std::vector<FocalSet> strict_supersets(FocalSet s, const Frame& frame) {
  if (s == 0) fail(Errc::EmptyFocal, "strict_supersets of the empty set");
  if (!frame.contains(s)) {
    fail(Errc::InvalidArgument, "focal set has bits outside the frame");
  }
  if (frame.size() > kMaxEnumerationSize) {
    fail(Errc::FrameTooLarge, "superset enumeration requires frame size <= " +
                                  std::to_string(kMaxEnumerationSize));
  }
  const FocalSet rest = frame.full_set() & ~s;
  std::vector<FocalSet> out;
  // Nonempty subsets u of the complement, descending; s|u ascends after reverse.
  for (FocalSet u = rest; u != 0; u = (u - 1) & rest) {
    out.push_back(s | u);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<FocalSet> nonempty_subsets(FocalSet s) {
  std::vector<FocalSet> out;
  for (FocalSet u = s; u != 0; u = (u - 1) & s) {
    out.push_back(u);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::string to_string(FocalSet s, const Frame& frame) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < frame.size(); ++i) {
    if (s & singleton(i)) {
      if (!first) out += ",";
      out += frame.label(i);
      first = false;
    }
  }
  out += "}";
  return out;
}

}  // namespace focal

FocalSet intersect(const Frame& fa, FocalSet a, const Frame& fb, FocalSet b) {
  if (fa != fb) fail(Errc::FrameMismatch, "focal sets live on different frames");
  if (!fa.contains(a) || !fb.contains(b)) {
    fail(Errc::InvalidArgument, "focal set has bits outside the frame");
  }
  return a & b;
}

Frame product_frame(const Frame& x, const Frame& y) {
  const long total = static_cast<long>(x.size()) * y.size();
  if (total > kMaxFrameSize) {
    fail(Errc::FrameTooLarge, "product frame would have " +
                                  std::to_string(total) + " elements (cap " +
                                  std::to_string(kMaxFrameSize) + ")");
  }
  std::vector<std::string> labels;
  labels.reserve(static_cast<size_t>(total));
  for (int i = 0; i < x.size(); ++i) {
    for (int j = 0; j < y.size(); ++j) {
      labels.push_back("(" + x.label(i) + "," + y.label(j) + ")");
    }
  }
  return Frame(std::move(labels));
}

namespace product {

FocalSet compose(FocalSet rows, FocalSet cols, int n_cols) noexcept {
  FocalSet bits = 0;
  for (int i = 0; rows >> i; ++i) {
    if (rows & focal::singleton(i)) {
      bits |= cols << (i * n_cols);
    }
  }
  return bits;
}

Decomposition decompose(FocalSet bits, int n_rows, int n_cols) noexcept {
  Decomposition d;
  for (int i = 0; i < n_rows; ++i) {
    for (int j = 0; j < n_cols; ++j) {
      if (bits & focal::singleton(i * n_cols + j)) {
        d.rows |= focal::singleton(i);
        d.cols |= focal::singleton(j);
      }
    }
  }
  d.exact = compose(d.rows, d.cols, n_cols) == bits;
  return d;
}

}  // namespace product

}  // namespace cet
