#pragma once

#include <cstdint>
#include <string>

#include "mism/binary_mask.hpp"

namespace mism {

/// Binary confusion counts. P = tp + fn, N = fp + tn.
struct ConfusionMatrix {
  std::uint64_t tp = 0;
  std::uint64_t fp = 0;
  std::uint64_t tn = 0;
  std::uint64_t fn = 0;

  std::uint64_t positives() const noexcept { return tp + fn; }
  std::uint64_t negatives() const noexcept { return fp + tn; }
  std::uint64_t total() const noexcept { return tp + fp + tn + fn; }

  bool weak_label() const noexcept { return positives() == 0; }

  friend bool operator==(const ConfusionMatrix&, const ConfusionMatrix&) = default;
};

std::string to_string(const ConfusionMatrix& m);

/// Throws Error(DimensionMismatch) when the masks differ in shape.
ConfusionMatrix confusion_matrix(const BinaryMask& gt, const BinaryMask& pred);

inline ConfusionMatrix confusion_matrix(const MaskPair& pair) {
  return confusion_matrix(pair.ground_truth(), pair.prediction());
}

}  // namespace mism
