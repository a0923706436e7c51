#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace mism {

enum class Label : std::uint8_t { Background = 0, Foreground = 1 };

/// A width x height grid of foreground/background labels stored row-major.
/// Immutable once constructed; width and height are always at least 1.
class BinaryMask {
 public:
  BinaryMask(std::size_t width, std::size_t height, std::vector<Label> labels);

  /// All-background mask.
  static BinaryMask filled(std::size_t width, std::size_t height,
                           Label value = Label::Background);

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  std::size_t size() const noexcept { return labels_.size(); }

  std::span<const Label> labels() const noexcept { return labels_; }

  Label at(std::size_t x, std::size_t y) const { return labels_.at(y * width_ + x); }
  bool is_foreground(std::size_t x, std::size_t y) const {
    return at(x, y) == Label::Foreground;
  }

  std::size_t foreground_count() const noexcept;

  /// Copy with every label flipped.
  BinaryMask inverted() const;

  bool same_shape(const BinaryMask& other) const noexcept {
    return width_ == other.width_ && height_ == other.height_;
  }

  std::string shape_string() const;

  friend bool operator==(const BinaryMask&, const BinaryMask&) = default;

 private:
  std::size_t width_;
  std::size_t height_;
  std::vector<Label> labels_;
};

/// Ground truth and prediction for one image, sharing a basename id.
class MaskPair {
 public:
  MaskPair(std::string id, BinaryMask ground_truth, BinaryMask prediction);

  const std::string& id() const noexcept { return id_; }
  const BinaryMask& ground_truth() const noexcept { return ground_truth_; }
  const BinaryMask& prediction() const noexcept { return prediction_; }

 private:
  std::string id_;
  BinaryMask ground_truth_;
  BinaryMask prediction_;
};

}  // namespace mism
