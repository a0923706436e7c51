#include "mism/binary_mask.hpp"

#include <algorithm>
#include <utility>

#include "mism/error.hpp"

namespace mism {

BinaryMask::BinaryMask(std::size_t width, std::size_t height, std::vector<Label> labels)
    : width_(width), height_(height), labels_(std::move(labels)) {
  if (width_ == 0 || height_ == 0) {
    throw Error(ErrorKind::EmptyMask,
                "mask must be at least 1x1, got " + shape_string());
  }
  if (labels_.size() != width_ * height_) {
    throw Error(ErrorKind::InvalidArgument,
                "mask " + shape_string() + " needs " + std::to_string(width_ * height_) +
                    " labels, got " + std::to_string(labels_.size()));
  }
}

BinaryMask BinaryMask::filled(std::size_t width, std::size_t height, Label value) {
  return BinaryMask(width, height, std::vector<Label>(width * height, value));
}

std::size_t BinaryMask::foreground_count() const noexcept {
  return static_cast<std::size_t>(
      std::count(labels_.begin(), labels_.end(), Label::Foreground));
}

BinaryMask BinaryMask::inverted() const {
  std::vector<Label> flipped(labels_.size());
  std::transform(labels_.begin(), labels_.end(), flipped.begin(), [](Label l) {
    return l == Label::Foreground ? Label::Background : Label::Foreground;
  });
  return BinaryMask(width_, height_, std::move(flipped));
}

std::string BinaryMask::shape_string() const {
  return std::to_string(width_) + "x" + std::to_string(height_);
}

MaskPair::MaskPair(std::string id, BinaryMask ground_truth, BinaryMask prediction)
    : id_(std::move(id)),
      ground_truth_(std::move(ground_truth)),
      prediction_(std::move(prediction)) {
  if (!ground_truth_.same_shape(prediction_)) {
    throw Error(ErrorKind::DimensionMismatch,
                "pair '" + id_ + "': ground truth is " + ground_truth_.shape_string() +
                    " but prediction is " + prediction_.shape_string());
  }
}

}  // namespace mism
