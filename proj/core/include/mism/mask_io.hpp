#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "mism/binary_mask.hpp"

namespace mism {

inline constexpr int kDefaultThreshold = 1;

/// 8-bit single-channel raster as decoded from disk. RGB sources are already
/// reduced to their per-pixel maximum channel.
struct GrayImage {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<std::uint8_t> pixels;
};

enum class ImageFormat { Png, Pgm };

/// Sniffs the file signature; extension is ignored.
ImageFormat detect_format(const std::filesystem::path& path);

GrayImage read_gray_image(const std::filesystem::path& path);

/// Reads only the header. Used to validate pairings without decoding pixels.
struct ImageShape {
  std::size_t width = 0;
  std::size_t height = 0;
};
ImageShape read_image_shape(const std::filesystem::path& path);

/// value >= threshold is foreground.
BinaryMask binarize(const GrayImage& image, int threshold = kDefaultThreshold);

BinaryMask load_mask(const std::filesystem::path& path,
                     int threshold = kDefaultThreshold);

void write_png(const std::filesystem::path& path, const GrayImage& image);

/// Foreground as 255, background as 0, 8-bit grayscale.
void save_mask_png(const std::filesystem::path& path, const BinaryMask& mask);

struct PairDescriptor {
  std::string id;
  std::filesystem::path ground_truth;
  std::filesystem::path prediction;

  friend bool operator==(const PairDescriptor&, const PairDescriptor&) = default;
};

struct Pairing {
  std::vector<PairDescriptor> pairs;  // sorted by id
  std::vector<std::filesystem::path> unmatched_ground_truth;
  std::vector<std::filesystem::path> unmatched_prediction;

  bool has_unmatched() const noexcept {
    return !unmatched_ground_truth.empty() || !unmatched_prediction.empty();
  }
};

/// Matches regular files in the two directories by basename without
/// extension (case-insensitive extension). Throws on a dimension mismatch
/// within a pair or when no basenames are shared. Files whose header cannot
/// be read are still paired; the load step reports them.
Pairing pair_directories(const std::filesystem::path& gt_dir,
                         const std::filesystem::path& pred_dir);

MaskPair load_pair(const PairDescriptor& descriptor,
                   int threshold = kDefaultThreshold);

}  // namespace mism
