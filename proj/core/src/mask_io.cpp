#include "mism/mask_io.hpp"

#include <png.h>

#include <algorithm>
#include <array>
#include <cctype>
#include <cstring>
#include <fstream>
#include <iterator>
#include <map>
#include <system_error>

#include "mism/error.hpp"

namespace fs = std::filesystem;

namespace mism {
namespace {

constexpr std::array<unsigned char, 8> kPngSignature = {0x89, 'P', 'N', 'G',
                                                        '\r', '\n', 0x1a, '\n'};

std::string quoted(const fs::path& path) { return "'" + path.string() + "'"; }

std::ifstream open_binary(const fs::path& path) {
  std::error_code ec;
  if (!fs::is_regular_file(path, ec)) {
    throw Error(ErrorKind::FileNotFound, "no such file: " + quoted(path));
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::Io, "cannot open " + quoted(path));
  }
  return in;
}

// ---------------------------------------------------------------- PGM (P5)

struct PgmHeader {
  std::size_t width = 0;
  std::size_t height = 0;
  unsigned maxval = 0;
};

// Reads the next whitespace-delimited header token, skipping '#' comments.
std::string next_token(std::istream& in, const fs::path& path) {
  std::string token;
  int c = in.get();
  while (c != EOF) {
    if (c == '#') {
      while (c != EOF && c != '\n' && c != '\r') c = in.get();
    } else if (std::isspace(c)) {
      c = in.get();
    } else {
      break;
    }
  }
  while (c != EOF && !std::isspace(c) && c != '#') {
    token.push_back(static_cast<char>(c));
    c = in.get();
  }
  if (c == '#') in.unget();
  if (token.empty()) {
    throw Error(ErrorKind::UnsupportedFormat, "truncated PGM header in " + quoted(path));
  }
  return token;
}

std::size_t parse_header_number(const std::string& token, const fs::path& path) {
  if (!std::all_of(token.begin(), token.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }) ||
      token.size() > 9) {
    throw Error(ErrorKind::UnsupportedFormat,
                "bad PGM header field '" + token + "' in " + quoted(path));
  }
  return static_cast<std::size_t>(std::stoul(token));
}

// Leaves the stream positioned at the first raster byte.
PgmHeader read_pgm_header(std::istream& in, const fs::path& path) {
  char magic[2] = {};
  in.read(magic, 2);
  if (!in || magic[0] != 'P' || magic[1] != '5') {
    throw Error(ErrorKind::UnsupportedFormat, "not a binary PGM (P5): " + quoted(path));
  }
  PgmHeader h;
  h.width = parse_header_number(next_token(in, path), path);
  h.height = parse_header_number(next_token(in, path), path);
  const std::size_t maxval = parse_header_number(next_token(in, path), path);
  if (maxval == 0 || maxval > 65535) {
    throw Error(ErrorKind::UnsupportedFormat,
                "PGM maxval out of range in " + quoted(path));
  }
  h.maxval = static_cast<unsigned>(maxval);
  // next_token consumed exactly one whitespace byte after maxval.
  return h;
}

GrayImage read_pgm(const fs::path& path) {
  auto in = open_binary(path);
  const PgmHeader h = read_pgm_header(in, path);
  const std::size_t count = h.width * h.height;
  const std::size_t bytes_per_sample = h.maxval > 255 ? 2 : 1;
  std::vector<unsigned char> raw(count * bytes_per_sample);
  in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
  if (static_cast<std::size_t>(in.gcount()) != raw.size()) {
    throw Error(ErrorKind::UnsupportedFormat, "truncated PGM raster in " + quoted(path));
  }

  GrayImage image{h.width, h.height, std::vector<std::uint8_t>(count)};
  for (std::size_t i = 0; i < count; ++i) {
    unsigned v = bytes_per_sample == 2 ? (unsigned{raw[2 * i]} << 8) | raw[2 * i + 1]
                                       : unsigned{raw[i]};
    if (v > h.maxval) v = h.maxval;
    image.pixels[i] = h.maxval == 255
                          ? static_cast<std::uint8_t>(v)
                          : static_cast<std::uint8_t>((v * 255u + h.maxval / 2) / h.maxval);
  }
  return image;
}

// ---------------------------------------------------------------- PNG

// RAII wrapper over libpng's simplified API.
class PngReader {
 public:
  explicit PngReader(const fs::path& path) : path_(path) {
    std::memset(&image_, 0, sizeof(image_));
    image_.version = PNG_IMAGE_VERSION;
    if (png_image_begin_read_from_file(&image_, path.string().c_str()) == 0) {
      fail();
    }
  }
  ~PngReader() { png_image_free(&image_); }
  PngReader(const PngReader&) = delete;
  PngReader& operator=(const PngReader&) = delete;

  png_image& image() { return image_; }

  [[noreturn]] void fail() {
    throw Error(ErrorKind::UnsupportedFormat,
                "cannot decode PNG " + quoted(path_) + ": " + image_.message);
  }

 private:
  fs::path path_;
  png_image image_;
};

GrayImage read_png(const fs::path& path) {
  open_binary(path);  // surfaces file-not-found before libpng does
  PngReader reader(path);
  png_image& image = reader.image();

  // 8-bit sRGB output in the file's own channel layout; alpha is ignored.
  image.format &= ~(PNG_FORMAT_FLAG_LINEAR | PNG_FORMAT_FLAG_COLORMAP);
  const bool color = (image.format & PNG_FORMAT_FLAG_COLOR) != 0;
  const std::size_t channels = PNG_IMAGE_PIXEL_CHANNELS(image.format);
  const std::size_t width = image.width;
  const std::size_t height = image.height;

  std::vector<png_byte> buffer(PNG_IMAGE_SIZE(image));
  if (png_image_finish_read(&image, nullptr, buffer.data(), 0, nullptr) == 0) {
    reader.fail();
  }

  GrayImage out{width, height, std::vector<std::uint8_t>(width * height)};
  for (std::size_t i = 0; i < out.pixels.size(); ++i) {
    const png_byte* px = buffer.data() + i * channels;
    out.pixels[i] = color ? std::max({px[0], px[1], px[2]}) : px[0];
  }
  return out;
}

ImageShape read_png_shape(const fs::path& path) {
  open_binary(path);
  PngReader reader(path);
  return {reader.image().width, reader.image().height};
}

}  // namespace

ImageFormat detect_format(const fs::path& path) {
  auto in = open_binary(path);
  std::array<unsigned char, 8> head{};
  in.read(reinterpret_cast<char*>(head.data()), head.size());
  const auto got = static_cast<std::size_t>(in.gcount());
  if (got == head.size() && head == kPngSignature) return ImageFormat::Png;
  if (got >= 2 && head[0] == 'P' && head[1] == '5') return ImageFormat::Pgm;
  throw Error(ErrorKind::UnsupportedFormat,
              "unsupported image format (expected PNG or binary PGM): " + quoted(path));
}

GrayImage read_gray_image(const fs::path& path) {
  GrayImage image = detect_format(path) == ImageFormat::Png ? read_png(path) : read_pgm(path);
  if (image.width == 0 || image.height == 0) {
    throw Error(ErrorKind::EmptyMask, "zero-area image: " + quoted(path));
  }
  return image;
}

ImageShape read_image_shape(const fs::path& path) {
  if (detect_format(path) == ImageFormat::Png) return read_png_shape(path);
  auto in = open_binary(path);
  const PgmHeader h = read_pgm_header(in, path);
  return {h.width, h.height};
}

BinaryMask binarize(const GrayImage& image, int threshold) {
  if (threshold < 0 || threshold > 255) {
    throw Error(ErrorKind::InvalidArgument,
                "threshold must be in [0, 255], got " + std::to_string(threshold));
  }
  std::vector<Label> labels(image.pixels.size());
  std::transform(image.pixels.begin(), image.pixels.end(), labels.begin(),
                 [threshold](std::uint8_t v) {
                   return v >= threshold ? Label::Foreground : Label::Background;
                 });
  return BinaryMask(image.width, image.height, std::move(labels));
}

BinaryMask load_mask(const fs::path& path, int threshold) {
  if (threshold < 0 || threshold > 255) {
    throw Error(ErrorKind::InvalidArgument,
                "threshold must be in [0, 255], got " + std::to_string(threshold));
  }
  return binarize(read_gray_image(path), threshold);
}

void write_png(const fs::path& path, const GrayImage& image) {
  if (image.width == 0 || image.height == 0 ||
      image.pixels.size() != image.width * image.height) {
    throw Error(ErrorKind::InvalidArgument, "cannot write malformed image to " + quoted(path));
  }
  png_image out;
  std::memset(&out, 0, sizeof(out));
  out.version = PNG_IMAGE_VERSION;
  out.width = static_cast<png_uint_32>(image.width);
  out.height = static_cast<png_uint_32>(image.height);
  out.format = PNG_FORMAT_GRAY;
  const int ok = png_image_write_to_file(&out, path.string().c_str(), 0,
                                         image.pixels.data(), 0, nullptr);
  const std::string message = out.message;
  png_image_free(&out);
  if (ok == 0) {
    throw Error(ErrorKind::Io, "cannot write PNG " + quoted(path) + ": " + message);
  }
}

void save_mask_png(const fs::path& path, const BinaryMask& mask) {
  GrayImage image{mask.width(), mask.height(), {}};
  image.pixels.reserve(mask.size());
  for (Label l : mask.labels()) {
    image.pixels.push_back(l == Label::Foreground ? 255 : 0);
  }
  write_png(path, image);
}

namespace {

std::map<std::string, fs::path> index_by_basename(const fs::path& dir) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    throw Error(ErrorKind::FileNotFound, "no such directory: " + quoted(dir));
  }
  std::map<std::string, fs::path> index;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    const std::string key = entry.path().stem().string();
    auto [it, inserted] = index.emplace(key, entry.path());
    if (!inserted) {
      // Deterministic message regardless of directory iteration order.
      const auto [first, second] = std::minmax(it->second, entry.path());
      throw Error(ErrorKind::InvalidArgument,
                  "ambiguous basename '" + key + "' in " + quoted(dir) + ": " +
                      first.filename().string() + " and " + second.filename().string());
    }
  }
  return index;
}

}  // namespace

Pairing pair_directories(const fs::path& gt_dir, const fs::path& pred_dir) {
  const auto gt = index_by_basename(gt_dir);
  const auto pred = index_by_basename(pred_dir);

  Pairing result;
  for (const auto& [id, gt_path] : gt) {
    auto it = pred.find(id);
    if (it == pred.end()) {
      result.unmatched_ground_truth.push_back(gt_path);
      continue;
    }
    result.pairs.push_back({id, gt_path, it->second});
  }
  for (const auto& [id, pred_path] : pred) {
    if (!gt.contains(id)) result.unmatched_prediction.push_back(pred_path);
  }
  if (result.pairs.empty()) {
    throw Error(ErrorKind::NoMatchingPairs, "no shared basenames between " +
                                                quoted(gt_dir) + " and " + quoted(pred_dir));
  }

  for (const auto& pair : result.pairs) {
    ImageShape g, p;
    try {
      g = read_image_shape(pair.ground_truth);
      p = read_image_shape(pair.prediction);
    } catch (const Error&) {
      continue;  // unreadable header; load_pair reports it per pair
    }
    if (g.width != p.width || g.height != p.height) {
      throw Error(ErrorKind::DimensionMismatch,
                  "pair '" + pair.id + "': ground truth is " + std::to_string(g.width) + "x" +
                      std::to_string(g.height) + " but prediction is " +
                      std::to_string(p.width) + "x" + std::to_string(p.height));
    }
  }
  return result;
}

MaskPair load_pair(const PairDescriptor& descriptor, int threshold) {
  return MaskPair(descriptor.id, load_mask(descriptor.ground_truth, threshold),
                  load_mask(descriptor.prediction, threshold));
}

}  // namespace mism
