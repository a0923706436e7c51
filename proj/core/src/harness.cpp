#include "mism/harness.hpp"

#include <algorithm>
#include <numeric>
#include <system_error>

#include "mism/error.hpp"

namespace fs = std::filesystem;

namespace mism {

std::size_t EvalReport::weak_label_count() const noexcept {
  return static_cast<std::size_t>(std::count_if(
      records.begin(), records.end(), [](const EvalRecord& r) { return r.weak_label; }));
}

MetricAggregate aggregate(std::span<const MetricScore> scores) {
  MetricAggregate agg;
  std::vector<double> values;
  values.reserve(scores.size());
  for (const auto& s : scores) {
    if (!s.has_value()) {
      ++agg.count_undefined;
      continue;
    }
    ++agg.count_defined;
    if (s.resolved_from_undefined()) ++agg.count_resolved;
    values.push_back(s.value());
  }
  if (values.empty()) return agg;

  // Summed in the caller's order; callers pass records sorted by id.
  double sum = 0.0;
  for (double v : values) sum += v;
  agg.mean = sum / static_cast<double>(values.size());

  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  agg.median = values.size() % 2 == 1 ? values[mid] : (values[mid - 1] + values[mid]) / 2.0;
  return agg;
}

namespace {

EvalRecord evaluate_pair(const MaskPair& pair, const MetricConfig& cfg,
                         const MetricSelection& selection) {
  EvalRecord record;
  record.id = pair.id();
  record.confusion = confusion_matrix(pair);
  record.scores = evaluate_all(record.confusion, cfg, selection);
  record.weak_label = record.confusion.weak_label();
  return record;
}

void finalize(EvalReport& report) {
  std::stable_sort(report.records.begin(), report.records.end(),
                   [](const EvalRecord& a, const EvalRecord& b) { return a.id < b.id; });
  std::stable_sort(report.errors.begin(), report.errors.end(),
                   [](const PairError& a, const PairError& b) { return a.id < b.id; });
  for (Metric metric : report.selection) {
    std::vector<MetricScore> column;
    column.reserve(report.records.size());
    for (const auto& r : report.records) column.push_back(r.scores.at(metric));
    report.aggregates[metric] = aggregate(column);
  }
}

EvalReport empty_report(const MetricConfig& cfg, const MetricSelection& selection) {
  if (selection.empty()) {
    throw Error(ErrorKind::InvalidArgument, "metric selection must not be empty");
  }
  EvalReport report{{}, {}, {}, cfg, selection};
  return report;
}

}  // namespace

EvalReport evaluate_batch(std::span<const MaskPair> pairs, const MetricConfig& cfg,
                          const MetricSelection& selection) {
  if (pairs.empty()) throw Error(ErrorKind::InvalidArgument, "no mask pairs to evaluate");
  EvalReport report = empty_report(cfg, selection);
  for (const auto& pair : pairs) {
    try {
      report.records.push_back(evaluate_pair(pair, cfg, selection));
    } catch (const Error& e) {
      report.errors.push_back({pair.id(), e.what()});
    }
  }
  finalize(report);
  return report;
}

EvalReport evaluate_batch(std::span<const PairDescriptor> pairs, int threshold,
                          const MetricConfig& cfg, const MetricSelection& selection) {
  if (pairs.empty()) throw Error(ErrorKind::InvalidArgument, "no mask pairs to evaluate");
  EvalReport report = empty_report(cfg, selection);
  for (const auto& descriptor : pairs) {
    try {
      report.records.push_back(evaluate_pair(load_pair(descriptor, threshold), cfg, selection));
    } catch (const Error& e) {
      report.errors.push_back({descriptor.id, e.what()});
    }
  }
  finalize(report);
  return report;
}

// ---------------------------------------------------------------- fixtures

std::string_view fixture_id(FixtureCase c) noexcept {
  switch (c) {
    case FixtureCase::Perfect: return "a_perfect";
    case FixtureCase::PartialOverlap: return "b_partial_overlap";
    case FixtureCase::TotalMiss: return "c_total_miss";
    case FixtureCase::WeakEmpty: return "d_weak_empty";
    case FixtureCase::WeakSmallFp: return "e_weak_small_fp";
    case FixtureCase::WeakLargeFp: return "f_weak_large_fp";
  }
  return "unknown";
}

std::vector<FixtureCase> all_fixture_cases() {
  return {FixtureCase::Perfect,   FixtureCase::PartialOverlap, FixtureCase::TotalMiss,
          FixtureCase::WeakEmpty, FixtureCase::WeakSmallFp,    FixtureCase::WeakLargeFp};
}

namespace {

BinaryMask square(std::size_t size, std::size_t origin, std::size_t side) {
  std::vector<Label> labels(size * size, Label::Background);
  for (std::size_t y = origin; y < std::min(size, origin + side); ++y) {
    for (std::size_t x = origin; x < std::min(size, origin + side); ++x) {
      labels[y * size + x] = Label::Foreground;
    }
  }
  return BinaryMask(size, size, std::move(labels));
}

}  // namespace

MaskPair make_fixture(FixtureCase c, std::size_t size) {
  if (size < kMinFixtureSize) {
    throw Error(ErrorKind::InvalidArgument, "fixture size must be at least " +
                                                std::to_string(kMinFixtureSize) + ", got " +
                                                std::to_string(size));
  }
  // Region of interest: centred square of half the image side.
  const std::size_t roi_origin = size / 4;
  const std::size_t roi_side = size / 2;
  const BinaryMask empty = BinaryMask::filled(size, size);
  const BinaryMask roi = square(size, roi_origin, roi_side);
  const std::string id(fixture_id(c));

  switch (c) {
    case FixtureCase::Perfect:
      return MaskPair(id, roi, roi);
    case FixtureCase::PartialOverlap:
      return MaskPair(id, roi, square(size, roi_origin + size / 8, roi_side));
    case FixtureCase::TotalMiss:
      // Corner block ends at size/8 < size/4, disjoint from the ROI.
      return MaskPair(id, roi, square(size, 0, size / 8));
    case FixtureCase::WeakEmpty:
      return MaskPair(id, empty, empty);
    case FixtureCase::WeakSmallFp:
      return MaskPair(id, empty, square(size, roi_origin, std::max<std::size_t>(1, size / 16)));
    case FixtureCase::WeakLargeFp:
      return MaskPair(id, empty, square(size, roi_origin, roi_side));
  }
  throw Error(ErrorKind::InvalidArgument, "unknown fixture case");
}

std::vector<PairDescriptor> generate_fixture_suite(const fs::path& out_dir, std::size_t size) {
  if (size < kMinFixtureSize) {
    throw Error(ErrorKind::InvalidArgument, "fixture size must be at least " +
                                                std::to_string(kMinFixtureSize) + ", got " +
                                                std::to_string(size));
  }
  const fs::path gt_dir = out_dir / "gt";
  const fs::path pred_dir = out_dir / "pred";
  std::error_code ec;
  fs::create_directories(gt_dir, ec);
  if (!ec) fs::create_directories(pred_dir, ec);
  if (ec) {
    throw Error(ErrorKind::Io, "cannot create fixture directories under '" + out_dir.string() +
                                   "': " + ec.message());
  }

  std::vector<PairDescriptor> descriptors;
  for (FixtureCase c : all_fixture_cases()) {
    const MaskPair pair = make_fixture(c, size);
    PairDescriptor d{pair.id(), gt_dir / (pair.id() + ".png"), pred_dir / (pair.id() + ".png")};
    save_mask_png(d.ground_truth, pair.ground_truth());
    save_mask_png(d.prediction, pair.prediction());
    descriptors.push_back(std::move(d));
  }
  return descriptors;
}

}  // namespace mism
