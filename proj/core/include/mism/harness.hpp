#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mism/binary_mask.hpp"
#include "mism/confusion.hpp"
#include "mism/mask_io.hpp"
#include "mism/metrics.hpp"

namespace mism {

struct EvalRecord {
  std::string id;
  ConfusionMatrix confusion;
  ScoreMap scores;
  bool weak_label = false;  // confusion.positives() == 0
};

struct PairError {
  std::string id;
  std::string message;

  friend bool operator==(const PairError&, const PairError&) = default;
};

struct MetricAggregate {
  std::optional<double> mean;    // empty when no defined score exists
  std::optional<double> median;
  std::size_t count_defined = 0;
  std::size_t count_undefined = 0;
  /// Subset of count_defined that came from a zero denominator scored as 0.
  std::size_t count_resolved = 0;
};

struct EvalReport {
  std::vector<EvalRecord> records;  // sorted by id
  std::map<Metric, MetricAggregate> aggregates;
  std::vector<PairError> errors;    // sorted by id
  MetricConfig config;
  MetricSelection selection;

  std::size_t weak_label_count() const noexcept;
};

/// Sorted-by-id records and aggregates; output does not depend on input order.
/// Throws Error(InvalidArgument) on an empty pair list.
EvalReport evaluate_batch(std::span<const MaskPair> pairs, const MetricConfig& cfg,
                          const MetricSelection& selection);

/// Loads each pair from disk.  Load failures become report errors instead of
/// aborting the batch.
EvalReport evaluate_batch(std::span<const PairDescriptor> pairs, int threshold,
                          const MetricConfig& cfg, const MetricSelection& selection);

/// Aggregates over the defined scores; even counts take the mean of the two
/// central values for the median.
MetricAggregate aggregate(std::span<const MetricScore> scores);

enum class FixtureCase {
  Perfect,        // (a)
  PartialOverlap, // (b)
  TotalMiss,      // (c)
  WeakEmpty,      // (d)
  WeakSmallFp,    // (e)
  WeakLargeFp,    // (f)
};

inline constexpr std::size_t kMinFixtureSize = 16;

std::string_view fixture_id(FixtureCase c) noexcept;
std::vector<FixtureCase> all_fixture_cases();

/// In-memory geometry of one case.  Deterministic in size.
MaskPair make_fixture(FixtureCase c, std::size_t size);

/// Writes <out_dir>/gt/<id>.png and <out_dir>/pred/<id>.png for each case.
std::vector<PairDescriptor> generate_fixture_suite(const std::filesystem::path& out_dir,
                                                   std::size_t size);

}  // namespace mism
