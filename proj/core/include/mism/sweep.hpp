#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mism/metrics.hpp"

namespace mism {

/// Edge-case sweep over the false-positive-to-negative ratio with no actual
/// positives in the ground truth.
struct SweepSpec {
  std::uint64_t total_n = 60000;
  std::uint32_t steps = 101;
  std::vector<double> alphas = {0.05, 0.1, 0.25, 0.5};
  MetricSelection metrics = MetricSelection::comparison_default();

  /// Throws Error(InvalidArgument) describing the first violated constraint.
  void validate() const;
};

struct SweepRow {
  double ratio = 0.0;                 // sampled ratio i / (steps - 1)
  std::optional<double> alpha;        // empty for alpha-free metrics
  Metric metric = Metric::Mism;
  std::optional<double> score;        // empty only under Propagate

  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

/// Rows are grouped into series ordered by (metric, alpha), ratios ascending.
struct SweepTable {
  std::vector<SweepRow> rows;

  struct SeriesKey {
    Metric metric;
    std::optional<double> alpha;
    friend bool operator==(const SeriesKey&, const SeriesKey&) = default;
  };

  /// Series keys in row order.
  std::vector<SeriesKey> series() const;
  std::vector<SweepRow> series_rows(const SeriesKey& key) const;
};

/// FP count realized for a sampled ratio: round(ratio * total_n).
std::uint64_t realized_false_positives(double ratio, std::uint64_t total_n);

/// The metric configuration supplies the undefined policy; alphas come from
/// the spec.  The config's own alpha is not used.
SweepTable run_sweep(const SweepSpec& spec, const MetricConfig& cfg = MetricConfig{});

/// CSV header `ratio,alpha,metric,score`.  Numbers use the shortest decimal
/// form that reads back to the identical double.
void write_sweep_csv(const SweepTable& table, std::ostream& out);
void emit_sweep_csv(const SweepTable& table, const std::filesystem::path& path);
SweepTable read_sweep_csv(std::istream& in);
SweepTable read_sweep_csv(const std::filesystem::path& path);

std::string render_sweep_svg(const SweepTable& table);
void emit_sweep_svg(const SweepTable& table, const std::filesystem::path& path);

std::string series_label(const SweepTable::SeriesKey& key);

}  // namespace mism
