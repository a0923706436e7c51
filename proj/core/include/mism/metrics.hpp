#pragma once

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mism/confusion.hpp"

namespace mism {

/// Canonical order; reports and score maps iterate in this order.
enum class Metric { Dsc, Fpr, Spec, WSpec, Acc, Nmcc, Mism };

inline constexpr std::array<Metric, 7> kAllMetrics = {
    Metric::Dsc, Metric::Fpr,  Metric::Spec, Metric::WSpec,
    Metric::Acc, Metric::Nmcc, Metric::Mism};

std::string_view metric_name(Metric metric) noexcept;

/// Throws Error(UnknownMetric).
Metric parse_metric(std::string_view name);

/// True for metrics whose value depends on the weighting coefficient.
bool is_alpha_dependent(Metric metric) noexcept;

/// Ordered, duplicate-free set of metrics.
class MetricSelection {
 public:
  MetricSelection() = default;
  MetricSelection(std::initializer_list<Metric> metrics);

  /// Comma-separated identifiers, e.g. "dsc,acc,spec,nmcc,mism".
  static MetricSelection parse(std::string_view csv);
  static MetricSelection all();

  /// dsc, acc, spec, nmcc, mism
  static MetricSelection comparison_default();

  void insert(Metric metric);
  bool contains(Metric metric) const noexcept;
  bool empty() const noexcept { return metrics_.empty(); }
  std::size_t size() const noexcept { return metrics_.size(); }

  auto begin() const noexcept { return metrics_.begin(); }
  auto end() const noexcept { return metrics_.end(); }

  std::string to_string() const;

  friend bool operator==(const MetricSelection&, const MetricSelection&) = default;

 private:
  std::vector<Metric> metrics_;
};

enum class UndefinedPolicy {
  /// Zero-denominator expressions score 0.0 and are flagged as resolved.
  ScoreZero,
  /// Zero-denominator expressions stay undefined.
  Propagate,
};

std::string_view policy_name(UndefinedPolicy policy) noexcept;
UndefinedPolicy parse_policy(std::string_view name);

inline constexpr double kDefaultAlpha = 0.1;

class MetricConfig {
 public:
  /// Throws Error(InvalidArgument) unless 0 < alpha < 1.
  explicit MetricConfig(double alpha = kDefaultAlpha,
                        UndefinedPolicy policy = UndefinedPolicy::ScoreZero);

  double alpha() const noexcept { return alpha_; }
  UndefinedPolicy undefined_policy() const noexcept { return policy_; }

  static void validate_alpha(double alpha);

  friend bool operator==(const MetricConfig&, const MetricConfig&) = default;

 private:
  double alpha_;
  UndefinedPolicy policy_;
};

/// A metric value, or the record that the expression had a zero denominator.
class MetricScore {
 public:
  enum class State {
    Defined,
    /// Zero denominator mapped to 0.0 under UndefinedPolicy::ScoreZero.
    ResolvedZero,
    Undefined,
  };

  static MetricScore defined(Metric metric, double value) {
    return {metric, State::Defined, value};
  }
  static MetricScore undefined(Metric metric, UndefinedPolicy policy) {
    return policy == UndefinedPolicy::ScoreZero
               ? MetricScore{metric, State::ResolvedZero, 0.0}
               : MetricScore{metric, State::Undefined, 0.0};
  }

  Metric metric() const noexcept { return metric_; }
  State state() const noexcept { return state_; }

  bool has_value() const noexcept { return state_ != State::Undefined; }
  bool resolved_from_undefined() const noexcept {
    return state_ == State::ResolvedZero;
  }
  /// Throws std::bad_optional_access when undefined.
  double value() const;
  std::optional<double> value_or_none() const noexcept {
    return has_value() ? std::optional<double>(value_) : std::nullopt;
  }

  friend bool operator==(const MetricScore&, const MetricScore&) = default;

 private:
  MetricScore(Metric metric, State state, double value)
      : metric_(metric), state_(state), value_(value) {}

  Metric metric_;
  State state_;
  double value_;
};

MetricScore dsc(const ConfusionMatrix& m, const MetricConfig& cfg = MetricConfig{});

/// Undefined when N = 0, independent of policy.
MetricScore fpr(const ConfusionMatrix& m);

MetricScore specificity(const ConfusionMatrix& m, const MetricConfig& cfg = MetricConfig{});

/// alpha*TN / ((1 - alpha)*FP + alpha*TN)
MetricScore weighted_specificity(const ConfusionMatrix& m, const MetricConfig& cfg = MetricConfig{});

MetricScore accuracy(const ConfusionMatrix& m);

/// Matthews correlation coefficient.  A zero factor in the denominator
/// yields MCC = 0 by convention.
double mcc(const ConfusionMatrix& m);

/// (MCC + 1) / 2.  Chance-level agreement maps to 0.5.
MetricScore nmcc(const ConfusionMatrix& m);

/// DSC when the ground truth has any foreground, weighted specificity
/// otherwise.  Defined for every non-empty matrix.
MetricScore mism(const ConfusionMatrix& m, const MetricConfig& cfg = MetricConfig{});

MetricScore evaluate(Metric metric, const ConfusionMatrix& m, const MetricConfig& cfg);

using ScoreMap = std::map<Metric, MetricScore>;

/// Throws Error(InvalidArgument) on an empty selection.
ScoreMap evaluate_all(const ConfusionMatrix& m, const MetricConfig& cfg,
                      const MetricSelection& selection);

/// Identifier-based overload; throws Error(UnknownMetric).
ScoreMap evaluate_all(const ConfusionMatrix& m, const MetricConfig& cfg,
                      std::span<const std::string> selection);

}  // namespace mism
