#include "mism/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>

#include "mism/error.hpp"

namespace mism {

std::string_view metric_name(Metric metric) noexcept {
  switch (metric) {
    case Metric::Dsc: return "dsc";
    case Metric::Fpr: return "fpr";
    case Metric::Spec: return "spec";
    case Metric::WSpec: return "wspec";
    case Metric::Acc: return "acc";
    case Metric::Nmcc: return "nmcc";
    case Metric::Mism: return "mism";
  }
  return "?";
}

Metric parse_metric(std::string_view name) {
  for (Metric m : kAllMetrics) {
    if (metric_name(m) == name) return m;
  }
  std::string known;
  for (Metric m : kAllMetrics) {
    if (!known.empty()) known += ", ";
    known += metric_name(m);
  }
  throw Error(ErrorKind::UnknownMetric,
              "unknown metric '" + std::string(name) + "' (known: " + known + ")");
}

bool is_alpha_dependent(Metric metric) noexcept {
  return metric == Metric::WSpec || metric == Metric::Mism;
}

MetricSelection::MetricSelection(std::initializer_list<Metric> metrics) {
  for (Metric m : metrics) insert(m);
}

MetricSelection MetricSelection::parse(std::string_view csv) {
  MetricSelection selection;
  std::size_t start = 0;
  while (start <= csv.size()) {
    std::size_t end = csv.find(',', start);
    if (end == std::string_view::npos) end = csv.size();
    std::string_view token = csv.substr(start, end - start);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (!token.empty()) selection.insert(parse_metric(token));
    start = end + 1;
  }
  if (selection.empty()) {
    throw Error(ErrorKind::InvalidArgument, "metric selection must not be empty");
  }
  return selection;
}

MetricSelection MetricSelection::all() {
  MetricSelection s;
  for (Metric m : kAllMetrics) s.insert(m);
  return s;
}

MetricSelection MetricSelection::comparison_default() {
  return {Metric::Dsc, Metric::Acc, Metric::Spec, Metric::Nmcc, Metric::Mism};
}

void MetricSelection::insert(Metric metric) {
  auto it = std::lower_bound(metrics_.begin(), metrics_.end(), metric);
  if (it == metrics_.end() || *it != metric) metrics_.insert(it, metric);
}

bool MetricSelection::contains(Metric metric) const noexcept {
  return std::binary_search(metrics_.begin(), metrics_.end(), metric);
}

std::string MetricSelection::to_string() const {
  std::string out;
  for (Metric m : metrics_) {
    if (!out.empty()) out += ',';
    out += metric_name(m);
  }
  return out;
}

std::string_view policy_name(UndefinedPolicy policy) noexcept {
  return policy == UndefinedPolicy::ScoreZero ? "zero" : "propagate";
}

UndefinedPolicy parse_policy(std::string_view name) {
  if (name == "zero") return UndefinedPolicy::ScoreZero;
  if (name == "propagate") return UndefinedPolicy::Propagate;
  throw Error(ErrorKind::InvalidArgument,
              "unknown undefined policy '" + std::string(name) + "' (expected zero or propagate)");
}

void MetricConfig::validate_alpha(double alpha) {
  // Written so that NaN fails too.
  if (!(alpha > 0.0 && alpha < 1.0)) {
    std::ostringstream msg;
    msg << "alpha must lie in the open interval (0, 1), got " << alpha;
    throw Error(ErrorKind::InvalidArgument, msg.str());
  }
}

MetricConfig::MetricConfig(double alpha, UndefinedPolicy policy)
    : alpha_(alpha), policy_(policy) {
  validate_alpha(alpha);
}

double MetricScore::value() const {
  if (state_ == State::Undefined) throw std::bad_optional_access();
  return value_;
}

namespace {

double as_real(std::uint64_t v) { return static_cast<double>(v); }

// Shared by dsc() and the P > 0 branch of mism() so the two agree bit for bit.
std::optional<double> dice_ratio(const ConfusionMatrix& m) {
  const std::uint64_t denom = 2 * m.tp + m.fp + m.fn;
  if (denom == 0) return std::nullopt;
  return as_real(2 * m.tp) / as_real(denom);
}

// Shared by weighted_specificity() and the P = 0 branch of mism().
std::optional<double> weighted_tn_ratio(const ConfusionMatrix& m, double alpha) {
  if (m.negatives() == 0) return std::nullopt;
  const double weighted_tn = alpha * as_real(m.tn);
  return weighted_tn / ((1.0 - alpha) * as_real(m.fp) + weighted_tn);
}

MetricScore from_optional(Metric metric, std::optional<double> v, UndefinedPolicy policy) {
  return v ? MetricScore::defined(metric, *v) : MetricScore::undefined(metric, policy);
}

}  // namespace

MetricScore dsc(const ConfusionMatrix& m, const MetricConfig& cfg) {
  return from_optional(Metric::Dsc, dice_ratio(m), cfg.undefined_policy());
}

MetricScore fpr(const ConfusionMatrix& m) {
  if (m.negatives() == 0) return MetricScore::undefined(Metric::Fpr, UndefinedPolicy::Propagate);
  return MetricScore::defined(Metric::Fpr, as_real(m.fp) / as_real(m.negatives()));
}

MetricScore specificity(const ConfusionMatrix& m, const MetricConfig& cfg) {
  if (m.negatives() == 0) return MetricScore::undefined(Metric::Spec, cfg.undefined_policy());
  return MetricScore::defined(Metric::Spec, as_real(m.tn) / as_real(m.negatives()));
}

MetricScore weighted_specificity(const ConfusionMatrix& m, const MetricConfig& cfg) {
  return from_optional(Metric::WSpec, weighted_tn_ratio(m, cfg.alpha()), cfg.undefined_policy());
}

MetricScore accuracy(const ConfusionMatrix& m) {
  if (m.total() == 0) return MetricScore::undefined(Metric::Acc, UndefinedPolicy::Propagate);
  return MetricScore::defined(Metric::Acc, as_real(m.tp + m.tn) / as_real(m.total()));
}

double mcc(const ConfusionMatrix& m) {
  const double pred_pos = as_real(m.tp + m.fp);
  const double actual_pos = as_real(m.tp + m.fn);
  const double actual_neg = as_real(m.tn + m.fp);
  const double pred_neg = as_real(m.tn + m.fn);
  if (pred_pos == 0.0 || actual_pos == 0.0 || actual_neg == 0.0 || pred_neg == 0.0) {
    return 0.0;
  }
  const double numerator = as_real(m.tp) * as_real(m.tn) - as_real(m.fp) * as_real(m.fn);
  const double denominator = std::sqrt(pred_pos * actual_pos) * std::sqrt(actual_neg * pred_neg);
  return std::clamp(numerator / denominator, -1.0, 1.0);
}

MetricScore nmcc(const ConfusionMatrix& m) {
  return MetricScore::defined(Metric::Nmcc, (mcc(m) + 1.0) / 2.0);
}

MetricScore mism(const ConfusionMatrix& m, const MetricConfig& cfg) {
  const auto v = m.positives() > 0 ? dice_ratio(m) : weighted_tn_ratio(m, cfg.alpha());
  return from_optional(Metric::Mism, v, cfg.undefined_policy());
}

MetricScore evaluate(Metric metric, const ConfusionMatrix& m, const MetricConfig& cfg) {
  switch (metric) {
    case Metric::Dsc: return dsc(m, cfg);
    case Metric::Fpr: return fpr(m);
    case Metric::Spec: return specificity(m, cfg);
    case Metric::WSpec: return weighted_specificity(m, cfg);
    case Metric::Acc: return accuracy(m);
    case Metric::Nmcc: return nmcc(m);
    case Metric::Mism: return mism(m, cfg);
  }
  throw Error(ErrorKind::UnknownMetric, "unknown metric");
}

ScoreMap evaluate_all(const ConfusionMatrix& m, const MetricConfig& cfg,
                      const MetricSelection& selection) {
  if (selection.empty()) {
    throw Error(ErrorKind::InvalidArgument, "metric selection must not be empty");
  }
  ScoreMap scores;
  for (Metric metric : selection) scores.emplace(metric, evaluate(metric, m, cfg));
  return scores;
}

ScoreMap evaluate_all(const ConfusionMatrix& m, const MetricConfig& cfg,
                      std::span<const std::string> selection) {
  MetricSelection parsed;
  for (const auto& name : selection) parsed.insert(parse_metric(name));
  return evaluate_all(m, cfg, parsed);
}

}  // namespace mism
