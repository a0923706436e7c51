#include "mism/report.hpp"

#include <fstream>
#include <json.hpp>
#include <ostream>

#include "mism/error.hpp"
#include "number_format.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace mism {

ReportFormat parse_report_format(std::string_view name) {
  if (name == "csv") return ReportFormat::Csv;
  if (name == "json") return ReportFormat::Json;
  throw Error(ErrorKind::InvalidArgument,
              "unknown report format '" + std::string(name) + "' (expected csv or json)");
}

namespace {

std::string optional_field(const std::optional<double>& v) {
  return v ? detail::format_real(*v) : std::string();
}

void write_csv(const EvalReport& report, std::ostream& out) {
  out << "id,tp,fp,tn,fn,weak_label";
  for (Metric m : report.selection) out << ',' << metric_name(m);
  out << '\n';
  for (const auto& r : report.records) {
    out << r.id << ',' << r.confusion.tp << ',' << r.confusion.fp << ',' << r.confusion.tn << ','
        << r.confusion.fn << ',' << (r.weak_label ? "true" : "false");
    for (Metric m : report.selection) out << ',' << optional_field(r.scores.at(m).value_or_none());
    out << '\n';
  }
  auto aggregate_row = [&](std::string_view key, auto field) {
    out << key << ",,,,,";
    for (Metric m : report.selection) {
      auto it = report.aggregates.find(m);
      out << ',' << (it == report.aggregates.end() ? std::string() : optional_field(field(it->second)));
    }
    out << '\n';
  };
  aggregate_row("__mean__", [](const MetricAggregate& a) { return a.mean; });
  aggregate_row("__median__", [](const MetricAggregate& a) { return a.median; });
}

json optional_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

json to_json(const EvalReport& report) {
  json doc;
  json metrics = json::array();
  for (Metric m : report.selection) metrics.push_back(std::string(metric_name(m)));
  doc["config"] = {{"alpha", report.config.alpha()},
                   {"undefined_policy", std::string(policy_name(report.config.undefined_policy()))},
                   {"metrics", metrics}};

  json records = json::array();
  for (const auto& r : report.records) {
    json scores = json::object();
    json resolved = json::array();
    for (const auto& [metric, score] : r.scores) {
      scores[std::string(metric_name(metric))] = optional_json(score.value_or_none());
      if (score.resolved_from_undefined()) resolved.push_back(std::string(metric_name(metric)));
    }
    records.push_back({{"id", r.id},
                       {"tp", r.confusion.tp},
                       {"fp", r.confusion.fp},
                       {"tn", r.confusion.tn},
                       {"fn", r.confusion.fn},
                       {"weak_label", r.weak_label},
                       {"scores", scores},
                       {"resolved", resolved}});
  }
  doc["records"] = records;

  json aggregates = json::object();
  for (const auto& [metric, a] : report.aggregates) {
    aggregates[std::string(metric_name(metric))] = {{"mean", optional_json(a.mean)},
                                                    {"median", optional_json(a.median)},
                                                    {"count_defined", a.count_defined},
                                                    {"count_undefined", a.count_undefined},
                                                    {"count_resolved", a.count_resolved}};
  }
  doc["aggregates"] = aggregates;

  json errors = json::array();
  for (const auto& e : report.errors) errors.push_back({{"id", e.id}, {"message", e.message}});
  doc["errors"] = errors;
  return doc;
}

std::optional<double> optional_from_json(const json& v) {
  return v.is_null() ? std::nullopt : std::optional<double>(v.get<double>());
}

}  // namespace

void write_report(const EvalReport& report, ReportFormat format, std::ostream& out) {
  if (format == ReportFormat::Csv) {
    write_csv(report, out);
  } else {
    out << to_json(report).dump(2) << '\n';
  }
}

void emit_report(const EvalReport& report, ReportFormat format, const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Io, "cannot open '" + path.string() + "' for writing");
  write_report(report, format, out);
  out.flush();
  if (!out) throw Error(ErrorKind::Io, "failed writing '" + path.string() + "'");
}

EvalReport read_report_json(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);

    const auto& cfg = doc.at("config");
    MetricSelection selection;
    for (const auto& name : cfg.at("metrics")) selection.insert(parse_metric(name.get<std::string>()));
    const UndefinedPolicy policy = parse_policy(cfg.at("undefined_policy").get<std::string>());
    EvalReport report{{}, {}, {}, MetricConfig(cfg.at("alpha").get<double>(), policy), selection};

    for (const auto& r : doc.at("records")) {
      EvalRecord record;
      record.id = r.at("id").get<std::string>();
      record.confusion = {r.at("tp").get<std::uint64_t>(), r.at("fp").get<std::uint64_t>(),
                          r.at("tn").get<std::uint64_t>(), r.at("fn").get<std::uint64_t>()};
      record.weak_label = r.at("weak_label").get<bool>();
      MetricSelection resolved;
      for (const auto& name : r.at("resolved")) resolved.insert(parse_metric(name.get<std::string>()));
      for (const auto& [name, value] : r.at("scores").items()) {
        const Metric metric = parse_metric(name);
        MetricScore score = value.is_null() ? MetricScore::undefined(metric, UndefinedPolicy::Propagate)
                            : resolved.contains(metric)
                                ? MetricScore::undefined(metric, UndefinedPolicy::ScoreZero)
                                : MetricScore::defined(metric, value.get<double>());
        record.scores.emplace(metric, score);
      }
      report.records.push_back(std::move(record));
    }

    for (const auto& [name, a] : doc.at("aggregates").items()) {
      MetricAggregate agg;
      agg.mean = optional_from_json(a.at("mean"));
      agg.median = optional_from_json(a.at("median"));
      agg.count_defined = a.at("count_defined").get<std::size_t>();
      agg.count_undefined = a.at("count_undefined").get<std::size_t>();
      agg.count_resolved = a.value("count_resolved", std::size_t{0});
      report.aggregates[parse_metric(name)] = agg;
    }
    for (const auto& e : doc.at("errors")) {
      report.errors.push_back({e.at("id").get<std::string>(), e.at("message").get<std::string>()});
    }
    return report;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::UnsupportedFormat, std::string("malformed report JSON: ") + e.what());
  }
}

}  // namespace mism
