#include "mism/sweep.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "mism/error.hpp"
#include "number_format.hpp"

namespace fs = std::filesystem;

namespace mism {

void SweepSpec::validate() const {
  auto fail = [](const std::string& msg) { throw Error(ErrorKind::InvalidArgument, msg); };
  if (steps < 2) fail("sweep needs at least 2 steps, got " + std::to_string(steps));
  if (total_n < 1) fail("sweep total_n must be positive");
  if (total_n < std::uint64_t{steps} - 1) {
    fail("sweep total_n (" + std::to_string(total_n) + ") must be at least steps - 1 (" +
         std::to_string(steps - 1) + ") so every ratio maps to a distinct FP count");
  }
  if (alphas.empty()) fail("sweep needs at least one alpha");
  for (double a : alphas) MetricConfig::validate_alpha(a);
  if (metrics.empty()) fail("sweep needs at least one metric");
}

std::vector<SweepTable::SeriesKey> SweepTable::series() const {
  std::vector<SeriesKey> keys;
  for (const auto& row : rows) {
    SeriesKey key{row.metric, row.alpha};
    if (keys.empty() || !(keys.back() == key)) keys.push_back(key);
  }
  return keys;
}

std::vector<SweepRow> SweepTable::series_rows(const SeriesKey& key) const {
  std::vector<SweepRow> out;
  for (const auto& row : rows) {
    if (row.metric == key.metric && row.alpha == key.alpha) out.push_back(row);
  }
  return out;
}

std::uint64_t realized_false_positives(double ratio, std::uint64_t total_n) {
  return static_cast<std::uint64_t>(std::llround(ratio * static_cast<double>(total_n)));
}

SweepTable run_sweep(const SweepSpec& spec, const MetricConfig& cfg) {
  spec.validate();

  std::vector<double> alphas = spec.alphas;
  std::sort(alphas.begin(), alphas.end());
  alphas.erase(std::unique(alphas.begin(), alphas.end()), alphas.end());

  std::vector<double> ratios(spec.steps);
  std::vector<ConfusionMatrix> matrices(spec.steps);
  for (std::uint32_t i = 0; i < spec.steps; ++i) {
    ratios[i] = static_cast<double>(i) / static_cast<double>(spec.steps - 1);
    const std::uint64_t fp = realized_false_positives(ratios[i], spec.total_n);
    matrices[i] = ConfusionMatrix{0, fp, spec.total_n - fp, 0};
  }

  SweepTable table;
  auto emit_series = [&](Metric metric, std::optional<double> alpha) {
    const MetricConfig series_cfg(alpha.value_or(cfg.alpha()), cfg.undefined_policy());
    for (std::uint32_t i = 0; i < spec.steps; ++i) {
      const MetricScore s = evaluate(metric, matrices[i], series_cfg);
      table.rows.push_back({ratios[i], alpha, metric, s.value_or_none()});
    }
  };
  for (Metric metric : spec.metrics) {
    if (is_alpha_dependent(metric)) {
      for (double a : alphas) emit_series(metric, a);
    } else {
      emit_series(metric, std::nullopt);
    }
  }
  return table;
}

// ---------------------------------------------------------------- CSV

namespace {

constexpr std::string_view kCsvHeader = "ratio,alpha,metric,score";

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

}  // namespace

void write_sweep_csv(const SweepTable& table, std::ostream& out) {
  out << kCsvHeader << '\n';
  for (const auto& row : table.rows) {
    out << detail::format_real(row.ratio) << ',';
    if (row.alpha) out << detail::format_real(*row.alpha);
    out << ',' << metric_name(row.metric) << ',';
    if (row.score) out << detail::format_real(*row.score);
    out << '\n';
  }
}

void emit_sweep_csv(const SweepTable& table, const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Io, "cannot open '" + path.string() + "' for writing");
  write_sweep_csv(table, out);
  out.flush();
  if (!out) throw Error(ErrorKind::Io, "failed writing '" + path.string() + "'");
}

SweepTable read_sweep_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw Error(ErrorKind::UnsupportedFormat, "sweep CSV must start with '" +
                                                  std::string(kCsvHeader) + "'");
  }
  SweepTable table;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto fields = split_fields(line);
    auto bad = [&]() {
      return Error(ErrorKind::UnsupportedFormat,
                   "malformed sweep CSV line " + std::to_string(line_no) + ": " + line);
    };
    if (fields.size() != 4) throw bad();
    SweepRow row;
    const auto ratio = detail::parse_real(fields[0]);
    if (!ratio) throw bad();
    row.ratio = *ratio;
    if (!fields[1].empty()) {
      row.alpha = detail::parse_real(fields[1]);
      if (!row.alpha) throw bad();
    }
    row.metric = parse_metric(fields[2]);
    if (!fields[3].empty()) {
      row.score = detail::parse_real(fields[3]);
      if (!row.score) throw bad();
    }
    table.rows.push_back(row);
  }
  return table;
}

SweepTable read_sweep_csv(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::FileNotFound, "cannot open '" + path.string() + "'");
  return read_sweep_csv(in);
}

// ---------------------------------------------------------------- SVG

std::string series_label(const SweepTable::SeriesKey& key) {
  std::string label(metric_name(key.metric));
  if (key.alpha) label += " (alpha=" + detail::format_real(*key.alpha) + ")";
  return label;
}

namespace {

constexpr double kWidth = 820;
constexpr double kHeight = 520;
constexpr double kLeft = 70;
constexpr double kRight = 220;  // legend column
constexpr double kTop = 30;
constexpr double kBottom = 60;
constexpr double kPlotW = kWidth - kLeft - kRight;
constexpr double kPlotH = kHeight - kTop - kBottom;

constexpr std::array<const char*, 10> kPalette = {
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::string fixed2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

double to_x(double ratio) { return kLeft + std::clamp(ratio, 0.0, 1.0) * kPlotW; }
double to_y(double score) { return kTop + (1.0 - std::clamp(score, 0.0, 1.0)) * kPlotH; }

std::string xml_escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_sweep_svg(const SweepTable& table) {
  if (table.rows.empty()) {
    throw Error(ErrorKind::InvalidArgument, "cannot plot an empty sweep table");
  }
  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" fill=\"white\"/>\n";

  // grid and ticks
  svg << "<g stroke=\"#dddddd\" stroke-width=\"1\">\n";
  for (int i = 0; i <= 10; ++i) {
    const double t = i / 10.0;
    svg << "<line x1=\"" << fixed2(to_x(t)) << "\" y1=\"" << fixed2(to_y(0)) << "\" x2=\""
        << fixed2(to_x(t)) << "\" y2=\"" << fixed2(to_y(1)) << "\"/>\n";
    svg << "<line x1=\"" << fixed2(to_x(0)) << "\" y1=\"" << fixed2(to_y(t)) << "\" x2=\""
        << fixed2(to_x(1)) << "\" y2=\"" << fixed2(to_y(t)) << "\"/>\n";
  }
  svg << "</g>\n";
  svg << "<rect x=\"" << fixed2(kLeft) << "\" y=\"" << fixed2(kTop) << "\" width=\""
      << fixed2(kPlotW) << "\" height=\"" << fixed2(kPlotH)
      << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
  svg << "<g text-anchor=\"middle\">\n";
  for (int i = 0; i <= 10; i += 2) {
    const double t = i / 10.0;
    svg << "<text x=\"" << fixed2(to_x(t)) << "\" y=\"" << fixed2(to_y(0) + 18) << "\">"
        << fixed2(t) << "</text>\n";
  }
  svg << "</g>\n<g text-anchor=\"end\">\n";
  for (int i = 0; i <= 10; i += 2) {
    const double t = i / 10.0;
    svg << "<text x=\"" << fixed2(kLeft - 8) << "\" y=\"" << fixed2(to_y(t) + 4) << "\">"
        << fixed2(t) << "</text>\n";
  }
  svg << "</g>\n";
  svg << "<text x=\"" << fixed2(kLeft + kPlotW / 2) << "\" y=\"" << fixed2(kHeight - 15)
      << "\" text-anchor=\"middle\" font-size=\"14\">FP / N ratio</text>\n";
  svg << "<text x=\"20\" y=\"" << fixed2(kTop + kPlotH / 2)
      << "\" text-anchor=\"middle\" font-size=\"14\" transform=\"rotate(-90 20 "
      << fixed2(kTop + kPlotH / 2) << ")\">score</text>\n";

  const auto keys = table.series();
  for (std::size_t s = 0; s < keys.size(); ++s) {
    const char* color = kPalette[s % kPalette.size()];
    svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\"";
    if (s >= kPalette.size()) svg << " stroke-dasharray=\"6 3\"";
    svg << " points=\"";
    bool first = true;
    for (const auto& row : table.series_rows(keys[s])) {
      if (!row.score) continue;
      if (!first) svg << ' ';
      svg << fixed2(to_x(row.ratio)) << ',' << fixed2(to_y(*row.score));
      first = false;
    }
    svg << "\"><title>" << xml_escape(series_label(keys[s])) << "</title></polyline>\n";
  }

  svg << "<g font-size=\"12\">\n";
  const double legend_x = kLeft + kPlotW + 20;
  for (std::size_t s = 0; s < keys.size(); ++s) {
    const double y = kTop + 10 + 20.0 * static_cast<double>(s);
    svg << "<line x1=\"" << fixed2(legend_x) << "\" y1=\"" << fixed2(y) << "\" x2=\""
        << fixed2(legend_x + 24) << "\" y2=\"" << fixed2(y) << "\" stroke=\""
        << kPalette[s % kPalette.size()] << "\" stroke-width=\"2\"";
    if (s >= kPalette.size()) svg << " stroke-dasharray=\"6 3\"";
    svg << "/>\n<text x=\"" << fixed2(legend_x + 30) << "\" y=\"" << fixed2(y + 4) << "\">"
        << xml_escape(series_label(keys[s])) << "</text>\n";
  }
  svg << "</g>\n</svg>\n";
  return svg.str();
}

void emit_sweep_svg(const SweepTable& table, const fs::path& path) {
  const std::string doc = render_sweep_svg(table);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Io, "cannot open '" + path.string() + "' for writing");
  out << doc;
  out.flush();
  if (!out) throw Error(ErrorKind::Io, "failed writing '" + path.string() + "'");
}

}  // namespace mism
