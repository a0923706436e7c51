#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "mism/mism.hpp"

namespace fs = std::filesystem;

namespace mism::cli {
namespace {

struct EvalOptions {
  std::string gt_dir;
  std::string pred_dir;
  double alpha = kDefaultAlpha;
  int threshold = kDefaultThreshold;
  std::string metrics = "dsc,acc,spec,nmcc,mism";
  std::string undefined = "zero";
  std::string format = "csv";
  std::string out = "-";
};

struct SweepOptions {
  std::uint64_t n = 60000;
  std::uint32_t steps = 101;
  std::vector<double> alphas = {0.05, 0.1, 0.25, 0.5};
  std::string metrics = "dsc,acc,spec,nmcc,mism";
  std::string undefined = "zero";
  std::string csv;
  std::string svg;
};

struct MatrixOptions {
  std::string gt_file;
  std::string pred_file;
  int threshold = kDefaultThreshold;
};

struct FixtureOptions {
  std::string out_dir;
  std::size_t size = 100;
};

void check_threshold(int threshold) {
  if (threshold < 0 || threshold > 255) {
    throw Error(ErrorKind::InvalidArgument,
                "--threshold must be in [0, 255], got " + std::to_string(threshold));
  }
}

int cmd_eval(const EvalOptions& o, std::ostream& out, std::ostream& err) {
  // Everything that can be a usage error is checked before touching the disk.
  const MetricConfig cfg(o.alpha, parse_policy(o.undefined));
  const MetricSelection selection = MetricSelection::parse(o.metrics);
  const ReportFormat format = parse_report_format(o.format);
  check_threshold(o.threshold);

  const Pairing pairing = pair_directories(o.gt_dir, o.pred_dir);
  for (const auto& p : pairing.unmatched_ground_truth) {
    err << "warning: no prediction for ground truth " << p.string() << '\n';
  }
  for (const auto& p : pairing.unmatched_prediction) {
    err << "warning: no ground truth for prediction " << p.string() << '\n';
  }

  const EvalReport report = evaluate_batch(pairing.pairs, o.threshold, cfg, selection);
  for (const auto& e : report.errors) err << "error: " << e.id << ": " << e.message << '\n';

  if (o.out == "-") {
    write_report(report, format, out);
  } else {
    emit_report(report, format, o.out);
  }
  err << "evaluated " << report.records.size() << " pairs, " << report.weak_label_count()
      << " weak labels, " << report.errors.size() << " errors\n";
  return report.errors.empty() ? kSuccess : kEvaluationErrors;
}

int cmd_sweep(const SweepOptions& o, std::ostream& err) {
  if (o.csv.empty() && o.svg.empty()) {
    err << "error: sweep needs at least one of --csv or --svg\n";
    return kUsageError;
  }
  SweepSpec spec;
  spec.total_n = o.n;
  spec.steps = o.steps;
  spec.alphas = o.alphas;
  spec.metrics = MetricSelection::parse(o.metrics);
  spec.validate();

  const SweepTable table = run_sweep(spec, MetricConfig(kDefaultAlpha, parse_policy(o.undefined)));
  if (!o.csv.empty()) emit_sweep_csv(table, o.csv);
  if (!o.svg.empty()) emit_sweep_svg(table, o.svg);
  err << "sweep: " << table.series().size() << " series x " << spec.steps << " points\n";
  return kSuccess;
}

int cmd_matrix(const MatrixOptions& o, std::ostream& out) {
  check_threshold(o.threshold);
  const BinaryMask gt = load_mask(o.gt_file, o.threshold);
  const BinaryMask pred = load_mask(o.pred_file, o.threshold);
  const ConfusionMatrix m = confusion_matrix(gt, pred);
  out << m.tp << ' ' << m.fp << ' ' << m.tn << ' ' << m.fn << ' ' << m.positives() << ' '
      << m.negatives() << '\n';
  return kSuccess;
}

int cmd_fixtures(const FixtureOptions& o, std::ostream& err) {
  const auto pairs = generate_fixture_suite(o.out_dir, o.size);
  err << "wrote " << pairs.size() << " fixture pairs (" << o.size << "x" << o.size << ") to "
      << o.out_dir << '\n';
  return kSuccess;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Segmentation evaluation with MISm and comparison metrics", "mism"};
  app.require_subcommand(1, 1);

  EvalOptions eval;
  auto* eval_cmd = app.add_subcommand("eval", "Score paired ground-truth/prediction directories");
  eval_cmd->add_option("gt_dir", eval.gt_dir, "Ground-truth mask directory")->required();
  eval_cmd->add_option("pred_dir", eval.pred_dir, "Prediction mask directory")->required();
  eval_cmd->add_option("--alpha", eval.alpha, "Weighting coefficient in (0, 1)")->capture_default_str();
  eval_cmd->add_option("--threshold", eval.threshold, "Foreground threshold (0-255)")->capture_default_str();
  eval_cmd->add_option("--metrics", eval.metrics, "Comma-separated metric list")->capture_default_str();
  eval_cmd->add_option("--undefined", eval.undefined, "zero | propagate")->capture_default_str();
  eval_cmd->add_option("--format", eval.format, "csv | json")->capture_default_str();
  eval_cmd->add_option("--out", eval.out, "Report path, '-' for stdout")->capture_default_str();

  SweepOptions sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Score the P = 0 edge case across FP/N ratios");
  sweep_cmd->add_option("--n", sweep.n, "Pixels in the synthetic negative image")->capture_default_str();
  sweep_cmd->add_option("--steps", sweep.steps, "Ratio samples including both endpoints")->capture_default_str();
  sweep_cmd->add_option("--alphas", sweep.alphas, "Comma-separated alpha values")
      ->delimiter(',')
      ->capture_default_str();
  sweep_cmd->add_option("--metrics", sweep.metrics, "Comma-separated metric list")->capture_default_str();
  sweep_cmd->add_option("--undefined", sweep.undefined, "zero | propagate")->capture_default_str();
  sweep_cmd->add_option("--csv", sweep.csv, "Write the sweep table as CSV");
  sweep_cmd->add_option("--svg", sweep.svg, "Write the sweep chart as SVG");

  MatrixOptions matrix;
  auto* matrix_cmd = app.add_subcommand("matrix", "Print `tp fp tn fn P N` for one mask pair");
  matrix_cmd->add_option("gt_file", matrix.gt_file, "Ground-truth mask")->required();
  matrix_cmd->add_option("pred_file", matrix.pred_file, "Prediction mask")->required();
  matrix_cmd->add_option("--threshold", matrix.threshold, "Foreground threshold (0-255)")->capture_default_str();

  FixtureOptions fixtures;
  auto* fixtures_cmd = app.add_subcommand("fixtures", "Write the synthetic six-case fixture suite");
  fixtures_cmd->add_option("out_dir", fixtures.out_dir, "Output directory")->required();
  fixtures_cmd->add_option("--size", fixtures.size, "Mask side length (>= 16)")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (eval_cmd->parsed()) return cmd_eval(eval, out, err);
    if (sweep_cmd->parsed()) return cmd_sweep(sweep, err);
    if (matrix_cmd->parsed()) return cmd_matrix(matrix, out);
    if (fixtures_cmd->parsed()) return cmd_fixtures(fixtures, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace mism::cli
