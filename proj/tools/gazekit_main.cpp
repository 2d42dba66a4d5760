// gazekit: VR eye-tracking saccade analysis pipeline.
//
// Subcommands: synth, ingest, analyze, pca, train, evaluate, boundary,
// report. Every subcommand is a pure function of its input files, flags and
// seed; re-running writes byte-identical outputs. Diagnostics go to stderr,
// data to files or stdout. Exit codes: 0 success, 1 runtime error, 2 usage.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <span>
#include <string>
#include <vector>

#include "gazekit/divergence.hpp"
#include "gazekit/error.hpp"
#include "gazekit/ingest.hpp"
#include "gazekit/model_select.hpp"
#include "gazekit/pca.hpp"
#include "gazekit/pipeline.hpp"
#include "gazekit/plot.hpp"
#include "gazekit/preprocess.hpp"
#include "gazekit/synth.hpp"
#include "gazekit/table.hpp"

namespace fs = std::filesystem;
using namespace gazekit;

namespace {

Session load_table(const std::string& path) {
  return parse_table(read_text_file(path));
}

PcaMode parse_mode(const std::string& mode) {
  return mode == "zscore" ? PcaMode::z_score : PcaMode::center_only;
}

// "default", or "C:0.1,1,10;gamma:0.01,0.1".
std::pair<std::vector<double>, std::vector<double>> parse_grid_spec(
    const std::string& spec) {
  if (spec == "default") return {{}, {}};
  std::vector<double> cs, gammas;
  std::size_t start = 0;
  while (start < spec.size()) {
    std::size_t semi = spec.find(';', start);
    if (semi == std::string::npos) semi = spec.size();
    const std::string chunk = spec.substr(start, semi - start);
    const std::size_t colon = chunk.find(':');
    if (colon == std::string::npos)
      fail(errc::invalid_config, "grid spec chunk '" + chunk + "' lacks ':'");
    const std::string name = chunk.substr(0, colon);
    std::vector<double>* target = nullptr;
    if (name == "C") target = &cs;
    else if (name == "gamma") target = &gammas;
    else fail(errc::invalid_config, "grid spec names must be C or gamma");
    for (const auto& token : split_csv_line(chunk.substr(colon + 1)))
      target->push_back(parse_double(token, "grid spec " + name));
    start = semi + 1;
  }
  if (cs.empty() && gammas.empty())
    fail(errc::invalid_config, "grid spec is empty");
  return {cs, gammas};
}

void ensure_parent_dir(const std::string& path) {
  const fs::path parent = fs::path(path).parent_path();
  if (!parent.empty()) fs::create_directories(parent);
}

void emit(const std::string& path, std::string_view content) {
  ensure_parent_dir(path);
  write_text_file(path, content);
}

std::string grid_csv(const GridResult& grid, int folds) {
  TextTable t;
  t.header = {"C", "gamma", "mean_cv_accuracy"};
  for (int f = 1; f <= folds; ++f) t.header.push_back("fold" + std::to_string(f));
  t.header.push_back("mean_cv_f1_weighted");
  for (const auto& row : grid.rows) {
    std::vector<double> r{row.C, row.gamma, row.mean_accuracy};
    r.insert(r.end(), row.fold_accuracy.begin(), row.fold_accuracy.end());
    r.push_back(row.mean_f1w);
    t.rows.push_back(std::move(r));
  }
  return render_table(t);
}

std::string report_json(const EvalReport& r) {
  nlohmann::json doc;
  doc["accuracy"] = r.accuracy;
  doc["precision_weighted"] = r.precision_w;
  doc["recall_weighted"] = r.recall_w;
  doc["f1_weighted"] = r.f1_w;
  doc["confusion"] = {{r.confusion.m[0][0], r.confusion.m[0][1]},
                      {r.confusion.m[1][0], r.confusion.m[1][1]}};
  doc["class_order"] = {"not-saccade", "saccade"};
  doc["n"] = r.confusion.total();
  return doc.dump(2) + "\n";
}

void print_report(const EvalReport& r) {
  std::cout << "accuracy=" << format_g9(r.accuracy)
            << " precision_w=" << format_g9(r.precision_w)
            << " recall_w=" << format_g9(r.recall_w)
            << " f1_w=" << format_g9(r.f1_w) << "\n"
            << "confusion [not-saccade, saccade]: [[" << r.confusion.m[0][0] << ", "
            << r.confusion.m[0][1] << "], [" << r.confusion.m[1][0] << ", "
            << r.confusion.m[1][1] << "]]\n";
}

struct TrainFlags {
  std::vector<std::string> tables;
  int pcs = 4;
  int folds = 4;
  std::string grid = "default";
  std::uint64_t seed = 1;
  double ratio = 0.75;
  bool unstratified = false;
  std::string weights = "balanced";
  std::string metric = "accuracy";
  std::string mode = "center";
  double outlier_k = 0.0;  // > 0 fences the training pool by divergence
  std::string output;
  std::string grid_out;
  std::string test_out;
};

PipelineOptions to_options(const TrainFlags& f) {
  PipelineOptions opt;
  opt.pcs = f.pcs;
  opt.folds = f.folds;
  opt.train_ratio = f.ratio;
  opt.stratified = !f.unstratified;
  opt.mode = parse_mode(f.mode);
  opt.weights = f.weights == "none" ? WeightScheme::none : WeightScheme::balanced;
  opt.metric = f.metric == "f1" ? CvMetric::weighted_f1 : CvMetric::accuracy;
  opt.seed = f.seed;
  std::tie(opt.cs, opt.gammas) = parse_grid_spec(f.grid);
  return opt;
}

Session take_samples(const Session& pool, std::span<const int> index,
                     const std::string& tag) {
  Session out;
  out.participant_id = tag;
  out.rate_hz = pool.rate_hz;
  out.source = tag;
  out.samples.reserve(index.size());
  for (int i : index) out.samples.push_back(pool.samples[static_cast<std::size_t>(i)]);
  return out;
}

TrainOutput run_training(const TrainFlags& flags, const Session& pool) {
  const Dataset data = dataset_from_session(pool);
  const PipelineOptions options = to_options(flags);
  TrainOutput out = train_pipeline(data, options);

  std::cout << "grid search (" << out.grid.rows.size() << " cells, " << flags.folds
            << "-fold CV):\n";
  for (const auto& row : out.grid.rows)
    std::cout << "  C=" << format_g9(row.C) << " gamma=" << format_g9(row.gamma)
              << " mean_cv_accuracy=" << format_g9(row.mean_accuracy)
              << " mean_cv_f1w=" << format_g9(row.mean_f1w) << "\n";
  std::cout << "best: C=" << format_g9(out.grid.best_C)
            << " gamma=" << format_g9(out.grid.best_gamma)
            << " support_vectors=" << out.model.svm.meta.n_support
            << " iterations=" << out.model.svm.meta.iterations
            << (out.model.svm.meta.converged ? "" : " (iteration bound hit)") << "\n";
  return out;
}

int cmd_synth(const std::string& config_path, bool seed_given, std::uint64_t seed,
              const std::string& output, std::string intervals_out) {
  SynthConfig cfg;
  if (!config_path.empty()) cfg = synth_config_from_json(read_text_file(config_path));
  if (seed_given) cfg.seed = seed;
  const SynthResult result = generate_session(cfg);
  emit(output, write_nested_session(result.session));
  if (intervals_out.empty()) intervals_out = output + ".intervals.csv";
  emit(intervals_out, write_intervals_csv(result.saccades));
  std::cerr << "wrote " << result.session.samples.size() << " samples, "
            << result.saccades.size() << " saccades to " << output << "\n";
  return 0;
}

int cmd_ingest(const std::string& doc_path, const std::string& labels_path,
               const std::string& output) {
  Session session = parse_nested_session(read_text_file(doc_path));
  if (!labels_path.empty())
    session = apply_label_intervals(session,
                                    parse_intervals_csv(read_text_file(labels_path)));
  const std::string table = export_table(session);
  if (output.empty()) std::cout << table;
  else emit(output, table);
  std::cerr << "ingested " << session.samples.size() << " samples from "
            << doc_path << "\n";
  return 0;
}

int cmd_analyze(const std::string& table_path, double iqr_k,
                const std::string& out_dir) {
  const Session session = load_table(table_path);
  const SessionDivergence sd = session_divergence(session, iqr_k);

  fs::create_directories(out_dir);
  TextTable per_sample;
  per_sample.header = {"timestamp", "distance", "angle_deg"};
  for (std::size_t i = 0; i < sd.series.size(); ++i)
    per_sample.rows.push_back(
        {sd.timestamps[i], sd.series[i], chord_to_degrees(sd.series[i])});
  emit((fs::path(out_dir) / "divergence.csv").string(), render_table(per_sample));

  TextTable stats;
  stats.header = {"min", "max", "mean", "mean_angle_deg",
                  "n_used", "n_removed_invalid", "n_removed_outlier"};
  stats.rows.push_back({sd.stats.min, sd.stats.max, sd.stats.mean,
                        chord_to_degrees(sd.stats.mean),
                        static_cast<double>(sd.stats.n_used),
                        static_cast<double>(sd.stats.n_removed_invalid),
                        static_cast<double>(sd.stats.n_removed_outlier)});
  emit((fs::path(out_dir) / "divergence_stats.csv").string(), render_table(stats));

  PlotSeries series{"per-eye distance", sd.timestamps, sd.series};
  emit((fs::path(out_dir) / "divergence.svg").string(),
       line_plot_svg("Per-eye gaze direction difference", "time (s)", "distance",
                     {series}));

  std::cout << "min=" << format_g9(sd.stats.min) << " max=" << format_g9(sd.stats.max)
            << " mean=" << format_g9(sd.stats.mean)
            << " mean_angle_deg=" << format_g9(chord_to_degrees(sd.stats.mean))
            << " n_used=" << sd.stats.n_used
            << " removed_invalid=" << sd.stats.n_removed_invalid
            << " removed_outlier=" << sd.stats.n_removed_outlier << "\n";
  return 0;
}

int cmd_pca(const std::string& table_path, const std::string& mode,
            const std::string& out_dir) {
  const Session session = load_table(table_path);
  const auto [clean, removed] = filter_invalid(session);
  if (clean.samples.empty()) fail(errc::empty_after_filtering, table_path);
  std::cerr << "dropped " << removed << " invalid samples\n";

  const Eigen::MatrixXd x = feature_matrix(clean);
  const PcaModel model = pca_fit(x, parse_mode(mode));

  fs::create_directories(out_dir);
  TextTable scree;
  scree.header = {"component", "eigenvalue", "variance_ratio", "cumulative"};
  for (const auto& row : scree_table(model))
    scree.rows.push_back({static_cast<double>(row.component), row.eigenvalue,
                          row.ratio, row.cumulative});
  emit((fs::path(out_dir) / "scree.csv").string(), render_table(scree));

  bool labeled = true;
  for (const auto& s : clean.samples) labeled = labeled && s.label.has_value();

  const int k4 = std::min<int>(4, static_cast<int>(model.components.rows()));
  const Eigen::MatrixXd scores = pca_transform(model, x, k4);
  auto write_scores = [&](int k) {
    TextTable t;
    for (int j = 1; j <= k; ++j) t.header.push_back("pc" + std::to_string(j));
    if (labeled) t.header.push_back("label");
    for (Eigen::Index i = 0; i < scores.rows(); ++i) {
      std::vector<double> row;
      for (int j = 0; j < k; ++j) row.push_back(scores(i, j));
      if (labeled)
        row.push_back(*clean.samples[static_cast<std::size_t>(i)].label ? 1.0 : 0.0);
      t.rows.push_back(std::move(row));
    }
    emit((fs::path(out_dir) / ("scores" + std::to_string(k) + "d.csv")).string(),
         render_table(t));
  };
  write_scores(2);
  if (k4 > 2) write_scores(k4);

  std::vector<PlotSeries> ratio_series(2);
  ratio_series[0].name = "variance ratio";
  ratio_series[1].name = "cumulative";
  for (const auto& row : scree_table(model)) {
    ratio_series[0].x.push_back(row.component);
    ratio_series[0].y.push_back(row.ratio);
    ratio_series[1].x.push_back(row.component);
    ratio_series[1].y.push_back(row.cumulative);
  }
  emit((fs::path(out_dir) / "scree.svg").string(),
       line_plot_svg("Explained variance by component", "component", "ratio",
                     ratio_series));

  std::vector<PlotSeries> groups;
  if (labeled) {
    groups.resize(2);
    groups[0].name = "not-saccade";
    groups[1].name = "saccade";
    for (Eigen::Index i = 0; i < scores.rows(); ++i) {
      auto& g = groups[*clean.samples[static_cast<std::size_t>(i)].label ? 1 : 0];
      g.x.push_back(scores(i, 0));
      g.y.push_back(scores(i, 1));
    }
  } else {
    groups.resize(1);
    groups[0].name = "samples";
    for (Eigen::Index i = 0; i < scores.rows(); ++i) {
      groups[0].x.push_back(scores(i, 0));
      groups[0].y.push_back(scores(i, 1));
    }
  }
  emit((fs::path(out_dir) / "scores2d.svg").string(),
       scatter_plot_svg("First two principal components", "pc1", "pc2", groups));

  std::cout << "components=" << model.eigenvalues.size();
  if (model.explained_variance_ratio.size() >= 4)
    std::cout << " cumulative4=" << format_g9(cumulative_variance(model, 4));
  std::cout << "\n";
  return 0;
}

Session load_pool(const TrainFlags& flags) {
  std::vector<Session> sessions;
  sessions.reserve(flags.tables.size());
  for (const auto& path : flags.tables) sessions.push_back(load_table(path));
  Session pool = pool_sessions(sessions);
  if (flags.outlier_k > 0.0) {
    auto [fenced, removed] = filter_divergence_outliers(pool, flags.outlier_k);
    std::cerr << "divergence fences removed " << removed << " samples\n";
    pool = std::move(fenced);
  }
  return pool;
}

int cmd_train(const TrainFlags& flags) {
  const Session pool = load_pool(flags);
  const TrainOutput out = run_training(flags, pool);

  emit(flags.output, save_model(out.model));
  if (!flags.grid_out.empty()) emit(flags.grid_out, grid_csv(out.grid, flags.folds));
  if (!flags.test_out.empty())
    emit(flags.test_out, export_table(take_samples(pool, out.test_index, "held-out")));
  std::cerr << "model written to " << flags.output << "\n";
  return 0;
}

int cmd_evaluate(const std::string& model_path, const std::string& table_path,
                 const std::string& output, const std::string& plot_path) {
  const SaccadeModel model = load_model(read_text_file(model_path));
  const Session session = load_table(table_path);
  const auto [clean, removed] = filter_invalid(session);
  (void)removed;
  if (clean.samples.empty()) fail(errc::empty_after_filtering, table_path);
  const EvalReport report = evaluate_model(model, dataset_from_session(clean));

  print_report(report);
  if (!output.empty()) emit(output, report_json(report));
  if (!plot_path.empty())
    emit(plot_path, matrix_plot_svg("Saccade classifier confusion", report.confusion));
  return 0;
}

int cmd_boundary(const TrainFlags& flags, int resolution,
                 const std::string& plot_path) {
  if (flags.pcs != 2)
    fail(errc::wrong_dimensionality, "boundary requires --pcs 2");
  const Session pool = load_pool(flags);
  const TrainOutput out = run_training(flags, pool);

  const Eigen::MatrixXd scores = pca_transform(out.model.pca, out.train.x, 2);
  GridBounds bounds{scores.col(0).minCoeff(), scores.col(0).maxCoeff(),
                    scores.col(1).minCoeff(), scores.col(1).maxCoeff()};
  const double mx = 0.05 * (bounds.xmax - bounds.xmin);
  const double my = 0.05 * (bounds.ymax - bounds.ymin);
  bounds.xmin -= mx;
  bounds.xmax += mx;
  bounds.ymin -= my;
  bounds.ymax += my;

  const DecisionGrid grid = decision_grid(out.model.svm, bounds, resolution);
  TextTable t;
  t.header = {"x", "y", "decision_value"};
  for (int iy = 0; iy < grid.resolution; ++iy)
    for (int ix = 0; ix < grid.resolution; ++ix)
      t.rows.push_back(
          {grid.x_at(ix), grid.y_at(iy),
           grid.values[static_cast<std::size_t>(iy) * grid.resolution + ix]});
  emit(flags.output, render_table(t));

  std::vector<double> sv_x, sv_y;
  for (Eigen::Index i = 0; i < out.model.svm.support_vectors.rows(); ++i) {
    sv_x.push_back(out.model.svm.support_vectors(i, 0));
    sv_y.push_back(out.model.svm.support_vectors(i, 1));
  }
  const std::string svg_path = plot_path.empty() ? flags.output + ".svg" : plot_path;
  emit(svg_path, contour_plot_svg("RBF decision function (2 PCs)", "pc1", "pc2",
                                  grid, sv_x, sv_y));
  std::cerr << "boundary grid " << resolution << "x" << resolution << " written to "
            << flags.output << "\n";
  return 0;
}

int cmd_report(const std::string& input, const std::string& out_dir,
               TrainFlags flags, int resolution, double iqr_k) {
  fs::create_directories(out_dir);
  const fs::path dir(out_dir);

  Session session = parse_nested_session(read_text_file(input));
  const std::string table_path = (dir / "table.csv").string();
  emit(table_path, export_table(session));

  cmd_analyze(table_path, iqr_k, (dir / "divergence").string());
  cmd_pca(table_path, flags.mode, (dir / "pca").string());

  flags.tables = {table_path};
  flags.output = (dir / "model.json").string();
  flags.grid_out = (dir / "grid.csv").string();
  flags.test_out = (dir / "test.csv").string();
  cmd_train(flags);

  cmd_evaluate(flags.output, flags.test_out, (dir / "report.json").string(),
               (dir / "confusion.svg").string());

  TrainFlags bflags = flags;
  bflags.pcs = 2;
  bflags.output = (dir / "boundary.csv").string();
  bflags.grid_out.clear();
  bflags.test_out.clear();
  cmd_boundary(bflags, resolution, (dir / "boundary.svg").string());

  nlohmann::json manifest;
  manifest["command"] = "report";
  manifest["input"] = input;
  manifest["seed"] = flags.seed;
  manifest["pcs"] = flags.pcs;
  manifest["folds"] = flags.folds;
  manifest["ratio"] = flags.ratio;
  manifest["stratified"] = !flags.unstratified;
  manifest["weights"] = flags.weights;
  manifest["metric"] = flags.metric;
  manifest["mode"] = flags.mode;
  manifest["grid"] = flags.grid;
  manifest["resolution"] = resolution;
  manifest["iqr_k"] = iqr_k;
  manifest["outlier_k"] = flags.outlier_k;
  manifest["files"] = {"table.csv",      "divergence/divergence.csv",
                       "divergence/divergence_stats.csv", "divergence/divergence.svg",
                       "pca/scree.csv",  "pca/scores2d.csv",
                       "pca/scores4d.csv", "pca/scree.svg",
                       "pca/scores2d.svg", "model.json",
                       "grid.csv",       "test.csv",
                       "report.json",    "confusion.svg",
                       "boundary.csv",   "boundary.svg"};
  emit((dir / "manifest.json").string(), manifest.dump(2) + "\n");
  std::cerr << "report written to " << out_dir << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"VR eye-tracking saccade analysis pipeline"};
  app.require_subcommand(1);

  // synth
  auto* synth = app.add_subcommand("synth", "generate a labeled synthetic session");
  std::string synth_config, synth_out, synth_intervals;
  std::uint64_t synth_seed = 0;
  synth->add_option("--config", synth_config, "generator config JSON");
  auto* seed_opt = synth->add_option("--seed", synth_seed, "seed override");
  synth->add_option("-o,--output", synth_out, "output document path")->required();
  synth->add_option("--intervals-out", synth_intervals,
                    "saccade interval sidecar (default <output>.intervals.csv)");

  // ingest
  auto* ingest = app.add_subcommand("ingest", "flatten a nested session document");
  std::string ingest_doc, ingest_labels, ingest_out;
  ingest->add_option("doc", ingest_doc, "nested session document")->required();
  ingest->add_option("--labels", ingest_labels, "label interval CSV");
  ingest->add_option("-o,--output", ingest_out, "output table (default stdout)");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "per-eye divergence analysis");
  std::string analyze_table, analyze_out;
  double analyze_k = 3.0;
  analyze->add_option("table", analyze_table, "flattened session table")->required();
  analyze->add_option("--iqr-k", analyze_k, "IQR fence multiplier");
  analyze->add_option("-o,--output", analyze_out, "output directory")->required();

  // pca
  auto* pca = app.add_subcommand("pca", "principal component analysis");
  std::string pca_table, pca_mode = "center", pca_out;
  pca->add_option("table", pca_table, "flattened session table")->required();
  pca->add_option("--mode", pca_mode, "center|zscore")
      ->check(CLI::IsMember({"center", "zscore"}));
  pca->add_option("-o,--output", pca_out, "output directory")->required();

  auto add_train_flags = [](CLI::App* cmd, TrainFlags& f, bool with_tables) {
    if (with_tables)
      cmd->add_option("table", f.tables, "flattened session table(s)")->required();
    cmd->add_option("--pcs", f.pcs, "principal components fed to the classifier");
    cmd->add_option("--folds", f.folds, "cross-validation folds");
    cmd->add_option("--grid", f.grid, "default, or C:v,v;gamma:v,v");
    cmd->add_option("--seed", f.seed, "split/fold seed");
    cmd->add_option("--ratio", f.ratio, "train fraction");
    cmd->add_flag("--unstratified", f.unstratified, "plain random split/folds");
    cmd->add_option("--weights", f.weights, "balanced|none")
        ->check(CLI::IsMember({"balanced", "none"}));
    cmd->add_option("--metric", f.metric, "accuracy|f1 CV selection metric")
        ->check(CLI::IsMember({"accuracy", "f1"}));
    cmd->add_option("--mode", f.mode, "center|zscore PCA mode")
        ->check(CLI::IsMember({"center", "zscore"}));
    cmd->add_option("--outlier-k", f.outlier_k,
                    "also fence the training pool by per-eye divergence "
                    "(0 disables; cleaning otherwise drops only invalid rows)");
  };

  // train
  auto* train = app.add_subcommand("train", "grid-searched SVM training");
  TrainFlags train_flags;
  add_train_flags(train, train_flags, true);
  train->add_option("-o,--output", train_flags.output, "model file")->required();
  train->add_option("--grid-out", train_flags.grid_out, "grid search table CSV");
  train->add_option("--test-out", train_flags.test_out, "held-out split table");

  // evaluate
  auto* evaluate = app.add_subcommand("evaluate", "score a model on a table");
  std::string eval_model, eval_table, eval_out, eval_plot;
  evaluate->add_option("model", eval_model, "model file")->required();
  evaluate->add_option("table", eval_table, "flattened session table")->required();
  evaluate->add_option("-o,--output", eval_out, "evaluation report JSON");
  evaluate->add_option("--plot", eval_plot, "confusion matrix SVG");

  // boundary
  auto* boundary = app.add_subcommand("boundary", "2-PC decision grid for contours");
  TrainFlags boundary_flags;
  boundary_flags.pcs = 2;
  int boundary_res = 100;
  std::string boundary_plot;
  add_train_flags(boundary, boundary_flags, true);
  boundary->add_option("--resolution", boundary_res, "grid resolution per axis");
  boundary->add_option("-o,--output", boundary_flags.output, "grid CSV")->required();
  boundary->add_option("--plot", boundary_plot, "contour SVG (default <output>.svg)");

  // report
  auto* report = app.add_subcommand("report", "run the whole pipeline into a directory");
  TrainFlags report_flags;
  std::string report_in, report_out;
  int report_res = 100;
  double report_k = 3.0;
  report->add_option("--in", report_in, "nested session document")->required();
  report->add_option("-o,--output", report_out, "output directory")->required();
  add_train_flags(report, report_flags, false);
  report->add_option("--resolution", report_res, "boundary grid resolution");
  report->add_option("--iqr-k", report_k, "IQR fence multiplier");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*synth)
      return cmd_synth(synth_config, seed_opt->count() > 0, synth_seed, synth_out,
                       synth_intervals);
    if (*ingest) return cmd_ingest(ingest_doc, ingest_labels, ingest_out);
    if (*analyze) return cmd_analyze(analyze_table, analyze_k, analyze_out);
    if (*pca) return cmd_pca(pca_table, pca_mode, pca_out);
    if (*train) return cmd_train(train_flags);
    if (*evaluate) return cmd_evaluate(eval_model, eval_table, eval_out, eval_plot);
    if (*boundary) return cmd_boundary(boundary_flags, boundary_res, boundary_plot);
    if (*report)
      return cmd_report(report_in, report_out, report_flags, report_res, report_k);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
