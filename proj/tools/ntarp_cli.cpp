// Command-line front end: bound tables, figure data and experiments as CSV.

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ntarp/bounds.hpp"
#include "ntarp/dataset_io.hpp"
#include "ntarp/error.hpp"
#include "ntarp/harness.hpp"
#include "ntarp/tarp.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitData = 3;

// Writes to --out when given, stdout otherwise.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw ntarp::DataError("cannot write '" + path + "'");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

std::size_t shrink(std::size_t v, bool quick) { return quick ? std::max<std::size_t>(1, v / 10) : v; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Thresholding after random projection: classifier, bounds and experiments"};
  app.set_config("--config", "", "TOML/INI file with default flag values (flags win)");
  app.require_subcommand(1);

  std::string out_path;
  app.add_option("--out", out_path, "CSV output path (default stdout)");

  double delta = 0.1;
  std::uint64_t seed = 1;
  bool quick = false;

  // bounds-table
  auto* bt = app.add_subcommand("bounds-table", "Gap bounds of n projections vs affine classifiers");
  ntarp::harness::BoundsTableConfig bt_cfg;
  bt->add_option("--delta", bt_cfg.delta, "Confidence parameter")->capture_default_str();
  bt->add_option("--samples", bt_cfg.samples, "Sample size N")->capture_default_str();
  bt->add_option("--d-min", bt_cfg.d_min)->capture_default_str();
  bt->add_option("--d-max", bt_cfg.d_max)->capture_default_str();
  bt->add_option("--n", bt_cfg.projections, "Projection count per dimension (default: required count)")
      ->delimiter(',');

  auto* budget = app.add_subcommand("budget-table", "Largest n for which the chaining bound wins");
  std::size_t vc_max = 5;
  budget->add_option("--vc-max", vc_max)->capture_default_str();

  auto* gc = app.add_subcommand("gap-curve", "Expected-gap bounds for n = 1..n_max");
  ntarp::harness::GapCurveConfig gc_cfg;
  gc->add_option("--samples", gc_cfg.samples)->capture_default_str();
  gc->add_option("--n", gc_cfg.n_max, "Largest projection count")->capture_default_str();
  gc->add_option("--vc-dims", gc_cfg.vc_dims)->delimiter(',');

  auto* syn = app.add_subcommand("synthetic", "Bernoulli-plus-noise mixture experiment");
  ntarp::harness::SyntheticConfig syn_cfg;
  syn->add_option("--sigma", syn_cfg.sigma)->capture_default_str();
  syn->add_option("--steps", syn_cfg.steps)->capture_default_str();
  syn->add_option("--reps", syn_cfg.reps)->capture_default_str();
  syn->add_option("--n", syn_cfg.methods.projections)->capture_default_str();
  syn->add_option("--k", syn_cfg.methods.order)->capture_default_str();
  syn->add_option("--train-size", syn_cfg.train_size)->capture_default_str();
  syn->add_option("--samples", syn_cfg.test_size, "Test sample size")->capture_default_str();
  syn->add_option("--dim", syn_cfg.dim)->capture_default_str();
  syn->add_option("--seed", syn_cfg.seed)->capture_default_str();
  syn->add_option("--delta", syn_cfg.methods.delta)->capture_default_str();
  syn->add_flag("--quick", quick, "Divide n and reps by 10");

  auto* dg = app.add_subcommand("digits", "Handwritten digits experiment");
  std::string task = "even_odd";
  std::vector<std::string> data_paths;
  std::size_t dg_n = 0, dg_train = 0, dg_reps = 0;
  bool reference_corpus = false;
  dg->add_option("--task", task, "even_odd | small_large | zero_one")->capture_default_str();
  dg->add_option("--data", data_paths, "Digits file(s), 64 pixels + digit per line")->required();
  dg->add_option("--n", dg_n, "Projections (default per task)");
  dg->add_option("--train-size", dg_train, "Training rows (default per task)");
  dg->add_option("--reps", dg_reps, "Random splits (default 10)");
  dg->add_option("--seed", seed)->capture_default_str();
  dg->add_option("--delta", delta)->capture_default_str();
  dg->add_flag("--quick", quick, "Divide n and reps by 10");
  dg->add_flag("--reference-corpus", reference_corpus, "Require the 1797-row reference corpus");

  auto* zt = app.add_subcommand("zero-train", "Training error against expansion order and n");
  ntarp::harness::ZeroTrainConfig zt_cfg;
  std::string zt_dataset = "arcs";
  std::string zt_data;
  zt->add_option("--k", zt_cfg.k_max, "Largest expansion order")->capture_default_str();
  zt->add_option("--n", zt_cfg.projections)->capture_default_str();
  zt->add_option("--seed", zt_cfg.seed)->capture_default_str();
  zt->add_option("--dataset", zt_dataset, "arcs | xor")->capture_default_str();
  zt->add_option("--data", zt_data, "Dataset CSV (overrides --dataset)");

  auto* co = app.add_subcommand("crossover", "Projection count where the affine bound takes over");
  std::size_t co_dim = 2;
  double co_samples = 1000;
  co->add_option("--samples", co_samples)->capture_default_str();
  co->add_option("--d", co_dim)->capture_default_str();

  auto* ft = app.add_subcommand("fit", "Fit a classifier on a dataset CSV and save the model");
  std::string fit_data;
  ntarp::FitOptions fit_opts{1, 1000, 1};
  ft->add_option("--data", fit_data)->required();
  ft->add_option("--k", fit_opts.order)->capture_default_str();
  ft->add_option("--n", fit_opts.projections)->capture_default_str();
  ft->add_option("--seed", fit_opts.seed)->capture_default_str();

  auto* pr = app.add_subcommand("predict", "Label a dataset CSV with a saved model");
  std::string model_path, pred_data;
  pr->add_option("--model", model_path)->required();
  pr->add_option("--data", pred_data)->required();

  if (argc <= 1) {
    std::cerr << app.help();
    return kExitConfig;
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    Output out(out_path);
    auto& os = out.stream();
    namespace h = ntarp::harness;

    if (*bt) {
      h::write_bounds_table(h::bounds_table(bt_cfg), os);
    } else if (*budget) {
      h::write_budget_table(h::projection_budget_table(vc_max), os);
    } else if (*gc) {
      h::write_gap_curve(gc_cfg, h::expected_gap_curve(gc_cfg), os);
    } else if (*syn) {
      syn_cfg.methods.projections = shrink(syn_cfg.methods.projections, quick);
      syn_cfg.reps = shrink(syn_cfg.reps, quick);
      h::write_experiment(h::run_synthetic(syn_cfg), "step", os);
    } else if (*dg) {
      auto cfg = h::digits_preset(ntarp::parse_task(task));
      if (dg_n) cfg.methods.projections = dg_n;
      if (dg_train) cfg.train_size = dg_train;
      if (dg_reps) cfg.reps = dg_reps;
      cfg.seed = seed;
      cfg.methods.delta = delta;
      cfg.methods.projections = shrink(cfg.methods.projections, quick);
      cfg.reps = shrink(cfg.reps, quick);
      const auto digits = ntarp::load_optdigits(data_paths);
      if (reference_corpus) h::check_reference_corpus(digits);
      h::write_experiment(h::run_digits(cfg, digits), "task", os);
    } else if (*zt) {
      ntarp::Dataset data;
      if (!zt_data.empty()) {
        data = ntarp::read_csv(zt_data);
      } else if (zt_dataset == "arcs") {
        data = h::two_arcs();
      } else if (zt_dataset == "xor") {
        data = h::xor_points();
      } else {
        throw ntarp::ConfigError("unknown dataset '" + zt_dataset + "' (arcs, xor)");
      }
      const auto result = h::zero_train_demo(data, zt_cfg);
      h::write_zero_train(result, zt_cfg.seed, os);
    } else if (*co) {
      h::write_crossover(h::crossover(co_samples, co_dim), os);
      std::cerr << "note: exponent d+1 is the VC dimension of affine classifiers in d dimensions "
                   "and gives the crossover; exponent d is listed for comparison with figures "
                   "computed that way.\n";
    } else if (*ft) {
      const auto data = ntarp::read_csv(fit_data);
      const auto model = ntarp::fit(data, fit_opts);
      ntarp::save_model(model, os);
      std::cerr << "training error " << model.stump.train_error() << '\n';
    } else if (*pr) {
      std::ifstream in(model_path);
      if (!in) throw ntarp::DataError("cannot open '" + model_path + "'");
      const auto model = ntarp::load_model(in);
      const auto data = ntarp::read_csv(pred_data);
      const auto labels = model.predict_all(data);
      os << "prediction,label\n";
      for (std::size_t i = 0; i < labels.size(); ++i) os << labels[i] << ',' << data.label(i) << '\n';
      auto rule = [&](std::span<const double> x) { return model.predict(x); };
      std::cerr << "error " << ntarp::empirical_error(rule, data) << '\n';
    }
  } catch (const ntarp::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const ntarp::RangeError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const ntarp::DataError& e) {
    std::cerr << "data error: " << e.what() << '\n';
    return kExitData;
  }
  return 0;
}
