// hos-recover: sweep / rank-probe / analytic-demo front end for the hos library.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hos/alignment.hpp"
#include "hos/analytic.hpp"
#include "hos/experiments.hpp"
#include "hos/rank_probe.hpp"

namespace {

// Accepts "20,25,30", a single value, or an inclusive range "20:90:5".
std::vector<int> parse_k_values(const std::string& text) {
  std::vector<int> out;
  if (text.find(':') != std::string::npos) {
    int start = 0, stop = 0, step = 1;
    if (std::sscanf(text.c_str(), "%d:%d:%d", &start, &stop, &step) < 2 || step < 1)
      throw CLI::ValidationError("--K", "range must be start:stop[:step]");
    for (int k = start; k <= stop; k += step) out.push_back(k);
  } else {
    std::string item;
    std::istringstream stream(text);
    while (std::getline(stream, item, ',')) {
      if(!item.empty()) out.push_back(std::stoi(item));
    }
  }
  if (out.empty()) throw CLI::ValidationError("--K", "no K values parsed");
  for (int k : out)
    if (k < 1) throw CLI::ValidationError("--K", "K values must be positive");
  return out;
}

int run_sweep_command(hos::ExperimentSpec spec, std::string out_dir) {
  // HOS_RECOVER_OUT overrides the flag so batch drivers can redirect output.
  if (const char* env = std::getenv("HOS_RECOVER_OUT")) out_dir = env;

  const hos::SweepResult result = hos::run_sweep(spec);
  const hos::OutputPaths paths = hos::emit_outputs(spec, result, out_dir);

  std::cout << "experiment=" << hos::experiment_name(spec.experiment) << " q=" << spec.q
            << " N=" << spec.n << " trials=" << spec.trials << "\n";
  for (const hos::RatePoint& p : result.table)
    std::cout << "  K=" << p.k << "  rate=" << p.rate << "  (" << p.successes << "/"
              << p.trials << ")\n";
  std::cout << "wrote " << paths.csv << "\n      " << paths.json << "\n      " << paths.svg
            << std::endl;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Signal recovery from linear measurements of high-order spectra"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Read options from a TOML/INI key-value file");

  // --- sweep ---
  auto* sweep = app.add_subcommand("sweep", "Run a success-rate sweep over K");
  std::string experiment = "random";
  std::string k_text;
  std::string out_dir = "out";
  hos::ExperimentSpec spec;
  int n = 0;  // 0 = pick the default for q
  sweep->add_option("--experiment", experiment, "random | spectra-rows | samples")
      ->check(CLI::IsMember({"random", "spectra-rows", "samples"}))
      ->capture_default_str();
  sweep->add_option("--q", spec.q, "Spectrum order (3 = bispectrum, 4 = trispectrum)")
      ->check(CLI::IsMember({3, 4}))
      ->capture_default_str();
  sweep->add_option("--N", n, "Signal length (default 30 for q=3, 10 for q=4)");
  sweep->add_option("--K", k_text, "Measurement counts: list 20,25,30 or range 20:90:5");
  sweep->add_option("--trials", spec.trials, "Trials per K")->capture_default_str();
  sweep->add_option("--seed", spec.base_seed, "Base seed")->capture_default_str();
  sweep->add_option("--starts", spec.solver.num_starts, "Descent starts per trial")
      ->capture_default_str();
  sweep->add_option("--max-iters", spec.solver.max_iters, "Iteration cap per start")
      ->capture_default_str();
  sweep->add_option("--grad-tol", spec.solver.grad_tol, "Gradient infinity-norm stop")
      ->capture_default_str();
  sweep->add_option("--threshold", spec.success_threshold, "Success threshold on the error")
      ->capture_default_str();
  sweep->add_option("--threads", spec.threads, "Worker threads (0 = all cores)")
      ->capture_default_str();
  sweep->add_option("--out", out_dir, "Output directory (env HOS_RECOVER_OUT overrides)")
      ->capture_default_str();

  // --- rank-probe ---
  auto* probe = app.add_subcommand("rank-probe", "Jacobian rank of compressed spectra");
  int probe_n = 8, probe_q = 3, probe_k = 0, probe_trials = 50;
  std::uint64_t probe_seed = 0;
  std::string probe_out;
  probe->add_option("--N", probe_n, "Signal length")->capture_default_str();
  probe->add_option("--q", probe_q, "Spectrum order")->capture_default_str();
  probe->add_option("--K", probe_k, "Operator rows (default N+1)");
  probe->add_option("--trials", probe_trials, "Random (x, A) draws")->capture_default_str();
  probe->add_option("--seed", probe_seed, "Base seed")->capture_default_str();
  probe->add_option("--out", probe_out, "Also write the JSON report to this file");

  // --- analytic-demo ---
  auto* demo = app.add_subcommand("analytic-demo", "Closed-form recursive recovery demo");
  int demo_n = 30, demo_q = 3, demo_count = 10;
  std::uint64_t demo_seed = 0;
  demo->add_option("--N", demo_n, "Signal length")->capture_default_str();
  demo->add_option("--q", demo_q, "Spectrum order (3 or 4)")->capture_default_str();
  demo->add_option("--count", demo_count, "Instances to run")->capture_default_str();
  demo->add_option("--seed", demo_seed, "Base seed")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (sweep->parsed()) {
      spec.experiment = hos::experiment_from_name(experiment);
      spec.n = n > 0 ? n : (spec.q == 4 ? 10 : 30);
      spec.k_values = k_text.empty()
                          ? std::vector<int>{spec.n / 2, spec.n + 5, 2 * spec.n, 3 * spec.n}
                          : parse_k_values(k_text);
      return run_sweep_command(spec, out_dir);
    }
    if (probe->parsed()) {
      if (probe_k == 0) probe_k = probe_n + 1;
      const hos::RankProbeReport report =
          hos::probe_injectivity_rank(probe_n, probe_q, probe_k, probe_trials, probe_seed);
      const std::string text = hos::to_json(report).dump(2);
      std::cout << text << std::endl;
      if (!probe_out.empty()) {
        std::ofstream file(probe_out);
        file << text << '\n';
        if (!file.good()) throw hos::IoError("write failed for " + probe_out);
      }
      return report.pass ? 0 : 1;
    }
    if (demo->parsed()) {
      double worst = 0.0;
      for (int i = 0; i < demo_count; ++i) {
        const auto inst = hos::make_phase_recovery_instance(
            demo_n, demo_q, hos::derive_seed(demo_seed, {static_cast<std::uint64_t>(i)}));
        const hos::Signal recovered = hos::recursive_recover(inst.input);
        const double err = hos::orbit_relative_error(recovered, inst.signal, demo_q);
        worst = std::max(worst, err);
        std::cout << "instance " << i << ": aligned relative error " << err << "\n";
      }
      std::cout << "max error over " << demo_count << " instances: " << worst << std::endl;
      return worst <= 1e-8 ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 1;
  }
  return 0;
}
