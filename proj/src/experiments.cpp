#include "hos/experiments.hpp"

#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <thread>

#include <Eigen/Core>

#include "hos/alignment.hpp"
#include "hos/random.hpp"
#include "hos/svg_plot.hpp"

namespace hos {

namespace {

OperatorKind operator_kind(ExperimentKind e) {
  switch (e) {
    case ExperimentKind::RandomLinear: return OperatorKind::DenseRandom;
    case ExperimentKind::SpectraRows: return OperatorKind::SpectraRows;
    case ExperimentKind::RandomSamples: return OperatorKind::SamplingMask;
  }
  throw InvalidArgument("unknown experiment kind");
}

std::uint64_t experiment_id(ExperimentKind e) { return static_cast<std::uint64_t>(e); }

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::string_view experiment_name(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::RandomLinear: return "random";
    case ExperimentKind::SpectraRows: return "spectra-rows";
    case ExperimentKind::RandomSamples: return "samples";
  }
  throw InvalidArgument("unknown experiment kind");
}

ExperimentKind experiment_from_name(std::string_view name) {
  if (name == "random") return ExperimentKind::RandomLinear;
  if (name == "spectra-rows") return ExperimentKind::SpectraRows;
  if (name == "samples") return ExperimentKind::RandomSamples;
  throw InvalidArgument("unknown experiment name: " + std::string(name));
}

TrialRecord run_trial(const ExperimentSpec& spec, int k, int trial_index) {
  const auto start_time = std::chrono::steady_clock::now();
  const std::uint64_t eid = experiment_id(spec.experiment);
  const auto ku = static_cast<std::uint64_t>(k);
  const auto tu = static_cast<std::uint64_t>(trial_index);

  TrialRecord rec;
  rec.experiment = experiment_name(spec.experiment);
  rec.q = spec.q;
  rec.n = spec.n;
  rec.k = k;
  rec.trial = trial_index;
  rec.seed_signal = derive_seed(spec.base_seed, {eid, ku, tu, 0});
  rec.seed_operator = derive_seed(spec.base_seed, {eid, ku, tu, 1});
  rec.seed_solver = derive_seed(spec.base_seed, {eid, ku, tu, 2});

  try {
    const Signal truth = Signal::real(gaussian_vector(spec.n, rec.seed_signal));
    const MeasurementOperator op =
        build_operator(operator_kind(spec.experiment), k, spec.n, spec.q, rec.seed_operator);
    const Eigen::VectorXcd y = apply(op, spectrum(truth, spec.q));

    SolverConfig cfg = spec.solver;
    cfg.seed = rec.seed_solver;
    const SolveResult sol = solve(op, y, spec.n, spec.q, cfg);

    rec.objective = sol.objective;
    rec.error = orbit_relative_error(sol.estimate, truth, spec.q);
    rec.success = is_success(rec.error, {spec.success_threshold});
  } catch (const Error& e) {
    rec.objective = std::numeric_limits<double>::infinity();
    rec.error = std::numeric_limits<double>::infinity();
    rec.success = false;
    rec.failure_reason = e.what();
  }

  rec.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                     start_time)
               .count();
  return rec;
}

SweepResult run_sweep(const ExperimentSpec& spec) {
  if (spec.trials < 1) throw InvalidArgument("sweep needs at least one trial per K");

  struct Task {
    int k;
    int trial;
  };
  std::vector<Task> tasks;
  tasks.reserve(spec.k_values.size() * spec.trials);
  for (int k : spec.k_values)
    for (int t = 0; t < spec.trials; ++t) tasks.push_back({k, t});

  std::vector<TrialRecord> records(tasks.size());
  unsigned workers = spec.threads > 0 ? static_cast<unsigned>(spec.threads)
                                      : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, tasks.size());

  if (workers <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i)
      records[i] = run_trial(spec, tasks[i].k, tasks[i].trial);
  } else {
    std::atomic<std::size_t> next{0};
    auto drain = [&] {
      for (std::size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1))
        records[i] = run_trial(spec, tasks[i].k, tasks[i].trial);
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(drain);
    for (auto& th : pool) th.join();
  }

  std::sort(records.begin(), records.end(), [](const TrialRecord& a, const TrialRecord& b) {
    return std::tie(a.k, a.trial) < std::tie(b.k, b.trial);
  });

  SweepResult result;
  result.records = std::move(records);
  std::vector<int> ks = spec.k_values;
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
  for (int k : ks) {
    RatePoint point;
    point.k = k;
    for (const TrialRecord& r : result.records) {
      if (r.k != k) continue;
      ++point.trials;
      if (r.success) ++point.successes;
    }
    point.rate = point.trials ? static_cast<double>(point.successes) / point.trials : 0.0;
    result.table.push_back(point);
  }
  return result;
}

nlohmann::json spec_to_json(const ExperimentSpec& spec) {
  return {{"experiment", experiment_name(spec.experiment)},
          {"q", spec.q},
          {"N", spec.n},
          {"K_values", spec.k_values},
          {"trials", spec.trials},
          {"success_threshold", spec.success_threshold},
          {"solver",
           {{"num_starts", spec.solver.num_starts},
            {"max_iters", spec.solver.max_iters},
            {"grad_tol", spec.solver.grad_tol},
            {"init_step", spec.solver.init_step},
            {"step_shrink", spec.solver.step_shrink},
            {"sufficient_decrease", spec.solver.sufficient_decrease},
            {"init_scale", spec.solver.init_scale}}}};
}

nlohmann::json summary_to_json(const ExperimentSpec& spec, const SweepResult& result) {
  nlohmann::json table = nlohmann::json::array();
  for (const RatePoint& p : result.table) {
    table.push_back({{"K", p.k},
                     {"successes", p.successes},
                     {"trials", p.trials},
                     {"rate", p.rate}});
  }
  return {{"spec", spec_to_json(spec)},
          {"table", table},
          {"environment",
           {{"eigen", std::to_string(EIGEN_WORLD_VERSION) + "." +
                          std::to_string(EIGEN_MAJOR_VERSION) + "." +
                          std::to_string(EIGEN_MINOR_VERSION)},
            {"threads", spec.threads}}},
          {"seeds", {{"base", spec.base_seed}}}};
}

OutputPaths emit_outputs(const ExperimentSpec& spec, const SweepResult& result,
                         const std::string& out_dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create output directory " + out_dir + ": " + ec.message());

  OutputPaths paths;
  paths.csv = (fs::path(out_dir) / "records.csv").string();
  paths.json = (fs::path(out_dir) / "summary.json").string();
  paths.svg = (fs::path(out_dir) / "rates.svg").string();

  {
    std::ofstream csv(paths.csv);
    if (!csv) throw IoError("cannot open " + paths.csv);
    csv << "experiment,q,N,K,trial,seed_signal,seed_operator,seed_solver,objective,error,"
           "success,ms\n";
    for (const TrialRecord& r : result.records) {
      csv << r.experiment << ',' << r.q << ',' << r.n << ',' << r.k << ',' << r.trial << ','
          << r.seed_signal << ',' << r.seed_operator << ',' << r.seed_solver << ','
          << format_double(r.objective) << ',' << format_double(r.error) << ','
          << (r.success ? 1 : 0) << ',' << format_double(r.ms) << '\n';
    }
    if (!csv.good()) throw IoError("write failed for " + paths.csv);
  }

  {
    std::ofstream json(paths.json);
    if (!json) throw IoError("cannot open " + paths.json);
    json << summary_to_json(spec, result).dump(2) << '\n';
    if (!json.good()) throw IoError("write failed for " + paths.json);
  }

  const std::string title = std::string(experiment_name(spec.experiment)) +
                            ", q=" + std::to_string(spec.q) + ", N=" + std::to_string(spec.n);
  write_rate_svg(paths.svg, result.table, spec.n, title);
  return paths;
}

}  // namespace hos
