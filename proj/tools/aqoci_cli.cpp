// aqoci: dataset generation, single adaptive runs and the benchmark sweep.
//
//   aqoci generate --n 250 --k 3 --seed 0 --out blobs.csv
//   aqoci solve    --sampler sa --size 50 --iterations 10
//   aqoci bench    --config bench.json --out results/
//   aqoci report   --in results/report.json --out charts/
//
// Exit codes: 0 ok, 2 configuration, 3 solver/remote, 4 I/O.

#include <cstdio>
#include <fstream>
#include <map>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "aqoci/bench.hpp"

namespace {

struct ExperimentFlags {
  std::string config_path;
  std::string dataset_kind;
  std::size_t n = 0;
  double std = 0.0;
  std::string csv_path;
  bool pca = false;
  std::size_t k = 0;
  std::uint64_t seed = 0;
  std::vector<std::size_t> sizes;
  std::vector<std::string> methods;
  int bits = 0;
  double lower = 0.0;
  double upper = 0.0;
  double beta = 0.0;
  std::size_t iterations = 0;
  double delta1 = 0.0;
  double delta2 = 0.0;
  std::size_t reads = 0;
  std::size_t sweeps = 0;
  std::size_t restarts = 0;
  std::string endpoint;
  std::string token;
  double timeout = 0.0;
  bool offline_fallback = false;
  std::string out;

  std::map<std::string, CLI::Option*> options;

  void attach(CLI::App& app, bool with_methods) {
    options["config"] = app.add_option("--config", config_path, "JSON config file; flags override it");
    options["dataset"] = app.add_option("--dataset", dataset_kind, "blobs or csv");
    options["n"] = app.add_option("--n", n, "number of blobs to generate");
    options["std"] = app.add_option("--std", std, "blob standard deviation");
    options["csv"] = app.add_option("--csv", csv_path, "CSV input (rows are samples)");
    options["pca"] = app.add_flag("--pca", pca, "reduce CSV input to two principal components");
    options["k"] = app.add_option("--k", k, "number of clusters");
    options["seed"] = app.add_option("--seed", seed, "experiment seed");
    options["sizes"] = app.add_option("--sizes", sizes, "ascending sample sizes");
    if (with_methods) options["methods"] = app.add_option("--methods", methods, "random sa tabu remote");
    options["bits"] = app.add_option("--bits", bits, "qubits per centroid coordinate");
    options["lower"] = app.add_option("--lower", lower, "grid lower limit");
    options["upper"] = app.add_option("--upper", upper, "grid upper limit");
    options["beta"] = app.add_option("--beta", beta, "grid scale factor per iteration");
    options["iterations"] = app.add_option("--iterations", iterations, "refinement rounds");
    options["delta1"] = app.add_option("--delta1", delta1, "linearization penalty");
    options["delta2"] = app.add_option("--delta2", delta2, "one-hot penalty");
    options["reads"] = app.add_option("--reads", reads, "annealing reads");
    options["sweeps"] = app.add_option("--sweeps", sweeps, "annealing sweeps per read");
    options["restarts"] = app.add_option("--restarts", restarts, "tabu restarts");
    options["endpoint"] = app.add_option("--endpoint", endpoint, "remote solver base URL");
    options["token"] = app.add_option("--token", token, "remote solver token (else AQOCI_SOLVER_TOKEN)");
    options["timeout"] = app.add_option("--timeout", timeout, "remote timeout in seconds");
    options["fallback"] = app.add_flag("--offline-fallback", offline_fallback, "anneal locally when unreachable");
    options["out"] = app.add_option("--out", out, "output directory");
  }

  bool given(const std::string& name) const {
    const auto it = options.find(name);
    return it != options.end() && it->second->count() > 0;
  }

  aqoci::ExperimentConfig resolve() const {
    aqoci::ExperimentConfig c;
    if (given("config")) {
      std::ifstream in(config_path);
      if (!in) throw aqoci::Error(aqoci::ErrorKind::io, "cannot open config '" + config_path + "'");
      std::stringstream buffer;
      buffer << in.rdbuf();
      c = aqoci::config_from_json(buffer.str(), c);
    }
    if (given("dataset")) c.dataset.kind = dataset_kind;
    if (given("n")) c.dataset.n = n;
    if (given("std")) c.dataset.std = std;
    if (given("csv")) {
      c.dataset.csv_path = csv_path;
      if (!given("dataset")) c.dataset.kind = "csv";
    }
    if (given("pca")) c.dataset.pca = pca;
    if (given("k")) c.k = k;
    if (given("seed")) c.seed = seed;
    if (given("sizes")) c.sample_sizes = sizes;
    if (given("methods")) c.methods = methods;
    if (given("bits")) c.grid.bits = bits;
    if (given("lower")) c.grid.lower = lower;
    if (given("upper")) c.grid.upper = upper;
    if (given("beta")) c.grid.scale_factor = beta;
    if (given("iterations")) c.iterations = iterations;
    if (given("delta1")) c.delta1 = delta1;
    if (given("delta2")) c.delta2 = delta2;
    if (given("reads")) c.sa_reads = reads;
    if (given("sweeps")) c.sa_sweeps = sweeps;
    if (given("restarts")) c.tabu_restarts = restarts;
    if (given("endpoint")) c.remote.endpoint = endpoint;
    if (given("token")) c.remote.auth_token = token;
    if (given("timeout")) c.remote.timeout_seconds = timeout;
    if (given("fallback")) c.remote.offline_fallback = offline_fallback;
    if (given("out")) c.output_dir = out;
    return c;
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw aqoci::Error(aqoci::ErrorKind::io, "cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void print_centroids(const aqoci::Matrix& w) {
  for (std::size_t b = 0; b < w.cols(); ++b) {
    std::printf("centroid %zu:", b);
    for (std::size_t a = 0; a < w.rows(); ++a) std::printf(" %.10g", w(a, b));
    std::printf("\n");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Adaptive QUBO centroid initialization for k-means"};
  app.require_subcommand(1);

  std::size_t gen_n = 250, gen_k = 3;
  std::uint64_t gen_seed = 0;
  double gen_std = 1.0;
  std::string gen_out = "blobs.csv", gen_labels;
  auto* generate = app.add_subcommand("generate", "write a seeded Gaussian-blob dataset as CSV");
  generate->add_option("--n", gen_n, "number of points");
  generate->add_option("--k", gen_k, "number of blobs");
  generate->add_option("--seed", gen_seed, "generator seed");
  generate->add_option("--std", gen_std, "blob standard deviation");
  generate->add_option("--out", gen_out, "output CSV path");
  generate->add_option("--labels", gen_labels, "optional path for the true labels (one per line)");

  auto* solve = app.add_subcommand("solve", "run the adaptive refinement once and print centroids");
  ExperimentFlags solve_flags;
  solve_flags.attach(*solve, false);
  std::string sampler = "sa", trace_path;
  std::size_t solve_size = 0;
  solve->add_option("--sampler", sampler, "sa, tabu, remote or oracle");
  solve->add_option("--size", solve_size, "use the first N samples (default: all)");
  solve->add_option("--trace", trace_path, "write the refinement trace JSON here instead of stdout");

  auto* bench = app.add_subcommand("bench", "run the sample-size sweep and write report files");
  ExperimentFlags bench_flags;
  bench_flags.attach(*bench, true);

  std::string report_in, report_out = ".";
  auto* report = app.add_subcommand("report", "re-emit CSV and SVG outputs from report.json");
  report->add_option("--in", report_in, "report.json to read")->required();
  report->add_option("--out", report_out, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (generate->parsed()) {
      const aqoci::Dataset data = aqoci::make_blobs(gen_n, gen_k, gen_seed, gen_std);
      aqoci::write_csv(data, gen_out);
      if (!gen_labels.empty()) {
        std::ofstream labels(gen_labels);
        if (!labels) throw aqoci::Error(aqoci::ErrorKind::io, "cannot write '" + gen_labels + "'");
        for (auto l : *data.true_labels) labels << l << "\n";
      }
      std::printf("wrote %zu points to %s\n", data.size(), gen_out.c_str());
    } else if (solve->parsed()) {
      aqoci::ExperimentConfig config = solve_flags.resolve();
      aqoci::Dataset data = aqoci::load_dataset(config);
      if (solve_size > 0) data = data.head(solve_size);
      aqoci::LoopConfig loop;
      loop.max_iterations = config.iterations;
      loop.sampler = aqoci::parse_sampler(sampler);
      loop.anneal.num_reads = config.sa_reads;
      loop.anneal.sweeps = config.sa_sweeps;
      loop.anneal.seed = config.seed;
      loop.tabu.restarts = config.tabu_restarts;
      loop.tabu.seed = config.seed;
      loop.remote = config.remote;
      loop.delta1 = config.delta1;
      loop.delta2 = config.delta2;
      const aqoci::RefinementResult result = aqoci::run_refinement(data.points, config.k, config.grid, loop);
      print_centroids(result.w);
      if (!result.one_hot) std::printf("warning: final assignment was not one-hot; repaired\n");
      const std::string trace = aqoci::trace_to_json(result);
      if (trace_path.empty()) {
        std::printf("%s\n", trace.c_str());
      } else {
        std::ofstream out(trace_path);
        if (!(out << trace)) throw aqoci::Error(aqoci::ErrorKind::io, "cannot write '" + trace_path + "'");
      }
    } else if (bench->parsed()) {
      const aqoci::ExperimentConfig config = bench_flags.resolve();
      const aqoci::BenchReport result = aqoci::run_experiment(config);
      for (const auto& path : aqoci::emit_outputs(result, config.output_dir)) std::printf("wrote %s\n", path.c_str());
    } else if (report->parsed()) {
      const aqoci::BenchReport loaded = aqoci::report_from_json(read_file(report_in));
      for (const auto& path : aqoci::emit_outputs(loaded, report_out)) std::printf("wrote %s\n", path.c_str());
    }
  } catch (const aqoci::Error& e) {
    std::fprintf(stderr, "aqoci: %s: %s\n", aqoci::to_string(e.kind()), e.what());
    return aqoci::exit_code(e.kind());
  } catch (const std::exception& e) {
    std::fprintf(stderr, "aqoci: %s\n", e.what());
    return 1;
  }
  return 0;
}
