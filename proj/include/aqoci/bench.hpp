#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aqoci/adaptive.hpp"
#include "aqoci/data.hpp"
#include "aqoci/kmeans.hpp"
#include "aqoci/metrics.hpp"

namespace aqoci {

inline constexpr const char* kArtifactVersion = "0.1.0";

struct DatasetSpec {
  std::string kind = "blobs";  // "blobs" or "csv"
  std::size_t n = 250;         // blobs only
  double std = 1.0;            // blobs only
  std::string csv_path;
  bool pca = false;
};

struct ExperimentConfig {
  DatasetSpec dataset;
  std::size_t k = 3;
  std::uint64_t seed = 0;
  std::vector<std::size_t> sample_sizes{50, 100, 150, 200, 250};
  std::vector<std::string> methods{"random", "sa", "tabu"};
  GridSpec grid;
  std::size_t iterations = 10;
  std::optional<double> delta1;
  std::optional<double> delta2;
  std::size_t kmeans_max_iterations = 300;
  // Sampler budgets; seeds are derived from `seed`.
  std::size_t sa_reads = 32;
  std::size_t sa_sweeps = 1000;
  std::size_t tabu_restarts = 16;
  RemoteSolverConfig remote;
  std::string output_dir = "bench_out";

  void validate() const;
};

// Flag-equivalent keys; missing keys keep defaults.
ExperimentConfig config_from_json(const std::string& text, ExperimentConfig base = {});
std::string config_to_json(const ExperimentConfig& config);
// FNV-1a over the canonical (key-sorted) config JSON, as 16 hex digits.
std::string config_hash(const ExperimentConfig& config);

struct BenchRow {
  std::string method;
  std::size_t sample_size = 0;
  MetricReport metrics;
  ClusterRun run;
  std::string refinement_trace;  // trace_to_json output; empty for random init
  double wall_time_seconds = 0.0;
};

struct BenchReport {
  std::string version = kArtifactVersion;
  std::string config_hash;
  ExperimentConfig config;
  std::vector<BenchRow> rows;  // sorted by (method, sample_size)
};

Dataset load_dataset(const ExperimentConfig& config);
// Seed centroids for one method on one data slice.
Matrix seed_centroids(const std::string& method, const Dataset& data, const ExperimentConfig& config,
                      std::optional<RefinementResult>& refinement);
BenchReport run_experiment(const ExperimentConfig& config);

std::string report_to_json(const BenchReport& report);
BenchReport report_from_json(const std::string& text);
// Drops every wall_time_seconds field.
std::string report_json_without_timing(const std::string& report_json);

struct MetricRow {
  std::string method;
  std::size_t sample_size;
  std::string metric;
  double value;
};

// Flat rows in report order: inertia, silhouette, homogeneity, completeness,
// v_measure, n_iter (undefined metrics omitted).
std::vector<MetricRow> metric_rows(const BenchReport& report);
std::string metrics_csv(const BenchReport& report);
std::vector<MetricRow> parse_metrics_csv(const std::string& text);
std::string metric_chart_svg(const BenchReport& report, const std::string& metric);

// report.json, metrics.csv and <metric>.svg under `directory`.
std::vector<std::string> emit_outputs(const BenchReport& report, const std::string& directory);

}  // namespace aqoci
