#include <algorithm>
#include <chrono>
#include <cstdio>
#include <set>

#include <json.hpp>

#include "aqoci/bench.hpp"
#include "json_util.hpp"

namespace aqoci {

using nlohmann::json;

namespace {

const std::set<std::string> kMethods{"random", "sa", "tabu", "remote"};

json optional_json(const std::optional<double>& value) {
  return value ? json(*value) : json(nullptr);
}

std::optional<double> optional_from(const json& doc, const char* key) {
  if (!doc.contains(key) || doc[key].is_null()) return std::nullopt;
  return doc[key].get<double>();
}

json metrics_json(const MetricReport& m) {
  return {{"inertia", m.inertia},
          {"silhouette", optional_json(m.silhouette)},
          {"homogeneity", optional_json(m.homogeneity)},
          {"completeness", optional_json(m.completeness)},
          {"v_measure", optional_json(m.v_measure)},
          {"n_iter", m.n_iter}};
}

MetricReport metrics_from(const json& doc) {
  MetricReport m;
  m.inertia = doc.at("inertia").get<double>();
  m.silhouette = optional_from(doc, "silhouette");
  m.homogeneity = optional_from(doc, "homogeneity");
  m.completeness = optional_from(doc, "completeness");
  m.v_measure = optional_from(doc, "v_measure");
  m.n_iter = doc.at("n_iter").get<std::size_t>();
  return m;
}

}  // namespace

void ExperimentConfig::validate() const {
  if (k < 1) throw Error(ErrorKind::configuration, "k must be at least 1");
  if (sample_sizes.empty()) throw Error(ErrorKind::configuration, "no sample sizes");
  for (std::size_t i = 0; i < sample_sizes.size(); ++i) {
    if (sample_sizes[i] < k) throw Error(ErrorKind::configuration, "sample size below k");
    if (i > 0 && sample_sizes[i] <= sample_sizes[i - 1])
      throw Error(ErrorKind::configuration, "sample sizes must be strictly ascending");
  }
  if (methods.empty()) throw Error(ErrorKind::configuration, "no methods selected");
  for (const auto& m : methods)
    if (!kMethods.count(m)) throw Error(ErrorKind::configuration, "unknown method '" + m + "'");
  if (std::find(methods.begin(), methods.end(), "remote") != methods.end() && remote.endpoint.empty() &&
      !remote.offline_fallback)
    throw Error(ErrorKind::configuration, "method 'remote' needs an endpoint or offline fallback");
  if (dataset.kind != "blobs" && dataset.kind != "csv")
    throw Error(ErrorKind::configuration, "dataset kind must be 'blobs' or 'csv'");
  if (dataset.kind == "csv" && dataset.csv_path.empty())
    throw Error(ErrorKind::configuration, "csv dataset needs a path");
  if (dataset.kind == "blobs" && sample_sizes.back() > dataset.n)
    throw Error(ErrorKind::configuration, "largest sample size exceeds the blob count");
  if (iterations < 1) throw Error(ErrorKind::configuration, "iterations must be at least 1");
  if (!(grid.upper > grid.lower)) throw Error(ErrorKind::configuration, "upper limit must exceed lower limit");
  if (grid.bits < 1 || grid.bits > 16) throw Error(ErrorKind::configuration, "bits must be in [1, 16]");
  if (!(grid.scale_factor > 1.0)) throw Error(ErrorKind::configuration, "scale factor must exceed 1");
  if (sa_reads < 1 || sa_sweeps < 1 || tabu_restarts < 1 || kmeans_max_iterations < 1)
    throw Error(ErrorKind::configuration, "sampler budgets must be positive");
}

std::string config_to_json(const ExperimentConfig& c) {
  json doc = {
      {"dataset", {{"kind", c.dataset.kind}, {"n", c.dataset.n}, {"std", c.dataset.std},
                   {"csv_path", c.dataset.csv_path}, {"pca", c.dataset.pca}}},
      {"k", c.k},
      {"seed", c.seed},
      {"sample_sizes", c.sample_sizes},
      {"methods", c.methods},
      {"bits", c.grid.bits},
      {"lower", c.grid.lower},
      {"upper", c.grid.upper},
      {"scale_factor", c.grid.scale_factor},
      {"iterations", c.iterations},
      {"delta1", optional_json(c.delta1)},
      {"delta2", optional_json(c.delta2)},
      {"kmeans_max_iterations", c.kmeans_max_iterations},
      {"sa_reads", c.sa_reads},
      {"sa_sweeps", c.sa_sweeps},
      {"tabu_restarts", c.tabu_restarts},
      {"remote", {{"endpoint", c.remote.endpoint}, {"timeout", c.remote.timeout_seconds},
                  {"offline_fallback", c.remote.offline_fallback}}},
  };
  return doc.dump();
}

ExperimentConfig config_from_json(const std::string& text, ExperimentConfig c) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::configuration, std::string("config JSON: ") + e.what());
  }
  try {
    if (doc.contains("dataset")) {
      const json& d = doc["dataset"];
      c.dataset.kind = d.value("kind", c.dataset.kind);
      c.dataset.n = d.value("n", c.dataset.n);
      c.dataset.std = d.value("std", c.dataset.std);
      c.dataset.csv_path = d.value("csv_path", c.dataset.csv_path);
      c.dataset.pca = d.value("pca", c.dataset.pca);
    }
    c.k = doc.value("k", c.k);
    c.seed = doc.value("seed", c.seed);
    c.sample_sizes = doc.value("sample_sizes", c.sample_sizes);
    c.methods = doc.value("methods", c.methods);
    c.grid.bits = doc.value("bits", c.grid.bits);
    c.grid.lower = doc.value("lower", c.grid.lower);
    c.grid.upper = doc.value("upper", c.grid.upper);
    c.grid.scale_factor = doc.value("scale_factor", c.grid.scale_factor);
    c.iterations = doc.value("iterations", c.iterations);
    if (doc.contains("delta1")) c.delta1 = optional_from(doc, "delta1");
    if (doc.contains("delta2")) c.delta2 = optional_from(doc, "delta2");
    c.kmeans_max_iterations = doc.value("kmeans_max_iterations", c.kmeans_max_iterations);
    c.sa_reads = doc.value("sa_reads", c.sa_reads);
    c.sa_sweeps = doc.value("sa_sweeps", c.sa_sweeps);
    c.tabu_restarts = doc.value("tabu_restarts", c.tabu_restarts);
    if (doc.contains("remote")) {
      const json& r = doc["remote"];
      c.remote.endpoint = r.value("endpoint", c.remote.endpoint);
      c.remote.timeout_seconds = r.value("timeout", c.remote.timeout_seconds);
      c.remote.offline_fallback = r.value("offline_fallback", c.remote.offline_fallback);
    }
    c.output_dir = doc.value("output_dir", c.output_dir);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::configuration, std::string("config JSON: ") + e.what());
  }
  return c;
}

std::string config_hash(const ExperimentConfig& config) {
  // nlohmann::json objects keep keys sorted, so dump() is canonical.
  const std::string canonical = json::parse(config_to_json(config)).dump();
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char ch : canonical) {
    hash ^= ch;
    hash *= 0x100000001b3ULL;
  }
  char buffer[17];
  std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(hash));
  return buffer;
}

Dataset load_dataset(const ExperimentConfig& config) {
  if (config.dataset.kind == "blobs")
    return make_blobs(config.dataset.n, config.k, config.seed, config.dataset.std);
  Dataset data = load_csv(config.dataset.csv_path);
  if (config.dataset.pca) data = pca_2d(data);
  return data.shuffled(config.seed);
}

Matrix seed_centroids(const std::string& method, const Dataset& data, const ExperimentConfig& config,
                      std::optional<RefinementResult>& refinement) {
  if (method == "random") return random_init(data.points, config.k, config.seed);
  LoopConfig loop;
  loop.max_iterations = config.iterations;
  loop.sampler = parse_sampler(method);
  loop.anneal.num_reads = config.sa_reads;
  loop.anneal.sweeps = config.sa_sweeps;
  loop.anneal.seed = config.seed;
  loop.tabu.restarts = config.tabu_restarts;
  loop.tabu.seed = config.seed;
  loop.remote = config.remote;
  loop.delta1 = config.delta1;
  loop.delta2 = config.delta2;
  refinement = run_refinement(data.points, config.k, config.grid, loop);
  return refinement->w;
}

BenchReport run_experiment(const ExperimentConfig& config) {
  config.validate();
  const Dataset full = load_dataset(config);
  if (config.sample_sizes.back() > full.size())
    throw Error(ErrorKind::configuration, "largest sample size exceeds the dataset");

  BenchReport report;
  report.config = config;
  report.config_hash = config_hash(config);
  std::vector<std::string> methods = config.methods;
  std::sort(methods.begin(), methods.end());
  methods.erase(std::unique(methods.begin(), methods.end()), methods.end());

  for (const auto& method : methods) {
    for (const std::size_t size : config.sample_sizes) {
      const Dataset slice = full.head(size);
      const auto start = std::chrono::steady_clock::now();
      std::optional<RefinementResult> refinement;
      KMeansConfig kmeans;
      kmeans.k = config.k;
      kmeans.max_iterations = config.kmeans_max_iterations;
      kmeans.init = ProvidedCentroids{seed_centroids(method, slice, config, refinement)};
      ClusterRun run = lloyd(slice.points, kmeans);
      const auto stop = std::chrono::steady_clock::now();

      BenchRow row;
      row.method = method;
      row.sample_size = size;
      row.metrics = score(slice.points, run.labels, run.final_centroids, run.n_iter, slice.true_labels);
      row.run = std::move(run);
      if (refinement) row.refinement_trace = trace_to_json(*refinement);
      row.wall_time_seconds = std::chrono::duration<double>(stop - start).count();
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

std::string report_to_json(const BenchReport& report) {
  json rows = json::array();
  for (const auto& row : report.rows) {
    rows.push_back({{"method", row.method},
                    {"sample_size", row.sample_size},
                    {"metrics", metrics_json(row.metrics)},
                    {"run", json::parse(to_json(row.run))},
                    {"refinement", row.refinement_trace.empty() ? json(nullptr) : json::parse(row.refinement_trace)},
                    {"wall_time_seconds", row.wall_time_seconds}});
  }
  json doc = {{"version", report.version},
              {"config_hash", report.config_hash},
              {"config", json::parse(config_to_json(report.config))},
              {"rows", rows}};
  return doc.dump(2);
}

BenchReport report_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::parse, std::string("report JSON: ") + e.what());
  }
  try {
    BenchReport report;
    report.version = doc.at("version").get<std::string>();
    report.config_hash = doc.at("config_hash").get<std::string>();
    report.config = config_from_json(doc.at("config").dump());
    for (const auto& item : doc.at("rows")) {
      BenchRow row;
      row.method = item.at("method").get<std::string>();
      row.sample_size = item.at("sample_size").get<std::size_t>();
      row.metrics = metrics_from(item.at("metrics"));
      const json& run = item.at("run");
      row.run.seed_centroids = detail::matrix_from_json(run.at("seed_centroids"));
      row.run.final_centroids = detail::matrix_from_json(run.at("final_centroids"));
      row.run.labels = run.at("labels").get<std::vector<std::size_t>>();
      row.run.inertia = run.at("inertia").get<double>();
      row.run.n_iter = run.at("n_iter").get<std::size_t>();
      row.run.converged = run.at("converged").get<bool>();
      if (item.contains("refinement") && !item["refinement"].is_null())
        row.refinement_trace = item["refinement"].dump(2);
      row.wall_time_seconds = item.value("wall_time_seconds", 0.0);
      report.rows.push_back(std::move(row));
    }
    return report;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::parse, std::string("report JSON: ") + e.what());
  }
}

std::string report_json_without_timing(const std::string& report_json) {
  json doc = json::parse(report_json);
  for (auto& row : doc["rows"]) row.erase("wall_time_seconds");
  return doc.dump(2);
}

}  // namespace aqoci
