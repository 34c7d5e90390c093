#include "aqoci/kmeans.hpp"

#include <numeric>

#include <json.hpp>

#include "json_util.hpp"

#include "aqoci/error.hpp"
#include "aqoci/metrics.hpp"
#include "aqoci/random.hpp"

namespace aqoci {

namespace {

std::size_t nearest(const Matrix& data, std::size_t p, const Matrix& centroids) {
  std::size_t best = 0;
  double best_dist = column_distance_sq(data, p, centroids, 0);
  for (std::size_t c = 1; c < centroids.cols(); ++c) {
    const double dist = column_distance_sq(data, p, centroids, c);
    if (dist < best_dist) {
      best = c;
      best_dist = dist;
    }
  }
  return best;
}

void check_shapes(const Matrix& data, const Matrix& centroids) {
  if (centroids.cols() == 0) throw Error(ErrorKind::configuration, "no centroids");
  if (centroids.rows() != data.rows()) throw Error(ErrorKind::dimension, "centroid dimension mismatch");
}

Matrix means(const Matrix& data, const std::vector<std::size_t>& labels, std::size_t k,
             std::vector<std::size_t>& counts) {
  Matrix sums(data.rows(), k);
  counts.assign(k, 0);
  for (std::size_t p = 0; p < data.cols(); ++p) {
    ++counts[labels[p]];
    for (std::size_t a = 0; a < data.rows(); ++a) sums(a, labels[p]) += data(a, p);
  }
  for (std::size_t c = 0; c < k; ++c)
    if (counts[c] > 0)
      for (std::size_t a = 0; a < data.rows(); ++a) sums(a, c) /= static_cast<double>(counts[c]);
  return sums;
}

}  // namespace

std::vector<std::size_t> assignment_step(const Matrix& data, const Matrix& centroids) {
  check_shapes(data, centroids);
  std::vector<std::size_t> labels(data.cols());
  const auto n = static_cast<std::int64_t>(data.cols());
#pragma omp parallel for schedule(static)
  for (std::int64_t p = 0; p < n; ++p)
    labels[static_cast<std::size_t>(p)] = nearest(data, static_cast<std::size_t>(p), centroids);
  return labels;
}

std::vector<std::size_t> assignment_step_serial(const Matrix& data, const Matrix& centroids) {
  check_shapes(data, centroids);
  std::vector<std::size_t> labels(data.cols());
  for (std::size_t p = 0; p < data.cols(); ++p) labels[p] = nearest(data, p, centroids);
  return labels;
}

UpdateResult update_step(const Matrix& data, std::vector<std::size_t> labels, std::size_t k) {
  if (labels.size() != data.cols()) throw Error(ErrorKind::dimension, "label count mismatch");
  for (auto l : labels)
    if (l >= k) throw Error(ErrorKind::dimension, "label out of range");
  std::vector<std::size_t> counts;
  Matrix centroids = means(data, labels, k, counts);
  for (std::size_t empty = 0; empty < k; ++empty) {
    if (counts[empty] > 0) continue;
    std::size_t donor_point = data.cols();
    double farthest = -1.0;
    for (std::size_t p = 0; p < data.cols(); ++p) {
      if (counts[labels[p]] < 2) continue;
      const double dist = column_distance_sq(data, p, centroids, labels[p]);
      if (dist > farthest) {
        farthest = dist;
        donor_point = p;
      }
    }
    if (donor_point == data.cols()) break;  // fewer points than clusters
    --counts[labels[donor_point]];
    labels[donor_point] = empty;
    counts[empty] = 1;
    centroids = means(data, labels, k, counts);
  }
  return {std::move(centroids), std::move(labels)};
}

std::vector<std::size_t> random_init_indices(std::size_t n, std::size_t k, std::uint64_t seed) {
  if (k > n) throw Error(ErrorKind::configuration, "k exceeds the number of observations");
  std::vector<std::size_t> index(n);
  std::iota(index.begin(), index.end(), std::size_t{0});
  Pcg32 rng(seed);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + rng.bounded(static_cast<std::uint32_t>(n - i));
    std::swap(index[i], index[j]);
  }
  index.resize(k);
  return index;
}

Matrix random_init(const Matrix& data, std::size_t k, std::uint64_t seed) {
  const auto index = random_init_indices(data.cols(), k, seed);
  Matrix centroids(data.rows(), k);
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t a = 0; a < data.rows(); ++a) centroids(a, c) = data(a, index[c]);
  return centroids;
}

ClusterRun lloyd(const Matrix& data, const KMeansConfig& config) {
  if (config.k == 0) throw Error(ErrorKind::configuration, "k must be positive");
  if (config.k > data.cols()) throw Error(ErrorKind::configuration, "k exceeds the number of observations");
  if (config.max_iterations == 0) throw Error(ErrorKind::configuration, "max_iterations must be positive");

  ClusterRun run;
  if (const auto* provided = std::get_if<ProvidedCentroids>(&config.init)) {
    if (provided->centroids.cols() != config.k || provided->centroids.rows() != data.rows())
      throw Error(ErrorKind::configuration, "provided centroids must be d x k");
    run.seed_centroids = provided->centroids;
  } else {
    run.seed_centroids = random_init(data, config.k, std::get<RandomObservations>(config.init).seed);
  }

  Matrix centroids = run.seed_centroids;
  std::vector<std::size_t> previous;
  for (std::size_t it = 0; it < config.max_iterations; ++it) {
    std::vector<std::size_t> labels = assignment_step(data, centroids);
    ++run.n_iter;
    if (labels == previous) {
      run.converged = true;
      break;
    }
    UpdateResult updated = update_step(data, std::move(labels), config.k);
    run.inertia_trace.push_back(inertia(data, updated.labels, updated.centroids));
    const bool unchanged = updated.centroids == centroids;
    centroids = std::move(updated.centroids);
    previous = std::move(updated.labels);
    if (unchanged) {
      run.converged = true;
      break;
    }
  }
  run.final_centroids = centroids;
  run.labels = assignment_step(data, centroids);
  run.inertia = inertia(data, run.labels, centroids);
  return run;
}

std::string to_json(const ClusterRun& run) {
  using nlohmann::json;
  json doc = {{"seed_centroids", detail::matrix_to_json(run.seed_centroids)},
              {"final_centroids", detail::matrix_to_json(run.final_centroids)},
              {"labels", run.labels},
              {"inertia", run.inertia},
              {"n_iter", run.n_iter},
              {"converged", run.converged}};
  return doc.dump();
}

}  // namespace aqoci
