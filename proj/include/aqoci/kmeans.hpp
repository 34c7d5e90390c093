#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "aqoci/matrix.hpp"

namespace aqoci {

struct RandomObservations {
  std::uint64_t seed = 0;
};

struct ProvidedCentroids {
  Matrix centroids;  // d x k
};

struct KMeansConfig {
  std::size_t k = 3;
  std::size_t max_iterations = 300;
  std::variant<RandomObservations, ProvidedCentroids> init = RandomObservations{};
};

struct ClusterRun {
  Matrix seed_centroids;
  Matrix final_centroids;
  std::vector<std::size_t> labels;
  double inertia = 0.0;
  std::size_t n_iter = 0;
  bool converged = false;
  std::vector<double> inertia_trace;  // after each update step
};

// Nearest centroid by squared distance, lowest index on ties. Parallel over points.
std::vector<std::size_t> assignment_step(const Matrix& data, const Matrix& centroids);
std::vector<std::size_t> assignment_step_serial(const Matrix& data, const Matrix& centroids);

struct UpdateResult {
  Matrix centroids;
  std::vector<std::size_t> labels;  // differs from the input only where an empty cluster adopted a point
};

/// Cluster means. An empty cluster adopts the point farthest from its own
/// cluster mean (taken from clusters with more than one member, lowest index on
/// ties); the point leaves its donor before the means are recomputed.
UpdateResult update_step(const Matrix& data, std::vector<std::size_t> labels, std::size_t k);

// k distinct observations chosen by partial Fisher-Yates over PCG32.
Matrix random_init(const Matrix& data, std::size_t k, std::uint64_t seed);
std::vector<std::size_t> random_init_indices(std::size_t n, std::size_t k, std::uint64_t seed);

/// Lloyd iterations. n_iter counts assignment steps; the run converges when
/// an assignment repeats the previous labels or an update reproduces the
/// centroids exactly (the next assignment would then repeat).
ClusterRun lloyd(const Matrix& data, const KMeansConfig& config);

std::string to_json(const ClusterRun& run);

}  // namespace aqoci
