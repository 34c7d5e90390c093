#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "aqoci/matrix.hpp"

namespace aqoci {

// sum_p ||x_p - m_label(p)||^2
double inertia(const Matrix& data, std::span<const std::size_t> labels, const Matrix& centroids);

/// Mean silhouette with plain Euclidean distances. Points alone in their
/// cluster score 0, as does any point with a = b = 0. Needs at least two
/// distinct labels. Parallel over points; the reduction runs in point order.
double silhouette(const Matrix& data, std::span<const std::size_t> labels);
// Serial reference built on a precomputed distance matrix.
double silhouette_serial(const Matrix& data, std::span<const std::size_t> labels);

struct EntropyScores {
  double homogeneity = 0.0;
  double completeness = 0.0;
  double v_measure = 0.0;
};

// Natural-log entropies; v_measure is the harmonic mean of the other two.
EntropyScores homogeneity_completeness_v(std::span<const std::size_t> true_labels,
                                         std::span<const std::size_t> pred_labels);

struct MetricReport {
  double inertia = 0.0;
  std::optional<double> silhouette;     // undefined for a single cluster
  std::optional<double> homogeneity;    // needs ground-truth labels
  std::optional<double> completeness;
  std::optional<double> v_measure;
  std::size_t n_iter = 0;
};

MetricReport score(const Matrix& data, std::span<const std::size_t> labels, const Matrix& centroids,
                   std::size_t n_iter, const std::optional<std::vector<std::size_t>>& true_labels);

}  // namespace aqoci
