#include "aqoci/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>

#include "aqoci/error.hpp"

namespace aqoci {

namespace {

// Compact relabelling of arbitrary ids to 0..m-1 in order of first appearance.
std::vector<std::size_t> compact(std::span<const std::size_t> labels, std::size_t& count) {
  std::map<std::size_t, std::size_t> ids;
  std::vector<std::size_t> out(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const auto [it, inserted] = ids.try_emplace(labels[i], ids.size());
    out[i] = it->second;
  }
  count = ids.size();
  return out;
}

double column_distance(const Matrix& data, std::size_t a, std::size_t b) {
  return std::sqrt(column_distance_sq(data, a, data, b));
}

double point_score(double a, double b) {
  const double denom = std::max(a, b);
  return denom > 0.0 ? (b - a) / denom : 0.0;
}

void check_silhouette_input(const Matrix& data, std::span<const std::size_t> labels,
                            std::size_t clusters) {
  if (labels.size() != data.cols()) throw Error(ErrorKind::dimension, "label count mismatch");
  if (clusters < 2) throw Error(ErrorKind::undefined_metric, "silhouette needs at least two clusters");
}

double entropy(const std::vector<double>& counts, double total) {
  double h = 0.0;
  for (double c : counts)
    if (c > 0.0) h -= (c / total) * std::log(c / total);
  return h;
}

}  // namespace

double inertia(const Matrix& data, std::span<const std::size_t> labels, const Matrix& centroids) {
  if (labels.size() != data.cols() || centroids.rows() != data.rows())
    throw Error(ErrorKind::dimension, "inertia shape mismatch");
  double total = 0.0;
  for (std::size_t p = 0; p < data.cols(); ++p) {
    if (labels[p] >= centroids.cols()) throw Error(ErrorKind::dimension, "label has no centroid");
    total += column_distance_sq(data, p, centroids, labels[p]);
  }
  return total;
}

double silhouette(const Matrix& data, std::span<const std::size_t> raw_labels) {
  std::size_t clusters = 0;
  const auto labels = compact(raw_labels, clusters);
  check_silhouette_input(data, raw_labels, clusters);
  std::vector<double> sizes(clusters, 0.0);
  for (auto l : labels) sizes[l] += 1.0;

  const std::size_t n = data.cols();
  std::vector<double> scores(n, 0.0);
  const auto signed_n = static_cast<std::int64_t>(n);
#pragma omp parallel
  {
    std::vector<double> sums(clusters);
#pragma omp for schedule(static)
    for (std::int64_t sp = 0; sp < signed_n; ++sp) {
      const auto p = static_cast<std::size_t>(sp);
      std::fill(sums.begin(), sums.end(), 0.0);
      for (std::size_t q = 0; q < n; ++q)
        if (q != p) sums[labels[q]] += column_distance(data, p, q);
      const std::size_t own = labels[p];
      if (sizes[own] < 2.0) continue;
      const double a = sums[own] / (sizes[own] - 1.0);
      double b = std::numeric_limits<double>::infinity();
      for (std::size_t c = 0; c < clusters; ++c)
        if (c != own) b = std::min(b, sums[c] / sizes[c]);
      scores[p] = point_score(a, b);
    }
  }
  double total = 0.0;
  for (double s : scores) total += s;
  return total / static_cast<double>(n);
}

double silhouette_serial(const Matrix& data, std::span<const std::size_t> labels) {
  std::set<std::size_t> distinct(labels.begin(), labels.end());
  check_silhouette_input(data, labels, distinct.size());
  const std::size_t n = data.cols();
  std::vector<double> dist(n * n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) dist[p * n + q] = column_distance(data, p, q);

  double total = 0.0;
  for (std::size_t p = 0; p < n; ++p) {
    double a_sum = 0.0;
    std::size_t a_count = 0;
    for (std::size_t q = 0; q < n; ++q) {
      if (q != p && labels[q] == labels[p]) {
        a_sum += dist[p * n + q];
        ++a_count;
      }
    }
    if (a_count == 0) continue;
    double b = std::numeric_limits<double>::infinity();
    for (auto other : distinct) {
      if (other == labels[p]) continue;
      double sum = 0.0;
      std::size_t count = 0;
      for (std::size_t q = 0; q < n; ++q) {
        if (labels[q] == other) {
          sum += dist[p * n + q];
          ++count;
        }
      }
      b = std::min(b, sum / static_cast<double>(count));
    }
    total += point_score(a_sum / static_cast<double>(a_count), b);
  }
  return total / static_cast<double>(n);
}

EntropyScores homogeneity_completeness_v(std::span<const std::size_t> true_labels,
                                         std::span<const std::size_t> pred_labels) {
  if (true_labels.size() != pred_labels.size()) throw Error(ErrorKind::dimension, "label length mismatch");
  if (true_labels.empty()) throw Error(ErrorKind::dimension, "empty labelling");
  std::size_t classes = 0;
  std::size_t clusters = 0;
  const auto c = compact(true_labels, classes);
  const auto k = compact(pred_labels, clusters);

  std::vector<double> joint(classes * clusters, 0.0);
  std::vector<double> class_counts(classes, 0.0);
  std::vector<double> cluster_counts(clusters, 0.0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    joint[c[i] * clusters + k[i]] += 1.0;
    class_counts[c[i]] += 1.0;
    cluster_counts[k[i]] += 1.0;
  }
  const auto total = static_cast<double>(c.size());
  const double h_c = entropy(class_counts, total);
  const double h_k = entropy(cluster_counts, total);

  // Conditional entropies H(C|K) and H(K|C) from the contingency table.
  double h_c_given_k = 0.0;
  double h_k_given_c = 0.0;
  for (std::size_t ci = 0; ci < classes; ++ci) {
    for (std::size_t ki = 0; ki < clusters; ++ki) {
      const double nck = joint[ci * clusters + ki];
      if (nck == 0.0) continue;
      h_c_given_k -= (nck / total) * std::log(nck / cluster_counts[ki]);
      h_k_given_c -= (nck / total) * std::log(nck / class_counts[ci]);
    }
  }
  EntropyScores out;
  out.homogeneity = h_c == 0.0 ? 1.0 : 1.0 - h_c_given_k / h_c;
  out.completeness = h_k == 0.0 ? 1.0 : 1.0 - h_k_given_c / h_k;
  const double sum = out.homogeneity + out.completeness;
  out.v_measure = sum == 0.0 ? 0.0 : 2.0 * out.homogeneity * out.completeness / sum;
  return out;
}

MetricReport score(const Matrix& data, std::span<const std::size_t> labels, const Matrix& centroids,
                   std::size_t n_iter, const std::optional<std::vector<std::size_t>>& true_labels) {
  MetricReport report;
  report.inertia = inertia(data, labels, centroids);
  report.n_iter = n_iter;
  if (std::set<std::size_t>(labels.begin(), labels.end()).size() >= 2)
    report.silhouette = silhouette(data, labels);
  if (true_labels) {
    const auto scores = homogeneity_completeness_v(*true_labels, labels);
    report.homogeneity = scores.homogeneity;
    report.completeness = scores.completeness;
    report.v_measure = scores.v_measure;
  }
  return report;
}

}  // namespace aqoci
