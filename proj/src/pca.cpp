#include <algorithm>
#include <cmath>
#include <numeric>

#include "aqoci/data.hpp"
#include "aqoci/error.hpp"

namespace aqoci {

namespace {

double off_diagonal_norm(const Matrix& a) {
  double sum = 0.0;
  for (std::size_t p = 0; p < a.rows(); ++p)
    for (std::size_t q = 0; q < a.cols(); ++q)
      if (p != q) sum += a(p, q) * a(p, q);
  return std::sqrt(sum);
}

}  // namespace

EigenDecomposition jacobi_eigen(const Matrix& symmetric, double tolerance, std::size_t max_sweeps) {
  const std::size_t n = symmetric.rows();
  if (symmetric.cols() != n) throw Error(ErrorKind::dimension, "eigen input must be square");
  Matrix a = symmetric;
  Matrix v(n, n);
  for (std::size_t i = 0; i < n; ++i) v(i, i) = 1.0;

  std::size_t sweeps = 0;
  while (sweeps < max_sweeps && off_diagonal_norm(a) >= tolerance) {
    ++sweeps;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (a(p, q) == 0.0) continue;
        // Rotation angle that annihilates a(p, q).
        const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return a(x, x) > a(y, y); });
  EigenDecomposition out{std::vector<double>(n), Matrix(n, n), sweeps};
  for (std::size_t i = 0; i < n; ++i) {
    out.values[i] = a(order[i], order[i]);
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, i) = v(r, order[i]);
  }
  return out;
}

Matrix covariance(const Matrix& points) {
  const std::size_t d = points.rows();
  const std::size_t n = points.cols();
  if (n < 2) throw Error(ErrorKind::dimension, "covariance needs at least two samples");
  std::vector<double> mean(d, 0.0);
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t j = 0; j < n; ++j) mean[a] += points(a, j);
    mean[a] /= static_cast<double>(n);
  }
  Matrix cov(d, d);
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = a; b < d; ++b) {
      double sum = 0.0;
      for (std::size_t j = 0; j < n; ++j) sum += (points(a, j) - mean[a]) * (points(b, j) - mean[b]);
      cov(a, b) = cov(b, a) = sum / static_cast<double>(n - 1);
    }
  }
  return cov;
}

Dataset pca_2d(const Dataset& dataset) {
  const std::size_t d = dataset.dims();
  const std::size_t n = dataset.size();
  if (d < 2) throw Error(ErrorKind::dimension, "PCA to two components needs at least two features");
  if (n < 2) throw Error(ErrorKind::dimension, "PCA needs at least two samples");

  const EigenDecomposition eig = jacobi_eigen(covariance(dataset.points));
  Matrix components(2, d);
  for (std::size_t c = 0; c < 2; ++c) {
    std::size_t lead = 0;
    for (std::size_t a = 1; a < d; ++a)
      if (std::abs(eig.vectors(a, c)) > std::abs(eig.vectors(lead, c))) lead = a;
    const double sign = eig.vectors(lead, c) < 0.0 ? -1.0 : 1.0;
    for (std::size_t a = 0; a < d; ++a) components(c, a) = sign * eig.vectors(a, c);
  }

  std::vector<double> mean(d, 0.0);
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t j = 0; j < n; ++j) mean[a] += dataset.points(a, j);
    mean[a] /= static_cast<double>(n);
  }
  Dataset out;
  out.points = Matrix(2, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t c = 0; c < 2; ++c) {
      double sum = 0.0;
      for (std::size_t a = 0; a < d; ++a) sum += components(c, a) * (dataset.points(a, j) - mean[a]);
      out.points(c, j) = sum;
    }
  out.true_labels = dataset.true_labels;
  if (const auto* csv = std::get_if<CsvProvenance>(&dataset.provenance))
    out.provenance = CsvProvenance{csv->path, true};
  else
    out.provenance = dataset.provenance;
  return out;
}

}  // namespace aqoci
