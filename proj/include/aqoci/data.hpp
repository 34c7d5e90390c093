#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "aqoci/matrix.hpp"

namespace aqoci {

struct BlobsProvenance {
  std::uint64_t seed = 0;
  std::size_t k = 3;
  std::size_t n = 250;
  double std = 1.0;
};

struct CsvProvenance {
  std::string path;
  bool pca = false;
};

struct Dataset {
  Matrix points;  // d x n
  std::optional<std::vector<std::size_t>> true_labels;
  std::variant<BlobsProvenance, CsvProvenance> provenance;

  std::size_t dims() const noexcept { return points.rows(); }
  std::size_t size() const noexcept { return points.cols(); }

  // First m samples (labels follow).
  Dataset head(std::size_t m) const;
  // All samples in a seeded uniform random order; head(m) of the result is a
  // draw of m samples without replacement.
  Dataset shuffled(std::uint64_t seed) const;
};

/// Two-dimensional Gaussian blobs: k centres uniform in [-10, 10]^2, point i
/// belongs to centre i mod k, isotropic N(0, std^2) offsets via Box-Muller.
Dataset make_blobs(std::size_t n, std::size_t k, std::uint64_t seed, double std = 1.0);

// Rows are samples, columns features; one optional non-numeric header row.
Dataset parse_csv(const std::string& text, const std::string& origin = "<memory>");
Dataset load_csv(const std::string& path);
void write_csv(const Dataset& dataset, const std::string& path);

struct EigenDecomposition {
  std::vector<double> values;  // descending
  Matrix vectors;              // column i pairs with values[i]
  std::size_t sweeps = 0;
};

// Cyclic Jacobi rotations until the off-diagonal Frobenius norm is below
// `tolerance` or `max_sweeps` is reached.
EigenDecomposition jacobi_eigen(const Matrix& symmetric, double tolerance = 1e-10,
                                std::size_t max_sweeps = 100);

// Sample covariance with divisor n - 1 (features x features).
Matrix covariance(const Matrix& points);

/// Projects onto the top two principal components. Each component's
/// largest-magnitude loading is made positive.
Dataset pca_2d(const Dataset& dataset);

}  // namespace aqoci
