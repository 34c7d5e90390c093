#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "aqoci/error.hpp"

namespace aqoci {

using BitVector = std::vector<std::uint8_t>;
using SpinVector = std::vector<std::int8_t>;
using VarPair = std::pair<std::size_t, std::size_t>;

/// Quadratic pseudo-Boolean objective
///   f(x) = constant + sum_i linear[i] x_i + sum_{i<j} quadratic[(i,j)] x_i x_j
///
/// Pairs are stored strictly upper-triangular: (j, i) input is folded into
/// (i, j) and a diagonal (i, i) entry becomes a linear term since x^2 = x.
/// Coefficients that cancel to exactly zero are kept; they do not change the
/// energy and keep the stored structure independent of insertion order.
class QuboProblem {
 public:
  QuboProblem() = default;
  explicit QuboProblem(std::size_t num_vars) : num_vars_(num_vars) {}

  void add_linear(std::size_t i, double coefficient);
  void add_quadratic(std::size_t i, std::size_t j, double coefficient);
  void add_constant(double value);

  std::size_t num_vars() const noexcept { return num_vars_; }
  const std::map<std::size_t, double>& linear() const noexcept { return linear_; }
  const std::map<VarPair, double>& quadratic() const noexcept { return quadratic_; }
  double constant() const noexcept { return constant_; }

  // Evaluated in fixed index order: constant, linear terms, quadratic terms.
  double energy(std::span<const std::uint8_t> assignment) const;

  // Largest absolute linear or quadratic coefficient (0 for an empty problem).
  double max_abs_coefficient() const noexcept;

  // Every coefficient and the constant multiplied by `factor`.
  QuboProblem scaled(double factor) const;

  friend bool operator==(const QuboProblem&, const QuboProblem&) = default;

 private:
  void check_index(std::size_t i) const;
  static void check_finite(double value);

  std::size_t num_vars_ = 0;
  std::map<std::size_t, double> linear_;
  std::map<VarPair, double> quadratic_;
  double constant_ = 0.0;
};

/// Spin form E(s) = constant + sum_i field[i] s_i + sum_{i<j} coupling[(i,j)] s_i s_j
/// with s_i in {-1, +1}.
class IsingProblem {
 public:
  IsingProblem() = default;
  explicit IsingProblem(std::size_t num_spins) : num_spins_(num_spins) {}

  void add_field(std::size_t i, double value);
  void add_coupling(std::size_t i, std::size_t j, double value);
  void add_constant(double value) { constant_ += value; }

  std::size_t num_spins() const noexcept { return num_spins_; }
  const std::map<std::size_t, double>& field() const noexcept { return field_; }
  const std::map<VarPair, double>& coupling() const noexcept { return coupling_; }
  double constant() const noexcept { return constant_; }

  double energy(std::span<const std::int8_t> spins) const;

 private:
  std::size_t num_spins_ = 0;
  std::map<std::size_t, double> field_;
  std::map<VarPair, double> coupling_;
  double constant_ = 0.0;
};

// Substitutes x_i = (1 + s_i) / 2.
IsingProblem to_ising(const QuboProblem& problem);

// Bit 1 maps to spin +1, bit 0 to spin -1.
SpinVector bits_to_spins(std::span<const std::uint8_t> bits);

/// Compressed adjacency view used by the local-search kernels: per-variable
/// linear bias plus a symmetric neighbour list.
struct QuboAdjacency {
  std::vector<double> bias;
  std::vector<std::size_t> offsets;  // size num_vars + 1
  std::vector<std::size_t> neighbors;
  std::vector<double> weights;

  explicit QuboAdjacency(const QuboProblem& problem);

  std::size_t num_vars() const noexcept { return bias.size(); }

  // bias[i] + sum_j Q_ij x_j for every i.
  std::vector<double> local_fields(std::span<const std::uint8_t> x) const;
};

struct MinimumResult {
  BitVector assignment;
  double energy = 0.0;
};

inline constexpr std::size_t kOracleMaxVars = 24;

/// Exhaustive minimum over all 2^n assignments (n <= 24). Ties within a
/// relative 1e-9 of the coefficient scale resolve to the lexicographically
/// smallest bit-vector, reading bit 0 as most significant.
///
/// Parallel: the enumeration is split into prefix blocks, each walked in Gray
/// code order with incremental energies, and reduced in block order.
MinimumResult brute_force_minimum(const QuboProblem& problem);

// Serial reference: lexicographic enumeration with direct energy evaluation.
MinimumResult brute_force_minimum_serial(const QuboProblem& problem);

// JSON wire form: {"num_vars": n, "linear": {"i": c}, "quadratic": {"i,j": c}, "constant": c}
std::string to_json(const QuboProblem& problem);
QuboProblem qubo_from_json(const std::string& text);

}  // namespace aqoci
