#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "aqoci/encoding.hpp"
#include "aqoci/matrix.hpp"
#include "aqoci/qubo.hpp"

namespace aqoci {

using Monomial = std::vector<std::uint32_t>;

/// Multilinear polynomial over binary variables. Monomials are kept sorted and
/// duplicate-free (x^2 = x is applied on insertion); the empty monomial holds
/// the constant.
class PseudoBooleanPoly {
 public:
  void add_term(std::span<const std::uint32_t> vars, double coefficient);
  void add_term(std::initializer_list<std::uint32_t> vars, double coefficient) {
    add_term(std::span<const std::uint32_t>(vars.begin(), vars.size()), coefficient);
  }
  void add_constant(double value) { add_term(std::span<const std::uint32_t>{}, value); }

  PseudoBooleanPoly& operator+=(const PseudoBooleanPoly& other);
  PseudoBooleanPoly scaled(double factor) const;

  const std::map<Monomial, double>& terms() const noexcept { return terms_; }
  double coefficient(const Monomial& monomial) const;
  double constant() const { return coefficient({}); }
  std::size_t degree() const noexcept;
  double evaluate(std::span<const std::uint8_t> x) const;

 private:
  std::map<Monomial, double> terms_;
};

/// Centroid seeding as V ~ W H: V is d x n (columns are samples), W is d x k
/// (columns are centroids), H is k x n with one-hot columns.
struct CentroidProblem {
  Matrix data;
  std::size_t k = 1;
  BitGroupEncoding encoding = BitGroupEncoding::unsigned_grid(4);
  double delta1 = 1.0;
  double delta2 = 1.0;
  double lambda = 1.0;
  double global_offset = 0.0;
  // When set, assemble() lifts delta1/delta2 to the exactness floors below.
  bool raise_delta1 = true;
  bool raise_delta2 = true;
  // Products h_bj h_cj with b != c are zero on every one-hot H. They are
  // dropped unless this is set, which keeps the objective cubic.
  bool cross_terms = false;

  std::size_t features() const noexcept { return data.rows(); }
  std::size_t samples() const noexcept { return data.cols(); }
  std::size_t num_weights() const noexcept { return features() * k; }

  void validate() const;
};

// 10 * (1 + max_j ||v_j||^2)
double default_penalty(const Matrix& data);

/// Variable ordering: W qubits row-major over (feature a, cluster b) with the
/// high bit first, then H qubits row-major over (cluster l, sample j), then
/// auxiliary qubits in creation order.
struct VariableLayout {
  std::size_t features = 0;
  std::size_t clusters = 0;
  std::size_t samples = 0;
  std::size_t bits = 0;
  std::vector<VarPair> aux_parents;

  VariableLayout() = default;
  VariableLayout(std::size_t d, std::size_t k, std::size_t n, std::size_t bits_per_weight)
      : features(d), clusters(k), samples(n), bits(bits_per_weight) {}

  std::size_t num_w_qubits() const noexcept { return features * clusters * bits; }
  std::size_t num_h_qubits() const noexcept { return clusters * samples; }
  std::size_t num_base_vars() const noexcept { return num_w_qubits() + num_h_qubits(); }
  std::size_t total_vars() const noexcept { return num_base_vars() + aux_parents.size(); }

  std::size_t weight_index(std::size_t a, std::size_t b) const noexcept { return a * clusters + b; }
  std::size_t w_qubit(std::size_t a, std::size_t b, std::size_t t) const noexcept {
    return weight_index(a, b) * bits + t;
  }
  std::size_t h_qubit(std::size_t l, std::size_t j) const noexcept {
    return num_w_qubits() + l * samples + j;
  }
  std::size_t aux_qubit(std::size_t m) const noexcept { return num_base_vars() + m; }

  // Sidecar JSON: {"w[a][b].bit[t]": i, "h[l][j]": i, "aux[m]": i, ...}
  std::string to_json() const;
};

PseudoBooleanPoly build_objective(const CentroidProblem& problem,
                                  std::span<const ScaleOffsetEntry> state);

struct Quadratization {
  QuboProblem qubo;
  std::vector<VarPair> aux_parents;
  // Any delta1 strictly above this keeps every minimizer aux-consistent: for
  // each aux y, the summed |coefficient| of rewritten monomials that depend on
  // y directly or through nested substitutions, maximized over y.
  double exact_delta1 = 0.0;
};

/// Rewrites every monomial of degree 3 or 4 by repeatedly substituting a fresh
/// variable y for the pair x_i x_j that occurs in the most high-degree
/// monomials (smallest pair on ties) and adding
///   delta1 * (x_i x_j - 2 x_i y - 2 x_j y + 3 y).
/// New variables are numbered from `num_vars` upward.
Quadratization reduce_to_quadratic(const PseudoBooleanPoly& poly, std::size_t num_vars,
                                   double delta1);

// delta2 * sum_j (sum_l h_lj - 1)^2
PseudoBooleanPoly one_hot_penalty(const VariableLayout& layout, double delta2);

// Largest single-sample error max_j max_b ||v_j - w_b||^2 over the grid box
// of each centroid (and ||v_j||^2 when cross terms are dropped). A delta2
// above it makes any non-one-hot column a loss.
double one_hot_floor(const CentroidProblem& problem, std::span<const ScaleOffsetEntry> state);

struct AssembledProblem {
  QuboProblem qubo;
  VariableLayout layout;
  double delta1 = 0.0;  // penalties actually applied
  double delta2 = 0.0;
};

// lambda * (quadratized objective + one-hot penalty) + global_offset.
// With raise_delta1/raise_delta2 set, a penalty at or below its floor is
// replaced by twice the floor.
AssembledProblem assemble(const CentroidProblem& problem, std::span<const ScaleOffsetEntry> state);

struct DecodedSolution {
  Matrix w;                          // d x k
  Matrix h;                          // k x n, entries 0/1
  std::vector<std::int64_t> codes;   // per weight, row-major (a, b)
  std::vector<std::size_t> invalid_columns;

  bool one_hot() const noexcept { return invalid_columns.empty(); }
};

DecodedSolution decode_solution(std::span<const std::uint8_t> bits, const VariableLayout& layout,
                                const BitGroupEncoding& encoding,
                                std::span<const ScaleOffsetEntry> state);

// sum_j || v_j - W h_j ||^2
double factorization_error(const Matrix& data, const Matrix& w, const Matrix& h);

}  // namespace aqoci
