#include "aqoci/qubo.hpp"

#include <cmath>
#include <string>

namespace aqoci {

void QuboProblem::check_index(std::size_t i) const {
  if (i >= num_vars_)
    throw Error(ErrorKind::dimension,
                "variable index " + std::to_string(i) + " out of range for " +
                    std::to_string(num_vars_) + " variables");
}

void QuboProblem::check_finite(double value) {
  if (!std::isfinite(value)) throw Error(ErrorKind::range, "non-finite QUBO coefficient");
}

void QuboProblem::add_linear(std::size_t i, double coefficient) {
  check_index(i);
  check_finite(coefficient);
  linear_[i] += coefficient;
}

void QuboProblem::add_quadratic(std::size_t i, std::size_t j, double coefficient) {
  check_index(i);
  check_index(j);
  check_finite(coefficient);
  if (i == j) {
    linear_[i] += coefficient;
    return;
  }
  if (j < i) std::swap(i, j);
  quadratic_[{i, j}] += coefficient;
}

void QuboProblem::add_constant(double value) {
  check_finite(value);
  constant_ += value;
}

double QuboProblem::energy(std::span<const std::uint8_t> assignment) const {
  if (assignment.size() != num_vars_)
    throw Error(ErrorKind::dimension,
                "assignment length " + std::to_string(assignment.size()) + " != num_vars " +
                    std::to_string(num_vars_));
  double total = constant_;
  for (const auto& [i, c] : linear_)
    if (assignment[i]) total += c;
  for (const auto& [ij, c] : quadratic_)
    if (assignment[ij.first] && assignment[ij.second]) total += c;
  return total;
}

double QuboProblem::max_abs_coefficient() const noexcept {
  double best = 0.0;
  for (const auto& [i, c] : linear_) best = std::max(best, std::abs(c));
  for (const auto& [ij, c] : quadratic_) best = std::max(best, std::abs(c));
  return best;
}

QuboProblem QuboProblem::scaled(double factor) const {
  check_finite(factor);
  QuboProblem out(num_vars_);
  for (const auto& [i, c] : linear_) out.linear_[i] = c * factor;
  for (const auto& [ij, c] : quadratic_) out.quadratic_[ij] = c * factor;
  out.constant_ = constant_ * factor;
  return out;
}

void IsingProblem::add_field(std::size_t i, double value) {
  if (i >= num_spins_) throw Error(ErrorKind::dimension, "spin index out of range");
  field_[i] += value;
}

void IsingProblem::add_coupling(std::size_t i, std::size_t j, double value) {
  if (i >= num_spins_ || j >= num_spins_) throw Error(ErrorKind::dimension, "spin index out of range");
  if (i == j) {
    constant_ += value;  // s^2 = 1
    return;
  }
  if (j < i) std::swap(i, j);
  coupling_[{i, j}] += value;
}

double IsingProblem::energy(std::span<const std::int8_t> spins) const {
  if (spins.size() != num_spins_) throw Error(ErrorKind::dimension, "spin vector length mismatch");
  double total = constant_;
  for (const auto& [i, h] : field_) total += h * spins[i];
  for (const auto& [ij, j] : coupling_) total += j * spins[ij.first] * spins[ij.second];
  return total;
}

IsingProblem to_ising(const QuboProblem& problem) {
  IsingProblem out(problem.num_vars());
  out.add_constant(problem.constant());
  for (const auto& [i, c] : problem.linear()) {
    out.add_constant(c / 2.0);
    out.add_field(i, c / 2.0);
  }
  for (const auto& [ij, c] : problem.quadratic()) {
    const double quarter = c / 4.0;
    out.add_constant(quarter);
    out.add_field(ij.first, quarter);
    out.add_field(ij.second, quarter);
    out.add_coupling(ij.first, ij.second, quarter);
  }
  return out;
}

SpinVector bits_to_spins(std::span<const std::uint8_t> bits) {
  SpinVector spins(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) spins[i] = bits[i] ? 1 : -1;
  return spins;
}

QuboAdjacency::QuboAdjacency(const QuboProblem& problem)
    : bias(problem.num_vars(), 0.0), offsets(problem.num_vars() + 1, 0) {
  for (const auto& [i, c] : problem.linear()) bias[i] += c;
  std::vector<std::size_t> degree(problem.num_vars(), 0);
  for (const auto& [ij, c] : problem.quadratic()) {
    ++degree[ij.first];
    ++degree[ij.second];
  }
  for (std::size_t i = 0; i < degree.size(); ++i) offsets[i + 1] = offsets[i] + degree[i];
  neighbors.resize(offsets.back());
  weights.resize(offsets.back());
  std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
  for (const auto& [ij, c] : problem.quadratic()) {
    neighbors[cursor[ij.first]] = ij.second;
    weights[cursor[ij.first]++] = c;
    neighbors[cursor[ij.second]] = ij.first;
    weights[cursor[ij.second]++] = c;
  }
}

std::vector<double> QuboAdjacency::local_fields(std::span<const std::uint8_t> x) const {
  std::vector<double> field(bias);
  for (std::size_t i = 0; i < num_vars(); ++i) {
    if (!x[i]) continue;
    for (std::size_t e = offsets[i]; e < offsets[i + 1]; ++e) field[neighbors[e]] += weights[e];
  }
  return field;
}

}  // namespace aqoci
