#include <bit>
#include <cmath>
#include <cstdint>
#include <string>

#include "aqoci/qubo.hpp"

namespace aqoci {

namespace {

struct Candidate {
  double energy = 0.0;
  std::uint64_t code = 0;
  bool valid = false;
};

double tie_tolerance(const QuboProblem& problem) {
  double scale = 1.0 + std::abs(problem.constant());
  for (const auto& [i, c] : problem.linear()) scale += std::abs(c);
  for (const auto& [ij, c] : problem.quadratic()) scale += std::abs(c);
  return 1e-9 * scale;
}

// Lower energy wins; near-equal energies fall back to the smaller code.
bool improves(double energy, std::uint64_t code, const Candidate& best, double tol) {
  if (!best.valid) return true;
  if (energy < best.energy - tol) return true;
  return std::abs(energy - best.energy) <= tol && code < best.code;
}

void check_size(const QuboProblem& problem) {
  if (problem.num_vars() > kOracleMaxVars)
    throw Error(ErrorKind::oracle_size, "brute-force oracle limited to " +
                                            std::to_string(kOracleMaxVars) + " variables, got " +
                                            std::to_string(problem.num_vars()));
}

// Bit 0 of the assignment is the most significant bit of the code.
BitVector decode_code(std::uint64_t code, std::size_t n) {
  BitVector bits(n);
  for (std::size_t i = 0; i < n; ++i) bits[i] = static_cast<std::uint8_t>((code >> (n - 1 - i)) & 1u);
  return bits;
}

}  // namespace

MinimumResult brute_force_minimum(const QuboProblem& problem) {
  check_size(problem);
  const std::size_t n = problem.num_vars();
  if (n == 0) return {{}, problem.constant()};

  const QuboAdjacency adjacency(problem);
  const double tol = tie_tolerance(problem);
  const std::size_t prefix_bits = std::min<std::size_t>(n, 6);
  const std::size_t low_bits = n - prefix_bits;
  const std::int64_t num_blocks = std::int64_t{1} << prefix_bits;
  std::vector<Candidate> block_best(static_cast<std::size_t>(num_blocks));

#pragma omp parallel for schedule(dynamic)
  for (std::int64_t block = 0; block < num_blocks; ++block) {
    BitVector x = decode_code(static_cast<std::uint64_t>(block) << low_bits, n);
    std::vector<double> field = adjacency.local_fields(x);
    double energy = problem.energy(x);
    std::uint64_t gray = 0;
    Candidate best{energy, static_cast<std::uint64_t>(block) << low_bits, true};
    const std::uint64_t steps = std::uint64_t{1} << low_bits;
    for (std::uint64_t t = 1; t < steps; ++t) {
      const auto bit = static_cast<std::size_t>(std::countr_zero(t));
      const std::size_t v = n - 1 - bit;
      const double sign = x[v] ? -1.0 : 1.0;
      energy += sign * field[v];
      x[v] ^= 1u;
      for (std::size_t e = adjacency.offsets[v]; e < adjacency.offsets[v + 1]; ++e)
        field[adjacency.neighbors[e]] += sign * adjacency.weights[e];
      gray ^= std::uint64_t{1} << bit;
      const std::uint64_t code = (static_cast<std::uint64_t>(block) << low_bits) | gray;
      if (improves(energy, code, best, tol)) best = {energy, code, true};
    }
    block_best[static_cast<std::size_t>(block)] = best;
  }

  Candidate best;
  for (const auto& candidate : block_best)
    if (improves(candidate.energy, candidate.code, best, tol)) best = candidate;

  MinimumResult result{decode_code(best.code, n), 0.0};
  result.energy = problem.energy(result.assignment);
  return result;
}

MinimumResult brute_force_minimum_serial(const QuboProblem& problem) {
  check_size(problem);
  const std::size_t n = problem.num_vars();
  const double tol = tie_tolerance(problem);
  const std::uint64_t total = std::uint64_t{1} << n;
  MinimumResult best{decode_code(0, n), 0.0};
  best.energy = problem.energy(best.assignment);
  for (std::uint64_t code = 1; code < total; ++code) {
    BitVector x = decode_code(code, n);
    const double energy = problem.energy(x);
    if (energy < best.energy - tol) best = {std::move(x), energy};
  }
  return best;
}

}  // namespace aqoci
