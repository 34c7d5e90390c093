#include <algorithm>
#include <cstdint>
#include <iostream>
#include <limits>

#include "aqoci/random.hpp"
#include "aqoci/samplers.hpp"

namespace aqoci {

namespace {

struct TabuParams {
  std::size_t tenure;
  std::size_t max_no_improve;
};

TabuParams resolve(const QuboProblem& problem, const TabuConfig& config) {
  const std::size_t n = problem.num_vars();
  std::size_t tenure = config.tenure.value_or(std::max<std::size_t>(4, n / 10));
  if (tenure >= n) {
    std::cerr << "warning: tabu tenure " << tenure << " clamped to " << n - 1 << "\n";
    tenure = n - 1;
  }
  return {tenure, config.max_no_improve.value_or(2 * n)};
}

BitVector tabu_restart(const QuboProblem& problem, const QuboAdjacency& adjacency,
                       const TabuParams& params, std::uint64_t seed) {
  const std::size_t n = adjacency.num_vars();
  Pcg32 rng(seed);
  BitVector x(n);
  for (auto& bit : x) bit = static_cast<std::uint8_t>(rng.next_u32() & 1u);
  std::vector<double> field = adjacency.local_fields(x);
  double energy = problem.energy(x);

  BitVector best = x;
  double best_energy = energy;
  // Variable i may move again once iteration > last_move[i] + tenure.
  std::vector<std::int64_t> last_move(n, std::numeric_limits<std::int64_t>::min() / 2);
  const auto tenure = static_cast<std::int64_t>(params.tenure);

  std::size_t no_improve = 0;
  for (std::int64_t iteration = 0; no_improve < params.max_no_improve; ++iteration) {
    std::size_t chosen = n;
    double chosen_delta = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
      const double delta = (x[i] ? -1.0 : 1.0) * field[i];
      const bool tabu = iteration <= last_move[i] + tenure;
      const bool aspirates = energy + delta < best_energy;
      if (tabu && !aspirates) continue;
      if (delta < chosen_delta) {
        chosen = i;
        chosen_delta = delta;
      }
    }
    if (chosen == n) break;

    const double sign = x[chosen] ? -1.0 : 1.0;
    x[chosen] ^= 1u;
    energy += chosen_delta;
    for (std::size_t e = adjacency.offsets[chosen]; e < adjacency.offsets[chosen + 1]; ++e)
      field[adjacency.neighbors[e]] += sign * adjacency.weights[e];
    last_move[chosen] = iteration;

    if (energy < best_energy) energy = problem.energy(x);
    if (energy < best_energy) {
      best_energy = energy;
      best = x;
      no_improve = 0;
    } else {
      ++no_improve;
    }
  }
  return best;
}

}  // namespace

static TabuParams checked_params(const QuboProblem& problem, const TabuConfig& config) {
  if (problem.num_vars() == 0) throw Error(ErrorKind::configuration, "tabu search needs at least one variable");
  if (config.restarts == 0) throw Error(ErrorKind::configuration, "restarts must be positive");
  const TabuParams params = resolve(problem, config);
  if (params.max_no_improve == 0) throw Error(ErrorKind::configuration, "max_no_improve must be positive");
  return params;
}

SampleSet tabu_search(const QuboProblem& problem, const TabuConfig& config) {
  const TabuParams params = checked_params(problem, config);
  const QuboAdjacency adjacency(problem);

  std::vector<BitVector> reads(config.restarts);
  const auto restarts = static_cast<std::int64_t>(config.restarts);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t r = 0; r < restarts; ++r)
    reads[static_cast<std::size_t>(r)] =
        tabu_restart(problem, adjacency, params, config.seed ^ static_cast<std::uint64_t>(r));
  return SampleSet::from_reads(problem, reads, "tabu");
}

SampleSet tabu_search_serial(const QuboProblem& problem, const TabuConfig& config) {
  const TabuParams params = checked_params(problem, config);
  const QuboAdjacency adjacency(problem);
  std::vector<BitVector> reads;
  reads.reserve(config.restarts);
  for (std::size_t r = 0; r < config.restarts; ++r)
    reads.push_back(tabu_restart(problem, adjacency, params, config.seed ^ r));
  return SampleSet::from_reads(problem, reads, "tabu");
}

}  // namespace aqoci
