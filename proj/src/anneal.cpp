#include <cmath>
#include <cstdint>

#include "aqoci/random.hpp"
#include "aqoci/samplers.hpp"

namespace aqoci {

namespace {

void validate(const QuboProblem& problem, const AnnealConfig& config, const BetaRange& betas) {
  if (problem.num_vars() == 0) throw Error(ErrorKind::configuration, "annealing needs at least one variable");
  if (config.num_reads == 0 || config.sweeps == 0)
    throw Error(ErrorKind::configuration, "num_reads and sweeps must be positive");
  if (!(betas.start > 0.0) || !(betas.end > 0.0) || !(betas.start < betas.end))
    throw Error(ErrorKind::configuration, "need 0 < beta_start < beta_end");
}

BitVector anneal_read(const QuboAdjacency& adjacency, const BetaRange& betas, std::size_t sweeps,
                      std::uint64_t seed) {
  const std::size_t n = adjacency.num_vars();
  Pcg32 rng(seed);
  BitVector x(n);
  for (auto& bit : x) bit = static_cast<std::uint8_t>(rng.next_u32() & 1u);
  std::vector<double> field = adjacency.local_fields(x);

  const double ratio = betas.end / betas.start;
  for (std::size_t sweep = 0; sweep < sweeps; ++sweep) {
    const double progress =
        sweeps == 1 ? 1.0 : static_cast<double>(sweep) / static_cast<double>(sweeps - 1);
    const double beta = betas.start * std::pow(ratio, progress);
    for (std::size_t i = 0; i < n; ++i) {
      const double sign = x[i] ? -1.0 : 1.0;
      const double delta = sign * field[i];
      if (delta > 0.0 && rng.uniform() >= std::exp(-beta * delta)) continue;
      x[i] ^= 1u;
      for (std::size_t e = adjacency.offsets[i]; e < adjacency.offsets[i + 1]; ++e)
        field[adjacency.neighbors[e]] += sign * adjacency.weights[e];
    }
  }
  return x;
}

}  // namespace

BetaRange resolve_betas(const QuboProblem& problem, const AnnealConfig& config) {
  double scale = problem.max_abs_coefficient();
  if (!(scale > 0.0)) scale = 1.0;
  return {config.beta_start.value_or(0.1 / scale), config.beta_end.value_or(10.0 / scale)};
}

SampleSet simulated_annealing(const QuboProblem& problem, const AnnealConfig& config) {
  const BetaRange betas = resolve_betas(problem, config);
  validate(problem, config, betas);
  const QuboAdjacency adjacency(problem);
  std::vector<BitVector> reads(config.num_reads);
  const auto num_reads = static_cast<std::int64_t>(config.num_reads);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t r = 0; r < num_reads; ++r)
    reads[static_cast<std::size_t>(r)] =
        anneal_read(adjacency, betas, config.sweeps, config.seed ^ static_cast<std::uint64_t>(r));
  return SampleSet::from_reads(problem, reads, "simulated_annealing");
}

SampleSet simulated_annealing_serial(const QuboProblem& problem, const AnnealConfig& config) {
  const BetaRange betas = resolve_betas(problem, config);
  validate(problem, config, betas);
  const QuboAdjacency adjacency(problem);
  std::vector<BitVector> reads;
  reads.reserve(config.num_reads);
  for (std::size_t r = 0; r < config.num_reads; ++r)
    reads.push_back(anneal_read(adjacency, betas, config.sweeps, config.seed ^ r));
  return SampleSet::from_reads(problem, reads, "simulated_annealing");
}

}  // namespace aqoci
