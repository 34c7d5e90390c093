#include "aqoci/adaptive.hpp"

#include <cmath>
#include <limits>

#include <json.hpp>

#include "json_util.hpp"

#include "aqoci/random.hpp"

namespace aqoci {

std::vector<ScaleOffsetEntry> RefinementState::entries() const {
  std::vector<ScaleOffsetEntry> out;
  out.reserve(scales.size());
  for (std::size_t i = 0; i < scales.size(); ++i) out.emplace_back(scales[i], offsets[i]);
  return out;
}

RefinementState initialize_state(double upper, double lower, int bits, std::size_t num_weights,
                                 double beta) {
  if (!(beta > 1.0)) throw Error(ErrorKind::range, "scale factor must exceed 1");
  const double scale = initial_scale(upper, lower, bits);
  RefinementState state;
  state.scales.assign(num_weights, scale);
  state.offsets.assign(num_weights, lower);
  state.scale_factor = beta;
  state.lower_limit = lower;
  state.upper_limit = upper;
  state.bits = bits;
  return state;
}

ScaleOffsetEntry update_entry(std::int64_t b, const ScaleOffsetEntry& entry, int bits, double beta) {
  const std::int64_t top = (std::int64_t{1} << bits) - 1;
  if (b < 0 || b > top)
    throw Error(ErrorKind::decode, "code " + std::to_string(b) + " outside [0, " + std::to_string(top) + "]");
  if (!(beta > 1.0)) throw Error(ErrorKind::range, "scale factor must exceed 1");
  const double new_scale = entry.scale / beta;
  const double code = static_cast<double>(b);
  return {new_scale, code * entry.scale + entry.offset - code * new_scale};
}

double relative_error(std::span<const double> current, std::span<const double> previous) {
  if (current.size() != previous.size()) throw Error(ErrorKind::dimension, "iterate length mismatch");
  double diff = 0.0;
  double base = 0.0;
  for (std::size_t i = 0; i < current.size(); ++i) {
    diff += (current[i] - previous[i]) * (current[i] - previous[i]);
    base += previous[i] * previous[i];
  }
  if (base == 0.0) return diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return std::sqrt(diff) / std::sqrt(base);
}

SamplerChoice parse_sampler(const std::string& name) {
  if (name == "sa") return SamplerChoice::sa;
  if (name == "tabu") return SamplerChoice::tabu;
  if (name == "remote") return SamplerChoice::remote;
  if (name == "oracle") return SamplerChoice::oracle;
  throw Error(ErrorKind::configuration, "unknown sampler '" + name + "'");
}

const char* to_string(SamplerChoice choice) noexcept {
  switch (choice) {
    case SamplerChoice::sa: return "sa";
    case SamplerChoice::tabu: return "tabu";
    case SamplerChoice::remote: return "remote";
    case SamplerChoice::oracle: return "oracle";
  }
  return "?";
}

SampleSet run_sampler(const QuboProblem& problem, const LoopConfig& config, std::uint64_t seed_salt) {
  switch (config.sampler) {
    case SamplerChoice::sa: {
      AnnealConfig anneal = config.anneal;
      anneal.seed = mix_seed(anneal.seed, seed_salt);
      return simulated_annealing(problem, anneal);
    }
    case SamplerChoice::tabu: {
      TabuConfig tabu = config.tabu;
      tabu.seed = mix_seed(tabu.seed, seed_salt);
      return tabu_search(problem, tabu);
    }
    case SamplerChoice::remote:
      return remote_hybrid(problem, config.remote);
    case SamplerChoice::oracle: {
      MinimumResult best = brute_force_minimum(problem);
      return SampleSet::from_records({{std::move(best.assignment), best.energy, 1}}, "oracle");
    }
  }
  throw Error(ErrorKind::configuration, "unknown sampler");
}

Matrix repair_one_hot(const SampleSet& samples, const VariableLayout& layout) {
  Matrix marginal(layout.clusters, layout.samples);
  for (const auto& record : samples.records())
    for (std::size_t l = 0; l < layout.clusters; ++l)
      for (std::size_t j = 0; j < layout.samples; ++j)
        if (record.assignment[layout.h_qubit(l, j)])
          marginal(l, j) += static_cast<double>(record.occurrences);

  Matrix h(layout.clusters, layout.samples);
  for (std::size_t j = 0; j < layout.samples; ++j) {
    std::size_t arg = 0;
    for (std::size_t l = 1; l < layout.clusters; ++l)
      if (marginal(l, j) > marginal(arg, j)) arg = l;
    h(arg, j) = 1.0;
  }
  return h;
}

RefinementResult run_refinement(const Matrix& data, std::size_t k, const GridSpec& grid,
                                const LoopConfig& config) {
  if (config.max_iterations < 1) throw Error(ErrorKind::configuration, "max_iterations must be at least 1");
  CentroidProblem problem;
  problem.data = data;
  problem.k = k;
  problem.encoding = BitGroupEncoding::unsigned_grid(grid.bits);
  const double penalty = default_penalty(data);
  problem.delta1 = config.delta1.value_or(penalty);
  problem.delta2 = config.delta2.value_or(penalty);
  problem.raise_delta1 = !config.delta1.has_value();
  problem.raise_delta2 = !config.delta2.has_value();
  problem.lambda = config.lambda;
  problem.global_offset = config.global_offset;
  problem.validate();

  RefinementResult result;
  result.state = initialize_state(grid.upper, grid.lower, grid.bits, problem.num_weights(), grid.scale_factor);
  RefinementState& state = result.state;

  for (std::size_t round = 0; round < config.max_iterations; ++round) {
    const std::vector<ScaleOffsetEntry> entries = state.entries();
    const AssembledProblem assembled = assemble(problem, entries);
    const SampleSet samples = run_sampler(assembled.qubo, config, round);
    const SampleRecord& best = samples.best();
    DecodedSolution decoded = decode_solution(best.assignment, assembled.layout, problem.encoding, entries);

    IterationRecord record;
    record.iteration = round + 1;
    record.scales = state.scales;
    record.offsets = state.offsets;
    record.best_energy = best.energy;
    record.objective = factorization_error(data, decoded.w, decoded.h);
    record.codes = decoded.codes;
    record.w = decoded.w;
    record.one_hot = decoded.one_hot();
    record.num_vars = assembled.qubo.num_vars();
    record.delta1 = assembled.delta1;
    record.delta2 = assembled.delta2;
    record.source = samples.source();

    std::vector<double> current(decoded.w.values().begin(), decoded.w.values().end());
    if (!state.history.empty()) record.relative_error = relative_error(current, state.history.back());

    for (std::size_t i = 0; i < entries.size(); ++i) {
      const ScaleOffsetEntry next = update_entry(decoded.codes[i], entries[i], grid.bits, grid.scale_factor);
      state.scales[i] = next.scale;
      state.offsets[i] = next.offset;
    }
    state.history.push_back(std::move(current));
    ++state.iteration;

    result.w = decoded.w;
    result.raw_h = decoded.h;
    result.one_hot = decoded.one_hot();
    result.h = result.one_hot ? decoded.h : repair_one_hot(samples, assembled.layout);
    result.trace.push_back(std::move(record));
  }
  return result;
}

std::string trace_to_json(const RefinementResult& result) {
  using nlohmann::json;
  json iterations = json::array();
  for (const auto& it : result.trace) {
    iterations.push_back({{"iteration", it.iteration},
                          {"scales", it.scales},
                          {"offsets", it.offsets},
                          {"best_energy", it.best_energy},
                          {"objective", it.objective},
                          {"codes", it.codes},
                          {"w", detail::matrix_to_json(it.w)},
                          {"relative_error", it.relative_error ? json(*it.relative_error) : json(nullptr)},
                          {"one_hot", it.one_hot},
                          {"num_vars", it.num_vars},
                          {"delta1", it.delta1},
                          {"delta2", it.delta2},
                          {"source", it.source}});
  }
  json doc = {{"w", detail::matrix_to_json(result.w)},
              {"one_hot", result.one_hot},
              {"final_scales", result.state.scales},
              {"final_offsets", result.state.offsets},
              {"iterations", iterations}};
  return doc.dump(2);
}

}  // namespace aqoci
