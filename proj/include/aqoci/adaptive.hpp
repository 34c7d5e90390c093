#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "aqoci/encoding.hpp"
#include "aqoci/formulation.hpp"
#include "aqoci/matrix.hpp"
#include "aqoci/samplers.hpp"

namespace aqoci {

/// Per-weight scale/offset lists refined by the adaptive loop. Weight codes
/// are read on the unsigned grid [0, 2^bits - 1].
struct RefinementState {
  std::vector<double> scales;
  std::vector<double> offsets;
  std::size_t iteration = 0;
  std::vector<std::vector<double>> history;  // decoded weights per iteration
  double scale_factor = 2.0;
  double lower_limit = -8.0;
  double upper_limit = 7.0;
  int bits = 4;

  std::vector<ScaleOffsetEntry> entries() const;
};

RefinementState initialize_state(double upper, double lower, int bits, std::size_t num_weights,
                                 double beta);

/// Shrinks the grid pitch by `beta` and re-centres it so code `b` keeps its
/// decoded value: scale' = scale / beta, offset' = b*scale + offset - b*scale'.
ScaleOffsetEntry update_entry(std::int64_t b, const ScaleOffsetEntry& entry, int bits, double beta);

// ||current - previous|| / ||previous||; for an all-zero previous, 0 when the
// vectors are equal and +inf otherwise.
double relative_error(std::span<const double> current, std::span<const double> previous);

enum class SamplerChoice { sa, tabu, remote, oracle };

SamplerChoice parse_sampler(const std::string& name);
const char* to_string(SamplerChoice choice) noexcept;

struct GridSpec {
  int bits = 4;
  double lower = -8.0;
  double upper = 7.0;
  double scale_factor = 2.0;
};

struct LoopConfig {
  std::size_t max_iterations = 10;
  // Relative-error threshold; reported per iteration, never used to stop.
  double tolerance = 1e-3;
  SamplerChoice sampler = SamplerChoice::sa;
  AnnealConfig anneal;
  TabuConfig tabu;
  RemoteSolverConfig remote;
  // Unset: default_penalty(data), lifted each round to the exactness floors
  // (see CentroidProblem::raise_delta1). Explicit values are used verbatim.
  std::optional<double> delta1;
  std::optional<double> delta2;
  double lambda = 1.0;
  double global_offset = 0.0;
};

struct IterationRecord {
  std::size_t iteration = 0;  // 1-based
  std::vector<double> scales;   // grid used for this round
  std::vector<double> offsets;
  double best_energy = 0.0;
  double objective = 0.0;       // sum_j ||v_j - W h_j||^2 of the decoded best record
  std::vector<std::int64_t> codes;
  Matrix w;
  std::optional<double> relative_error;
  bool one_hot = true;
  std::size_t num_vars = 0;
  double delta1 = 0.0;
  double delta2 = 0.0;
  std::string source;
};

struct RefinementResult {
  Matrix w;          // d x k
  Matrix h;          // k x n, one-hot after repair
  Matrix raw_h;      // final best record as sampled
  bool one_hot = true;  // false when raw_h needed repair
  RefinementState state;
  std::vector<IterationRecord> trace;
};

SampleSet run_sampler(const QuboProblem& problem, const LoopConfig& config, std::uint64_t seed_salt);

/// Repeats assemble -> sample -> decode -> update_entry for exactly
/// max_iterations rounds and returns the last decoded centroids.
RefinementResult run_refinement(const Matrix& data, std::size_t k, const GridSpec& grid,
                                const LoopConfig& config);

// Per-column argmax of sample-weighted h-qubit marginals (lowest index on ties).
Matrix repair_one_hot(const SampleSet& samples, const VariableLayout& layout);

std::string trace_to_json(const RefinementResult& result);

}  // namespace aqoci
