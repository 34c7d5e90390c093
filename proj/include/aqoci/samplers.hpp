#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aqoci/qubo.hpp"

namespace aqoci {

struct SampleRecord {
  BitVector assignment;
  double energy = 0.0;
  std::uint64_t occurrences = 1;

  friend bool operator==(const SampleRecord&, const SampleRecord&) = default;
};

/// Solver output. Records are unique by assignment and sorted ascending by
/// energy, then lexicographically by assignment.
class SampleSet {
 public:
  SampleSet() = default;

  // Merges duplicate reads, evaluates energies against `problem` and sorts.
  static SampleSet from_reads(const QuboProblem& problem, const std::vector<BitVector>& reads,
                              std::string source);
  // Takes records whose energies were already checked; merges and sorts.
  static SampleSet from_records(std::vector<SampleRecord> records, std::string source);

  const std::vector<SampleRecord>& records() const noexcept { return records_; }
  const SampleRecord& best() const;
  const std::string& source() const noexcept { return source_; }
  std::uint64_t total_occurrences() const noexcept;

  friend bool operator==(const SampleSet&, const SampleSet&) = default;

 private:
  std::vector<SampleRecord> records_;
  std::string source_;
};

/// Metropolis single-flip annealing with a geometric beta ramp. Unset betas
/// default to 0.1 / s and 10 / s, where s is the problem's largest absolute
/// coefficient (so 0.1 and 10 on unit-scale problems).
struct AnnealConfig {
  std::size_t num_reads = 32;
  std::size_t sweeps = 1000;
  std::optional<double> beta_start;
  std::optional<double> beta_end;
  std::uint64_t seed = 0;
};

struct BetaRange {
  double start;
  double end;
};

BetaRange resolve_betas(const QuboProblem& problem, const AnnealConfig& config);

// Reads run concurrently; read r is seeded with (seed xor r).
SampleSet simulated_annealing(const QuboProblem& problem, const AnnealConfig& config);
// Same kernel, reads executed one after another.
SampleSet simulated_annealing_serial(const QuboProblem& problem, const AnnealConfig& config);

/// Multistart tabu search. Unset fields default to tenure = max(4, n / 10)
/// and max_no_improve = 2 n.
struct TabuConfig {
  std::size_t restarts = 16;
  std::optional<std::size_t> tenure;
  std::optional<std::size_t> max_no_improve;
  std::uint64_t seed = 0;
};

SampleSet tabu_search(const QuboProblem& problem, const TabuConfig& config);
SampleSet tabu_search_serial(const QuboProblem& problem, const TabuConfig& config);

struct RemoteSolverConfig {
  std::string endpoint;
  std::string auth_token;
  double timeout_seconds = 30.0;
  bool offline_fallback = false;
};

inline constexpr const char* kSolverTokenEnv = "AQOCI_SOLVER_TOKEN";

// Token from the config when set, otherwise from AQOCI_SOLVER_TOKEN.
std::string resolve_token(const RemoteSolverConfig& config);

/// POSTs the problem JSON to <endpoint>/solve with bearer auth and validates
/// the returned records against local energies. When the endpoint cannot be
/// reached and offline_fallback is set, runs simulated annealing with
/// default settings and tags the result source "fallback".
SampleSet remote_hybrid(const QuboProblem& problem, const RemoteSolverConfig& config);

}  // namespace aqoci
