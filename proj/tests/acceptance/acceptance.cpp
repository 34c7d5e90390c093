// Acceptance run: one PASS/FAIL line per criterion. Exit status is non-zero
// when a hard criterion fails; the iteration-count ordering is soft and only
// reported.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "aqoci/bench.hpp"
#include "oracles.hpp"

using namespace aqoci;

namespace {

// Pinned tolerances and budgets.
constexpr double kObjectiveTol = 1e-6;
constexpr double kMinimizerTol = 1e-9;
constexpr int kDeskInstances = 20;
constexpr double kDeskSeconds = 60.0;

constexpr int kSamplerInstances = 50;
constexpr double kSamplerHitRate = 0.90;
constexpr double kSamplerSeconds = 60.0;

constexpr double kContractionBound = 15.0 / 512.0;
constexpr double kContractionSeconds = 30.0;

constexpr double kInertiaSpread = 0.05;
constexpr double kSilhouetteSpread = 0.05;
constexpr double kReproductionSeconds = 600.0;

constexpr double kNoiseIterations = 1.0;
constexpr int kRandomRuns = 10;

constexpr double kMetricTol = 1e-9;
constexpr double kSymmetryTol = 1e-12;
constexpr int kLabelPairs = 200;
constexpr double kMetricSeconds = 5.0;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int hard_failures = 0;

void verdict(int id, const char* name, bool pass, const std::string& detail, bool soft = false) {
  std::printf("%s %d %s: %s\n", pass ? "PASS" : "FAIL", id, name, detail.c_str());
  std::fflush(stdout);
  if (!pass && !soft) ++hard_failures;
}

std::string format(const char* fmt, auto... args) {
  char buffer[512];
  std::snprintf(buffer, sizeof buffer, fmt, args...);
  return buffer;
}

void formulation_equivalence() {
  const auto start = Clock::now();
  std::mt19937_64 gen(20240611);
  std::uniform_real_distribution<double> value(-8.0, 7.0);
  int checked = 0, good = 0;
  double worst = 0.0;
  for (int trial = 0; checked < kDeskInstances && trial < 1000; ++trial) {
    const std::size_t d = 1 + trial % 2;
    const std::size_t n = 1 + (trial / 2) % 4;
    const std::size_t k = 1 + (trial / 8) % 2;
    const int bits = 1 + (trial / 16) % 2;
    if (n < k) continue;
    Matrix v(d, n);
    for (auto& x : v.values()) x = value(gen);
    CentroidProblem problem;
    problem.data = v;
    problem.k = k;
    problem.encoding = BitGroupEncoding::unsigned_grid(bits);
    problem.delta1 = problem.delta2 = default_penalty(v);
    const RefinementState state = initialize_state(7.0, -8.0, bits, d * k, 2.0);
    const auto entries = state.entries();
    const AssembledProblem assembled = assemble(problem, entries);
    if (assembled.qubo.num_vars() > kOracleMaxVars) continue;
    ++checked;

    const MinimumResult best = brute_force_minimum(assembled.qubo);
    const DecodedSolution out = decode_solution(best.assignment, assembled.layout, problem.encoding, entries);
    const oracle::GridOptimum optimum = oracle::grid_optimum(v, k, bits, state.scales, state.offsets);
    const double error = factorization_error(v, out.w, out.h);
    const bool grid_optimal = std::any_of(optimum.minimizers.begin(), optimum.minimizers.end(), [&](const Matrix& w) {
      for (std::size_t i = 0; i < w.values().size(); ++i)
        if (std::abs(w.values()[i] - out.w.values()[i]) > kMinimizerTol) return false;
      return true;
    });
    const double gap = std::max(std::abs(error - optimum.objective), std::abs(best.energy - error));
    worst = std::max(worst, gap);
    good += out.one_hot() && grid_optimal && gap <= kObjectiveTol;
  }
  const double elapsed = seconds_since(start);
  verdict(1, "formulation-oracle equivalence",
          checked >= kDeskInstances && good == checked && elapsed < kDeskSeconds,
          format("%d/%d desk instances one-hot and grid-optimal, max objective gap %.2e (tol %.0e), %.2f s (< %.0f s)",
                 good, checked, worst, kObjectiveTol, elapsed, kDeskSeconds));
}

void sampler_quality() {
  const auto start = Clock::now();
  int sa_hits = 0, tabu_hits = 0;
  for (int i = 0; i < kSamplerInstances; ++i) {
    const QuboProblem q = oracle::random_real_qubo(12, 5000 + static_cast<std::uint64_t>(i));
    const double target = brute_force_minimum(q).energy;
    AnnealConfig sa;
    sa.seed = static_cast<std::uint64_t>(i);
    TabuConfig tabu;
    tabu.seed = static_cast<std::uint64_t>(i);
    sa_hits += simulated_annealing(q, sa).best().energy <= target + kObjectiveTol;
    tabu_hits += tabu_search(q, tabu).best().energy <= target + kObjectiveTol;
  }
  const double elapsed = seconds_since(start);
  const int need = static_cast<int>(std::ceil(kSamplerHitRate * kSamplerInstances));
  verdict(2, "sampler quality", sa_hits >= need && tabu_hits >= need && elapsed < kSamplerSeconds,
          format("SA %d/%d, tabu %d/%d oracle minima (need %d), %.2f s (< %.0f s)", sa_hits, kSamplerInstances,
                 tabu_hits, kSamplerInstances, need, elapsed, kSamplerSeconds));
}

void loop_contraction() {
  const auto start = Clock::now();
  Matrix point(1, 1);
  point(0, 0) = 4.9;
  LoopConfig config;
  config.max_iterations = 8;
  config.sampler = SamplerChoice::oracle;
  const GridSpec grid;
  const RefinementResult result = run_refinement(point, 1, grid, config);
  const double initial = initialize_state(grid.upper, grid.lower, grid.bits, 1, grid.scale_factor).scales[0];
  bool exact_scales = result.trace.size() == 8;
  for (std::size_t k = 0; k < result.trace.size(); ++k)
    exact_scales = exact_scales && result.trace[k].scales[0] == initial / std::pow(2.0, static_cast<double>(k));
  const double error = std::abs(result.w(0, 0) - 4.9);
  const double elapsed = seconds_since(start);
  verdict(3, "adaptive-loop contraction", error <= kContractionBound && exact_scales && elapsed < kContractionSeconds,
          format("|w - 4.9| = %.6f (<= %.6f), scales initial/2^k exact: %s, %.2f s (< %.0f s)", error,
                 kContractionBound, exact_scales ? "yes" : "no", elapsed, kContractionSeconds));
}

const BenchRow* find_row(const BenchReport& report, const std::string& method, std::size_t size) {
  for (const auto& row : report.rows)
    if (row.method == method && row.sample_size == size) return &row;
  return nullptr;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void reproduction(const BenchReport& report) {
  const BenchRow* rows[] = {find_row(report, "sa", 250), find_row(report, "tabu", 250),
                            find_row(report, "random", 250)};
  if (!rows[0] || !rows[1] || !rows[2]) {
    verdict(4, "qualitative reproduction", false, "missing size-250 rows");
    return;
  }
  double lo = rows[0]->metrics.inertia, hi = lo, s_lo = *rows[0]->metrics.silhouette, s_hi = s_lo, seconds = 0.0;
  for (const BenchRow* row : rows) {
    lo = std::min(lo, row->metrics.inertia);
    hi = std::max(hi, row->metrics.inertia);
    s_lo = std::min(s_lo, *row->metrics.silhouette);
    s_hi = std::max(s_hi, *row->metrics.silhouette);
    seconds += row->wall_time_seconds;
  }
  const double spread = (hi - lo) / lo;
  verdict(4, "qualitative reproduction",
          spread <= kInertiaSpread && s_hi - s_lo <= kSilhouetteSpread && seconds < kReproductionSeconds,
          format("inertia sa %.4f tabu %.4f random %.4f (spread %.2f%% <= %.0f%%), silhouette spread %.4f (<= %.2f), "
                 "%.1f s (< %.0f s)",
                 rows[0]->metrics.inertia, rows[1]->metrics.inertia, rows[2]->metrics.inertia, 100 * spread,
                 100 * kInertiaSpread, s_hi - s_lo, kSilhouetteSpread, seconds, kReproductionSeconds));
}

void iteration_ordering(const BenchReport& report) {
  const BenchRow* sa = find_row(report, "sa", 250);
  const Dataset data = make_blobs(250, 3, 0);
  double total = 0.0;
  for (int seed = 0; seed < kRandomRuns; ++seed) {
    KMeansConfig config;
    config.k = 3;
    config.init = RandomObservations{static_cast<std::uint64_t>(seed)};
    total += static_cast<double>(lloyd(data.points, config).n_iter);
  }
  const double mean = total / kRandomRuns;
  const double sa_iter = sa ? static_cast<double>(sa->metrics.n_iter) : INFINITY;
  const bool pass = sa_iter <= mean;
  std::string detail = format("sa n_iter %.0f vs mean random n_iter %.2f over %d seeds", sa_iter, mean, kRandomRuns);
  if (!pass) detail += sa_iter - mean <= kNoiseIterations ? " (soft; within noise)" : " (soft; beyond noise)";
  verdict(5, "iteration-count ordering", pass, detail, true);
}

void metric_fixture() {
  const auto start = Clock::now();
  const double pts[6][2] = {{0, 0}, {1, 0}, {0, 1}, {5, 5}, {6, 5}, {5, 6}};
  Matrix data(2, 6);
  for (std::size_t j = 0; j < 6; ++j) {
    data(0, j) = pts[j][0];
    data(1, j) = pts[j][1];
  }
  const std::vector<std::size_t> truth{0, 0, 1, 1, 2, 2}, pred{0, 0, 0, 1, 1, 1};
  Matrix centroids(2, 2);
  centroids(0, 0) = centroids(1, 0) = 1.0 / 3.0;
  centroids(0, 1) = centroids(1, 1) = 16.0 / 3.0;
  const MetricReport m = score(data, pred, centroids, 1, truth);
  namespace fx = oracle::fixture;
  const double fixture_gap = std::max({std::abs(m.inertia - fx::kInertia), std::abs(*m.silhouette - fx::kSilhouette),
                                       std::abs(*m.homogeneity - fx::kHomogeneity),
                                       std::abs(*m.completeness - fx::kCompleteness),
                                       std::abs(*m.v_measure - fx::kVMeasure)});

  std::mt19937_64 gen(99);
  double property_gap = 0.0;
  for (int t = 0; t < kLabelPairs; ++t) {
    const std::size_t n = 2 + static_cast<std::size_t>(t) % 50;
    std::uniform_int_distribution<std::size_t> ka(0, static_cast<std::size_t>(t) % 6), kb(0, 1 + static_cast<std::size_t>(t) % 4);
    std::vector<std::size_t> a(n), b(n);
    for (auto& x : a) x = ka(gen);
    for (auto& x : b) x = kb(gen);
    std::vector<std::size_t> perm{0, 1, 2, 3, 4, 5, 6};
    std::shuffle(perm.begin(), perm.end(), gen);
    std::vector<std::size_t> moved(n);
    for (std::size_t i = 0; i < n; ++i) moved[i] = perm[b[i]] + 7;
    const EntropyScores ab = homogeneity_completeness_v(a, b), ba = homogeneity_completeness_v(b, a),
                        am = homogeneity_completeness_v(a, moved);
    const oracle::Hcv ref = oracle::homogeneity_completeness_v(a, b);
    property_gap = std::max({property_gap, std::abs(ab.homogeneity - ref.h), std::abs(ab.completeness - ref.c),
                             std::abs(ab.v_measure - ref.v), std::abs(ab.homogeneity - ba.completeness),
                             std::abs(ab.completeness - ba.homogeneity), std::abs(ab.v_measure - ba.v_measure),
                             std::abs(ab.homogeneity - am.homogeneity), std::abs(ab.completeness - am.completeness),
                             std::abs(ab.v_measure - am.v_measure)});
  }
  const double elapsed = seconds_since(start);
  verdict(6, "metric fixture",
          fixture_gap <= kMetricTol && property_gap <= kSymmetryTol && elapsed < kMetricSeconds,
          format("fixture max gap %.2e (<= %.0e), oracle/symmetry/relabel max gap over %d pairs %.2e (<= %.0e), %.3f s (< %.0f s)",
                 fixture_gap, kMetricTol, kLabelPairs, property_gap, kSymmetryTol, elapsed, kMetricSeconds));
}

}  // namespace

int main() {
  formulation_equivalence();
  sampler_quality();
  loop_contraction();

  // Two full default bench runs; criteria 4 and 5 read the first, 7 compares both.
  namespace fs = std::filesystem;
  const fs::path root = fs::current_path() / "acceptance_runs";
  fs::remove_all(root);
  ExperimentConfig config;
  config.output_dir = (root / "first").string();
  const BenchReport first = run_experiment(config);
  emit_outputs(first, config.output_dir);
  reproduction(first);
  iteration_ordering(first);

  metric_fixture();

  const auto start = Clock::now();
  config.output_dir = (root / "second").string();
  emit_outputs(run_experiment(config), config.output_dir);
  const std::string a = report_json_without_timing(read_file(root / "first" / "report.json"));
  const std::string b = report_json_without_timing(read_file(root / "second" / "report.json"));
  verdict(7, "determinism", a == b && read_file(root / "first" / "metrics.csv") == read_file(root / "second" / "metrics.csv"),
          format("report.json without timing %s, metrics.csv %s (%zu bytes), second run %.1f s",
                 a == b ? "identical" : "differs",
                 read_file(root / "first" / "metrics.csv") == read_file(root / "second" / "metrics.csv") ? "identical"
                                                                                                     : "differs",
                 a.size(), seconds_since(start)));

  std::printf("%s\n", hard_failures == 0 ? "acceptance: all hard criteria pass" : "acceptance: hard criteria failed");
  return hard_failures == 0 ? 0 : 1;
}
