// Serial reference vs OpenMP kernels: brute-force oracle, annealing reads,
// tabu restarts, k-means assignment and silhouette. Prints one timing line
// per pair and checks that both paths agree.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>

#include <omp.h>

#include "aqoci/data.hpp"
#include "aqoci/kmeans.hpp"
#include "aqoci/metrics.hpp"
#include "aqoci/qubo.hpp"
#include "aqoci/random.hpp"
#include "aqoci/samplers.hpp"

namespace {

double seconds(const std::function<void()>& body, int repeats) {
  const auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < repeats; ++i) body();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() / repeats;
}

aqoci::QuboProblem random_qubo(std::size_t n, std::uint64_t seed) {
  aqoci::Pcg32 rng(seed);
  aqoci::QuboProblem q(n);
  for (std::size_t i = 0; i < n; ++i) q.add_linear(i, 2.0 * rng.uniform() - 1.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) q.add_quadratic(i, j, 2.0 * rng.uniform() - 1.0);
  return q;
}

void report(const char* name, double serial, double parallel, bool agree) {
  std::printf("%-22s serial %10.4f ms  parallel %10.4f ms  speedup %5.2fx  %s\n", name, serial * 1e3,
              parallel * 1e3, serial / parallel, agree ? "agree" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  const int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
  std::printf("threads: %d\n", omp_get_max_threads());
  bool all_agree = true;

  {
    const auto q = random_qubo(18, 1);
    aqoci::MinimumResult s, p;
    const double ts = seconds([&] { s = aqoci::brute_force_minimum_serial(q); }, 1);
    const double tp = seconds([&] { p = aqoci::brute_force_minimum(q); }, repeats);
    const bool agree = s.assignment == p.assignment;
    all_agree &= agree;
    report("brute_force (n=18)", ts, tp, agree);
  }
  {
    const auto q = random_qubo(200, 2);
    aqoci::AnnealConfig config;
    config.num_reads = 16;
    config.sweeps = 500;
    aqoci::SampleSet s, p;
    const double ts = seconds([&] { s = aqoci::simulated_annealing_serial(q, config); }, repeats);
    const double tp = seconds([&] { p = aqoci::simulated_annealing(q, config); }, repeats);
    const bool agree = s == p;
    all_agree &= agree;
    report("anneal (n=200)", ts, tp, agree);
  }
  {
    const auto q = random_qubo(200, 3);
    aqoci::TabuConfig config;
    config.restarts = 16;
    aqoci::SampleSet s, p;
    const double ts = seconds([&] { s = aqoci::tabu_search_serial(q, config); }, repeats);
    const double tp = seconds([&] { p = aqoci::tabu_search(q, config); }, repeats);
    const bool agree = s == p;
    all_agree &= agree;
    report("tabu (n=200)", ts, tp, agree);
  }
  const aqoci::Dataset blobs = aqoci::make_blobs(4000, 8, 3);
  const aqoci::Matrix centroids = aqoci::random_init(blobs.points, 8, 5);
  {
    std::vector<std::size_t> s, p;
    const double ts = seconds([&] { s = aqoci::assignment_step_serial(blobs.points, centroids); }, repeats * 10);
    const double tp = seconds([&] { p = aqoci::assignment_step(blobs.points, centroids); }, repeats * 10);
    const bool agree = s == p;
    all_agree &= agree;
    report("assignment (n=4000)", ts, tp, agree);
  }
  {
    const auto labels = aqoci::assignment_step(blobs.points, centroids);
    double s = 0, p = 0;
    const double ts = seconds([&] { s = aqoci::silhouette_serial(blobs.points, labels); }, 1);
    const double tp = seconds([&] { p = aqoci::silhouette(blobs.points, labels); }, repeats);
    const bool agree = std::abs(s - p) < 1e-12;
    all_agree &= agree;
    report("silhouette (n=4000)", ts, tp, agree);
  }
  return all_agree ? 0 : 1;
}
