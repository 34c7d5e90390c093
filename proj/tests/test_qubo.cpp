#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "aqoci/qubo.hpp"
#include "oracles.hpp"

using namespace aqoci;

namespace {

BitVector bv(std::initializer_list<int> bits) {
  BitVector out;
  for (int b : bits) out.push_back(static_cast<std::uint8_t>(b));
  return out;
}

}  // namespace

TEST_CASE("energy of constant-only and small problems") {
  QuboProblem constant_only(3);
  constant_only.add_constant(2.5);
  CHECK(constant_only.energy(bv({1, 0, 1})) == 2.5);

  QuboProblem pair(2);
  pair.add_linear(0, 1);
  pair.add_linear(1, 1);
  pair.add_quadratic(0, 1, -2);
  CHECK(pair.energy(bv({1, 1})) == 0.0);

  QuboProblem single(1);
  single.add_linear(0, -1);
  CHECK(single.energy(bv({1})) == -1.0);
}

TEST_CASE("energy rejects a wrong-length assignment") {
  QuboProblem q(3);
  try {
    (void)q.energy(bv({1, 0}));
    FAIL("expected a dimension error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::dimension);
  }
}

TEST_CASE("storage folds lower-triangular and diagonal input") {
  QuboProblem a(3);
  a.add_quadratic(2, 0, 1.5);
  a.add_quadratic(1, 1, 2.0);
  QuboProblem b(3);
  b.add_quadratic(0, 2, 1.5);
  b.add_linear(1, 2.0);
  CHECK(a == b);
  CHECK(a.quadratic().count({0, 2}) == 1);
  CHECK(a.quadratic().count({2, 0}) == 0);
}

TEST_CASE("out-of-range indices and non-finite coefficients are rejected") {
  QuboProblem q(2);
  CHECK_THROWS_AS(q.add_linear(2, 1.0), Error);
  CHECK_THROWS_AS(q.add_quadratic(0, 5, 1.0), Error);
  CHECK_THROWS_AS(q.add_linear(0, std::nan("")), Error);
  CHECK_THROWS_AS(q.add_constant(INFINITY), Error);
}

TEST_CASE("energy is independent of insertion order") {
  const QuboProblem ref = oracle::random_real_qubo(8, 11);
  std::vector<std::pair<VarPair, double>> quad(ref.quadratic().begin(), ref.quadratic().end());
  std::vector<std::pair<std::size_t, double>> lin(ref.linear().begin(), ref.linear().end());
  std::mt19937_64 gen(5);
  std::shuffle(quad.begin(), quad.end(), gen);
  std::shuffle(lin.begin(), lin.end(), gen);
  QuboProblem shuffled(8);
  for (const auto& [ij, c] : quad) shuffled.add_quadratic(ij.second, ij.first, c);
  for (const auto& [i, c] : lin) shuffled.add_linear(i, c);
  shuffled.add_constant(ref.constant());
  CHECK(shuffled == ref);
  for (std::uint64_t m = 0; m < 256; ++m) {
    const auto x = oracle::bits_of(m, 8);
    CHECK(shuffled.energy(x) == ref.energy(x));
  }
}

TEST_CASE("energy agrees with the dense oracle") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const QuboProblem q = oracle::random_real_qubo(7, seed);
    const auto d = oracle::dense(q);
    for (std::uint64_t m = 0; m < 128; ++m) {
      const auto x = oracle::bits_of(m, 7);
      CHECK(q.energy(x) == doctest::Approx(d.energy(x)).epsilon(1e-12));
    }
  }
}

TEST_CASE("brute force minimum examples") {
  QuboProblem single(1);
  single.add_linear(0, -1);
  auto r = brute_force_minimum(single);
  CHECK(r.assignment == bv({1}));
  CHECK(r.energy == -1.0);

  QuboProblem pair(2);
  pair.add_linear(0, 1);
  pair.add_linear(1, 1);
  pair.add_quadratic(0, 1, -3);
  r = brute_force_minimum(pair);
  CHECK(r.assignment == bv({1, 1}));
  CHECK(r.energy == -1.0);

  QuboProblem empty(2);
  r = brute_force_minimum(empty);
  CHECK(r.assignment == bv({0, 0}));
  CHECK(r.energy == 0.0);
}

TEST_CASE("brute force tie-break picks the lexicographically smallest vector") {
  // 01 and 10 both reach -1; bit 0 is most significant so 01 wins.
  QuboProblem q(2);
  q.add_linear(0, -1);
  q.add_linear(1, -1);
  q.add_quadratic(0, 1, 1);
  const auto r = brute_force_minimum(q);
  CHECK(r.assignment == bv({0, 1}));
  CHECK(brute_force_minimum_serial(q).assignment == bv({0, 1}));

  // Ties spread over distant enumeration blocks.
  QuboProblem wide(10);
  wide.add_linear(0, -1);
  wide.add_linear(9, -1);
  wide.add_quadratic(0, 9, 1);
  const auto rw = brute_force_minimum(wide);
  BitVector expect(10, 0);
  expect[9] = 1;
  CHECK(rw.assignment == expect);
}

TEST_CASE("brute force refuses more than 24 variables") {
  QuboProblem q(25);
  try {
    (void)brute_force_minimum(q);
    FAIL("expected an oracle-size error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::oracle_size);
  }
  CHECK_THROWS_AS((void)brute_force_minimum_serial(q), Error);
}

TEST_CASE("parallel and serial oracles agree exactly") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const std::size_t n = 3 + seed;
    const QuboProblem q = seed % 2 ? oracle::random_real_qubo(n, seed) : oracle::random_qubo(n, 0.5, 3, seed);
    const auto par = brute_force_minimum(q);
    const auto ser = brute_force_minimum_serial(q);
    CHECK(par.assignment == ser.assignment);
    CHECK(par.energy == doctest::Approx(ser.energy).epsilon(1e-12));
    CHECK(ser.energy == doctest::Approx(oracle::minimum_energy(q)).epsilon(1e-12));
  }
}

TEST_CASE("oracle minimum is below 1000 random assignments") {
  std::mt19937_64 gen(3);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const QuboProblem q = oracle::random_real_qubo(14, 100 + seed);
    const auto best = brute_force_minimum(q);
    CHECK(q.energy(best.assignment) == doctest::Approx(best.energy).epsilon(1e-12));
    for (int t = 0; t < 1000; ++t) {
      const auto x = oracle::bits_of(gen(), 14);
      CHECK(best.energy <= q.energy(x) + 1e-12);
    }
  }
}

TEST_CASE("to_ising examples") {
  QuboProblem lin(1);
  lin.add_linear(0, 1);
  const auto a = to_ising(lin);
  CHECK(a.field().at(0) == 0.5);
  CHECK(a.constant() == 0.5);
  CHECK(a.coupling().empty());

  QuboProblem quad(2);
  quad.add_quadratic(0, 1, 4);
  const auto b = to_ising(quad);
  CHECK(b.coupling().at({0, 1}) == 1.0);
  CHECK(b.field().at(0) == 1.0);
  CHECK(b.field().at(1) == 1.0);
  CHECK(b.constant() == 1.0);
}

TEST_CASE("QUBO and Ising energies agree on every assignment") {
  for (std::size_t n = 1; n <= 12; ++n) {
    const QuboProblem q = oracle::random_real_qubo(n, 40 + n);
    const IsingProblem ising = to_ising(q);
    CHECK(ising.num_spins() == n);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
      const auto x = oracle::bits_of(m, n);
      // map bits to spins by hand
      SpinVector s(n);
      for (std::size_t i = 0; i < n; ++i) s[i] = x[i] ? 1 : -1;
      REQUIRE(std::abs(ising.energy(s) - q.energy(x)) <= 1e-9);
    }
  }
}

TEST_CASE("bits_to_spins maps 1 to +1 and 0 to -1") {
  CHECK(bits_to_spins(bv({1, 0, 1})) == SpinVector{1, -1, 1});
}

TEST_CASE("local fields equal the energy change of a flip") {
  const QuboProblem q = oracle::random_real_qubo(9, 77);
  const QuboAdjacency adj(q);
  std::mt19937_64 gen(1);
  for (int t = 0; t < 20; ++t) {
    auto x = oracle::bits_of(gen(), 9);
    const auto fields = adj.local_fields(x);
    for (std::size_t i = 0; i < 9; ++i) {
      auto y = x;
      y[i] ^= 1u;
      const double delta = q.energy(y) - q.energy(x);
      const double predicted = x[i] ? -fields[i] : fields[i];
      CHECK(delta == doctest::Approx(predicted).epsilon(1e-12));
    }
  }
}

TEST_CASE("JSON round trip is exact") {
  QuboProblem q = oracle::random_real_qubo(6, 9);
  q.add_linear(2, 0.1);
  q.add_quadratic(1, 4, 1e-300);
  q.add_constant(-3.0000000000000004);
  const std::string text = to_json(q);
  CHECK(qubo_from_json(text) == q);
  CHECK(text.find("\"num_vars\"") != std::string::npos);
  CHECK(text.find("\"1,4\"") != std::string::npos);
}

TEST_CASE("malformed QUBO JSON raises a parse error") {
  try {
    (void)qubo_from_json(R"({"num_vars": 2, "quadratic": {"0-1": 1}})");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::parse);
  }
  CHECK_THROWS_AS((void)qubo_from_json("not json"), Error);
  CHECK_THROWS_AS((void)qubo_from_json(R"({"num_vars": 1, "linear": {"3": 1}})"), Error);
}
