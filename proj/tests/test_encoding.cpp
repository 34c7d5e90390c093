#include <doctest.h>

#include <cmath>
#include <set>

#include "aqoci/encoding.hpp"

using namespace aqoci;

TEST_CASE("qubit weights for two's complement codecs") {
  CHECK(FixedPointCodec(4).qubit_weights() == std::vector<double>{-8, 4, 2, 1});
  CHECK(FixedPointCodec(2).qubit_weights() == std::vector<double>{-2, 1});
  CHECK(FixedPointCodec(4).max_power() == 2);
  CHECK_THROWS_AS(FixedPointCodec(1), Error);
}

TEST_CASE("one's complement sign weight carries the low-order correction") {
  const FixedPointCodec ones(4, SignMode::ones_complement);
  CHECK(ones.qubit_weights() == std::vector<double>{-7, 4, 2, 1});
  const BitVector all{1, 1, 1, 1};
  CHECK(ones.decode_integer(all) == 0);  // the "negative zero" of one's complement
}

TEST_CASE("decode_integer examples") {
  const FixedPointCodec codec(4);
  CHECK(codec.decode_integer(BitVector{0, 0, 1, 1}) == 3);
  CHECK(codec.decode_integer(BitVector{1, 0, 0, 0}) == -8);
  CHECK(codec.decode_integer(BitVector{1, 1, 1, 1}) == -1);
  try {
    (void)codec.decode_integer(BitVector{1, 0});
    FAIL("expected a dimension error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::dimension);
  }
}

TEST_CASE("two's complement decoding is a bijection onto its range") {
  for (int bits = 2; bits <= 8; ++bits) {
    const FixedPointCodec codec(bits);
    const std::int64_t lo = -(std::int64_t{1} << (bits - 1));
    const std::int64_t hi = (std::int64_t{1} << (bits - 1)) - 1;
    CHECK(codec.min_value() == lo);
    CHECK(codec.max_value() == hi);
    std::set<std::int64_t> seen;
    for (std::uint32_t m = 0; m < (1u << bits); ++m) {
      BitVector x(bits);
      for (int i = 0; i < bits; ++i) x[i] = (m >> (bits - 1 - i)) & 1u;
      const auto v = codec.decode_integer(x);
      CHECK(v >= lo);
      CHECK(v <= hi);
      seen.insert(v);
    }
    CHECK(seen.size() == (1u << bits));
    for (std::int64_t v = lo; v <= hi; ++v) CHECK(codec.decode_integer(codec.encode_integer(v)) == v);
    CHECK_THROWS_AS((void)codec.encode_integer(hi + 1), Error);
  }
}

TEST_CASE("unsigned grid encoding reads codes 0 .. 2^bits - 1") {
  const auto grid = BitGroupEncoding::unsigned_grid(4);
  CHECK(grid.bits() == 4);
  CHECK(!grid.is_signed());
  CHECK(grid.max_code() == 15);
  CHECK(grid.decode(BitVector{1, 1, 1, 1}) == 15);
  CHECK(grid.decode(BitVector{0, 1, 1, 0}) == 6);
  CHECK(BitGroupEncoding::unsigned_grid(1).max_code() == 1);

  const auto signed_grid = BitGroupEncoding::signed_fixed_point(FixedPointCodec(4));
  CHECK(signed_grid.is_signed());
  CHECK(signed_grid.decode(BitVector{1, 1, 1, 1}) == -1);
}

TEST_CASE("to_real examples") {
  CHECK(to_real(0, {1, 0}) == 0.0);
  CHECK(to_real(3, {0.5, -1}) == 0.5);
  CHECK(to_real(15, {1, -8}) == 7.0);
}

TEST_CASE("scale must be positive and finite") {
  CHECK_THROWS_AS(ScaleOffsetEntry(0.0, 1.0), Error);
  CHECK_THROWS_AS(ScaleOffsetEntry(-1.0, 1.0), Error);
  CHECK_THROWS_AS(ScaleOffsetEntry(1.0, INFINITY), Error);
}

TEST_CASE("initial_scale examples") {
  CHECK(initial_scale(7, -8, 4) == 1.0);
  CHECK(initial_scale(1, 0, 1) == 1.0);
  CHECK(initial_scale(10, -10, 5) == doctest::Approx(20.0 / 31.0).epsilon(1e-15));
  try {
    (void)initial_scale(1, 1, 3);
    FAIL("expected a range error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::range);
  }
}

TEST_CASE("grid endpoints map to the limits") {
  const double bounds[][2] = {{-8, 7}, {0, 1}, {-10, 10}, {-2.5, 3.75}};
  for (const auto& b : bounds) {
    for (int bits = 1; bits <= 6; ++bits) {
      const ScaleOffsetEntry entry(initial_scale(b[1], b[0], bits), b[0]);
      CHECK(to_real(0, entry) == b[0]);
      CHECK(to_real((std::int64_t{1} << bits) - 1, entry) == doctest::Approx(b[1]).epsilon(1e-14));
    }
  }
}
