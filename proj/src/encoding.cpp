#include "aqoci/encoding.hpp"

#include <cmath>
#include <string>

namespace aqoci {

namespace {

constexpr int kMaxBits = 62;

void check_bits(int bits, int minimum) {
  if (bits < minimum || bits > kMaxBits)
    throw Error(ErrorKind::range, "bit count " + std::to_string(bits) + " outside [" +
                                      std::to_string(minimum) + ", " + std::to_string(kMaxBits) + "]");
}

std::int64_t dot(std::span<const std::int64_t> weights, std::span<const std::uint8_t> bits) {
  if (bits.size() != weights.size())
    throw Error(ErrorKind::dimension, "bit-group length " + std::to_string(bits.size()) +
                                          " != " + std::to_string(weights.size()));
  std::int64_t total = 0;
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits[i]) total += weights[i];
  return total;
}

}  // namespace

FixedPointCodec::FixedPointCodec(int bits, SignMode mode) : bits_(bits), mode_(mode) {
  check_bits(bits, 2);
  std::int64_t sign_weight = -(std::int64_t{1} << (bits - 1));
  if (mode == SignMode::ones_complement) sign_weight += 1;
  weights_.push_back(sign_weight);
  for (int power = bits - 2; power >= 0; --power) weights_.push_back(std::int64_t{1} << power);
}

std::vector<double> FixedPointCodec::qubit_weights() const {
  return {weights_.begin(), weights_.end()};
}

std::int64_t FixedPointCodec::decode_integer(std::span<const std::uint8_t> bits) const {
  return dot(weights_, bits);
}

std::int64_t FixedPointCodec::max_value() const noexcept {
  return (std::int64_t{1} << (bits_ - 1)) - 1;
}

BitVector FixedPointCodec::encode_integer(std::int64_t value) const {
  if (value < min_value() || value > max_value())
    throw Error(ErrorKind::range, "value " + std::to_string(value) + " not representable in " +
                                      std::to_string(bits_) + " bits");
  BitVector bits(static_cast<std::size_t>(bits_), 0);
  std::int64_t rest = value;
  if (rest < 0) {
    bits[0] = 1;
    rest -= weights_[0];
  }
  for (int i = 1; i < bits_; ++i) {
    if (rest >= weights_[static_cast<std::size_t>(i)]) {
      bits[static_cast<std::size_t>(i)] = 1;
      rest -= weights_[static_cast<std::size_t>(i)];
    }
  }
  return bits;
}

BitGroupEncoding BitGroupEncoding::unsigned_grid(int bits) {
  check_bits(bits, 1);
  std::vector<std::int64_t> weights;
  for (int power = bits - 1; power >= 0; --power) weights.push_back(std::int64_t{1} << power);
  return {std::move(weights), false};
}

BitGroupEncoding BitGroupEncoding::signed_fixed_point(const FixedPointCodec& codec) {
  const auto w = codec.integer_weights();
  return {std::vector<std::int64_t>(w.begin(), w.end()), true};
}

std::int64_t BitGroupEncoding::decode(std::span<const std::uint8_t> bits) const {
  return dot(weights_, bits);
}

std::int64_t BitGroupEncoding::max_code() const noexcept {
  std::int64_t total = 0;
  for (auto w : weights_)
    if (w > 0) total += w;
  return total;
}

ScaleOffsetEntry::ScaleOffsetEntry(double scale_value, double offset_value)
    : scale(scale_value), offset(offset_value) {
  if (!(scale > 0.0) || !std::isfinite(scale))
    throw Error(ErrorKind::range, "scale must be positive and finite");
  if (!std::isfinite(offset)) throw Error(ErrorKind::range, "offset must be finite");
}

double to_real(std::int64_t value, const ScaleOffsetEntry& entry) noexcept {
  return static_cast<double>(value) * entry.scale + entry.offset;
}

double initial_scale(double upper, double lower, int bits) {
  if (!(upper > lower)) throw Error(ErrorKind::range, "upper limit must exceed lower limit");
  check_bits(bits, 1);
  return (upper - lower) / static_cast<double>((std::int64_t{1} << bits) - 1);
}

}  // namespace aqoci
