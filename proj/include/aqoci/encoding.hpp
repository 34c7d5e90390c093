#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "aqoci/qubo.hpp"

namespace aqoci {

enum class SignMode { twos_complement, ones_complement };

/// Signed fixed-point encoding of one weight: a leading sign qubit followed by
/// value qubits carrying powers 2^(bits-2) ... 2^0.
///
/// The sign qubit weighs -2^(bits-1) in two's complement and
/// -2^(bits-1) + 1 in one's complement.
class FixedPointCodec {
 public:
  explicit FixedPointCodec(int bits, SignMode mode = SignMode::twos_complement);

  int bits() const noexcept { return bits_; }
  SignMode sign_mode() const noexcept { return mode_; }
  int max_power() const noexcept { return bits_ - 2; }

  // [sign weight, 2^(bits-2), ..., 2, 1]
  std::vector<double> qubit_weights() const;
  std::span<const std::int64_t> integer_weights() const noexcept { return weights_; }

  std::int64_t decode_integer(std::span<const std::uint8_t> bits) const;
  // Inverse of decode_integer over [min_value, max_value]; range error outside.
  BitVector encode_integer(std::int64_t value) const;

  std::int64_t min_value() const noexcept { return weights_.front(); }
  std::int64_t max_value() const noexcept;

 private:
  int bits_;
  SignMode mode_;
  std::vector<std::int64_t> weights_;
};

/// How a weight's bit-group is read as an integer before the per-weight
/// scale/offset map: either the unsigned grid [0, 2^bits - 1] used by the
/// adaptive loop, or a signed fixed-point codec.
class BitGroupEncoding {
 public:
  static BitGroupEncoding unsigned_grid(int bits);
  static BitGroupEncoding signed_fixed_point(const FixedPointCodec& codec);

  int bits() const noexcept { return static_cast<int>(weights_.size()); }
  bool is_signed() const noexcept { return signed_; }
  std::span<const std::int64_t> weights() const noexcept { return weights_; }
  std::int64_t decode(std::span<const std::uint8_t> bits) const;
  std::int64_t max_code() const noexcept;

 private:
  BitGroupEncoding(std::vector<std::int64_t> weights, bool is_signed)
      : weights_(std::move(weights)), signed_(is_signed) {}

  std::vector<std::int64_t> weights_;
  bool signed_;
};

/// Affine map from an integer code to a real weight: value * scale + offset.
struct ScaleOffsetEntry {
  double scale = 1.0;
  double offset = 0.0;

  ScaleOffsetEntry() = default;
  ScaleOffsetEntry(double scale_value, double offset_value);

  friend bool operator==(const ScaleOffsetEntry&, const ScaleOffsetEntry&) = default;
};

double to_real(std::int64_t value, const ScaleOffsetEntry& entry) noexcept;

// (upper - lower) / (2^bits - 1)
double initial_scale(double upper, double lower, int bits);

}  // namespace aqoci
