#pragma once

#include <cstdint>
#include <string_view>

#include "kidemonas/bytes.hpp"

namespace kidemonas::crypto {

/// Deterministic random byte stream in counter mode over SHA-256:
///
///   block[i] = SHA-256(seed as 8 BE bytes || i as 8 BE bytes)
///   stream   = block[0] || block[1] || ...
///
/// Identical seeds produce bit-identical streams, on any platform and in any
/// language with a SHA-256 implementation. `position()` is the number of
/// stream bytes consumed so far; `seek()` restores a prior stream position.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed);

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t position() const noexcept { return position_; }
  void seek(std::uint64_t position);

  void fill(std::span<std::uint8_t> out);
  Bytes next_bytes(std::size_t n);
  std::uint64_t next_u64();
  /// Uniform in [0, 1): next_u64 scaled by 2^-64.
  double uniform01();
  /// Uniform-ish in [0, n): modulo draw, bias negligible for desk-scale n.
  std::uint64_t next_below(std::uint64_t n);

 private:
  std::uint64_t seed_;
  std::uint64_t position_ = 0;
  std::uint64_t cached_block_ = ~0ull;
  std::uint8_t block_[32];

  const std::uint8_t* block_at(std::uint64_t index);
};

/// Stable sub-seed derivation: first 8 bytes (BE) of
/// SHA-256(parent as 8 BE bytes || label bytes).
std::uint64_t derive_seed(std::uint64_t parent, std::string_view label);

}  // namespace kidemonas::crypto
