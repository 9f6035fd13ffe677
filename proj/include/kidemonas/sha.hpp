#pragma once

#include <cstddef>

#include "kidemonas/bytes.hpp"

namespace kidemonas::crypto {

enum class HashAlg { sha1, sha256 };

constexpr std::size_t digest_length(HashAlg alg) {
  return alg == HashAlg::sha1 ? 20 : 32;
}

const char* hash_alg_name(HashAlg alg);
HashAlg hash_alg_from_name(std::string_view name);  // throws std::invalid_argument

/// Fixed-length hash output tagged with its algorithm.
struct Digest {
  HashAlg algorithm;
  Bytes bytes;  // size == digest_length(algorithm)

  static Digest zero(HashAlg alg) { return {alg, Bytes(digest_length(alg), 0)}; }
  bool operator==(const Digest&) const = default;
};

Bytes sha1(std::span<const std::uint8_t> data);
Bytes sha256(std::span<const std::uint8_t> data);
Digest hash(std::span<const std::uint8_t> data, HashAlg alg);

}  // namespace kidemonas::crypto
