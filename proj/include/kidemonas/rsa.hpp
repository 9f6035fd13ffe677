#pragma once

#include <cstdint>

#include "kidemonas/bytes.hpp"
#include "kidemonas/rng.hpp"
#include "kidemonas/sha.hpp"

namespace kidemonas::crypto {

inline constexpr unsigned kDefaultModulusBits = 2048;
inline constexpr unsigned kMinModulusBits = 2048;
inline constexpr unsigned kMinTestModulusBits = 512;
inline constexpr unsigned kMaxModulusBits = 8192;
inline constexpr std::uint64_t kPublicExponent = 65537;

/// Big-endian byte encodings, fixed width of modulus_bits/8 for the modulus.
struct RsaPublicKey {
  Bytes modulus;
  Bytes public_exponent;
  unsigned modulus_bits = 0;

  std::size_t modulus_bytes() const { return modulus_bits / 8; }
  bool operator==(const RsaPublicKey&) const = default;
};

struct RsaPrivateKey {
  Bytes modulus;
  Bytes private_exponent;
  Bytes prime_p;
  Bytes prime_q;
  Bytes exp_dp;     // d mod (p-1)
  Bytes exp_dq;     // d mod (q-1)
  Bytes coeff_qinv; // q^-1 mod p
  unsigned modulus_bits = 0;

  std::size_t modulus_bytes() const { return modulus_bits / 8; }
  bool operator==(const RsaPrivateKey&) const = default;
};

struct RsaKeyPair {
  RsaPublicKey public_part;
  RsaPrivateKey private_part;
  unsigned modulus_bits = 0;

  bool operator==(const RsaKeyPair&) const = default;
};

/// Deterministic RSA key generation driven entirely by `rng`.
///
/// modulus_bits must be a multiple of 256 and at least 2048; sizes down to
/// 512 are accepted only when allow_test_sizes is set (fast test suites).
/// Primes are drawn from the rng stream with the top two bits and the low
/// bit forced, filtered by trial division, and confirmed with 40
/// Miller-Rabin rounds whose witnesses also come from the rng, so a fixed
/// (seed, size) always yields the same pair. Throws Error{invalid_key_size}.
RsaKeyPair generate_keypair(unsigned modulus_bits, SeededRng& rng,
                            bool allow_test_sizes = false);

/// Memoized variant: identical output to generate_keypair (the rng is
/// advanced exactly as if the key had been computed), but repeated calls at
/// the same (seed, position, size) skip the prime search. Used by the
/// simulation engine where identical configs re-manufacture identical TPMs.
RsaKeyPair generate_keypair_cached(unsigned modulus_bits, SeededRng& rng,
                                   bool allow_test_sizes = false);

/// Builds a keypair from externally supplied components (hex, leading zeros
/// optional). CRT exponents are derived from d, p, q. The modulus size is
/// rounded up to the next multiple of 256 bits.
RsaKeyPair keypair_from_hex(std::string_view n_hex, std::string_view e_hex,
                            std::string_view d_hex, std::string_view p_hex,
                            std::string_view q_hex);

/// Largest plaintext, in bytes, that fits one OAEP block:
/// modulus_bytes - 2*hash_len - 2. Negative capacities (tiny test moduli
/// with SHA-256) are reported as 0.
std::size_t oaep_capacity(unsigned modulus_bits, HashAlg alg);

/// RSAES-OAEP encryption (PKCS#1 v2.2, MGF1 over `alg`, empty label).
/// The pad seed is drawn from `rng`. Throws Error{message_too_long}.
Bytes oaep_encrypt(const RsaPublicKey& key, std::span<const std::uint8_t> plaintext,
                   SeededRng& rng, HashAlg alg = HashAlg::sha256);

/// RSAES-OAEP decryption. Every malformed input maps to the single opaque
/// Error{decryption_failure}; callers learn nothing about where the padding
/// check failed.
Bytes oaep_decrypt(const RsaPrivateKey& key, std::span<const std::uint8_t> ciphertext,
                   HashAlg alg = HashAlg::sha256);

}  // namespace kidemonas::crypto
