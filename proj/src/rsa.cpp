#include "kidemonas/rsa.hpp"

#include <gmp.h>

#include <map>
#include <mutex>
#include <tuple>
#include <utility>

#include "kidemonas/error.hpp"

namespace kidemonas::crypto {

namespace {

// Thin RAII wrapper; GMP stays an implementation detail of this file.
class Mpz {
 public:
  Mpz() { mpz_init(v_); }
  explicit Mpz(unsigned long x) { mpz_init_set_ui(v_, x); }
  Mpz(const Mpz& other) { mpz_init_set(v_, other.v_); }
  Mpz(Mpz&& other) noexcept {
    mpz_init(v_);
    mpz_swap(v_, other.v_);
  }
  Mpz& operator=(const Mpz& other) {
    if (this != &other) mpz_set(v_, other.v_);
    return *this;
  }
  Mpz& operator=(Mpz&& other) noexcept {
    mpz_swap(v_, other.v_);
    return *this;
  }
  ~Mpz() { mpz_clear(v_); }

  mpz_ptr get() { return v_; }
  mpz_srcptr get() const { return v_; }

  static Mpz from_bytes(std::span<const std::uint8_t> be) {
    Mpz out;
    mpz_import(out.v_, be.size(), 1, 1, 1, 0, be.data());
    return out;
  }

  // Fixed-width big-endian export, left-padded with zeros.
  Bytes to_bytes(std::size_t width) const {
    Bytes out(width, 0);
    std::size_t count = 0;
    std::size_t need = (mpz_sizeinbase(v_, 2) + 7) / 8;
    if (need > width) raise(Errc::decryption_failure, "integer exceeds field width");
    mpz_export(out.data() + (width - need), &count, 1, 1, 1, 0, v_);
    return out;
  }

 private:
  mpz_t v_;
};

const std::vector<unsigned>& small_primes() {
  static const std::vector<unsigned> primes = [] {
    std::vector<unsigned> out;
    std::vector<bool> composite(8192, false);
    for (unsigned i = 2; i < 8192; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (unsigned j = 2 * i; j < 8192; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

// Miller-Rabin with witnesses drawn from the caller's rng stream. 40 rounds.
bool is_probable_prime(const Mpz& n, std::size_t prime_bytes, SeededRng& rng) {
  Mpz n_minus_1, n_minus_3, r, w;
  mpz_sub_ui(n_minus_1.get(), n.get(), 1);
  mpz_sub_ui(n_minus_3.get(), n.get(), 3);
  mpz_set(r.get(), n_minus_1.get());
  unsigned long s = 0;
  while (mpz_even_p(r.get())) {
    mpz_fdiv_q_2exp(r.get(), r.get(), 1);
    ++s;
  }
  for (int round = 0; round < 40; ++round) {
    Mpz witness = Mpz::from_bytes(rng.next_bytes(prime_bytes));
    mpz_mod(witness.get(), witness.get(), n_minus_3.get());
    mpz_add_ui(witness.get(), witness.get(), 2);  // in [2, n-2]
    mpz_powm(w.get(), witness.get(), r.get(), n.get());
    if (mpz_cmp_ui(w.get(), 1) == 0 || mpz_cmp(w.get(), n_minus_1.get()) == 0) continue;
    bool hit = false;
    for (unsigned long i = 1; i < s; ++i) {
      mpz_powm_ui(w.get(), w.get(), 2, n.get());
      if (mpz_cmp(w.get(), n_minus_1.get()) == 0) {
        hit = true;
        break;
      }
    }
    if (!hit) return false;
  }
  return true;
}

// Draws candidates from the rng until one is prime and coprime with e-1
// constraints. Top two bits forced so p*q lands at full modulus width.
Mpz generate_prime(unsigned prime_bits, SeededRng& rng, const Mpz& e) {
  const std::size_t prime_bytes = prime_bits / 8;
  Mpz gcd;
  while (true) {
    Bytes buf = rng.next_bytes(prime_bytes);
    buf[0] |= 0xc0;
    buf[prime_bytes - 1] |= 0x01;
    Mpz candidate = Mpz::from_bytes(buf);

    bool composite = false;
    for (unsigned sp : small_primes()) {
      if (mpz_fdiv_ui(candidate.get(), sp) == 0) {
        composite = true;
        break;
      }
    }
    if (composite) continue;
    if (!is_probable_prime(candidate, prime_bytes, rng)) continue;

    Mpz p_minus_1;
    mpz_sub_ui(p_minus_1.get(), candidate.get(), 1);
    mpz_gcd(gcd.get(), p_minus_1.get(), e.get());
    if (mpz_cmp_ui(gcd.get(), 1) != 0) continue;
    return candidate;
  }
}

void check_modulus_bits(unsigned modulus_bits, bool allow_test_sizes) {
  const unsigned floor = allow_test_sizes ? kMinTestModulusBits : kMinModulusBits;
  if (modulus_bits % 256 != 0 || modulus_bits < floor || modulus_bits > kMaxModulusBits) {
    raise(Errc::invalid_key_size,
          "modulus_bits must be a multiple of 256 in [" + std::to_string(floor) + ", " +
              std::to_string(kMaxModulusBits) + "], got " + std::to_string(modulus_bits));
  }
}

Bytes mgf1(std::span<const std::uint8_t> seed, std::size_t length, HashAlg alg) {
  const std::size_t hlen = digest_length(alg);
  Bytes out;
  out.reserve(length + hlen);
  Bytes block(seed.size() + 4);
  std::copy(seed.begin(), seed.end(), block.begin());
  for (std::uint32_t counter = 0; out.size() < length; ++counter) {
    block[seed.size()] = static_cast<std::uint8_t>(counter >> 24);
    block[seed.size() + 1] = static_cast<std::uint8_t>(counter >> 16);
    block[seed.size() + 2] = static_cast<std::uint8_t>(counter >> 8);
    block[seed.size() + 3] = static_cast<std::uint8_t>(counter);
    Bytes digest = hash(block, alg).bytes;
    out.insert(out.end(), digest.begin(), digest.end());
  }
  out.resize(length);
  return out;
}

void xor_into(Bytes& dst, std::span<const std::uint8_t> mask) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] ^= mask[i];
}

struct KeyCache {
  std::mutex mutex;
  // (seed, stream position, bits) -> (pair, stream position after generation)
  std::map<std::tuple<std::uint64_t, std::uint64_t, unsigned>,
           std::pair<RsaKeyPair, std::uint64_t>>
      entries;
};

KeyCache& key_cache() {
  static KeyCache cache;
  return cache;
}

}  // namespace

RsaKeyPair generate_keypair(unsigned modulus_bits, SeededRng& rng, bool allow_test_sizes) {
  check_modulus_bits(modulus_bits, allow_test_sizes);
  const unsigned prime_bits = modulus_bits / 2;
  const std::size_t mod_bytes = modulus_bits / 8;
  const std::size_t prime_bytes = prime_bits / 8;

  Mpz e(kPublicExponent);
  Mpz p = generate_prime(prime_bits, rng, e);
  Mpz q;
  do {
    q = generate_prime(prime_bits, rng, e);
  } while (mpz_cmp(p.get(), q.get()) == 0);

  Mpz n, p1, q1, lambda, d, dp, dq, qinv;
  mpz_mul(n.get(), p.get(), q.get());
  mpz_sub_ui(p1.get(), p.get(), 1);
  mpz_sub_ui(q1.get(), q.get(), 1);
  mpz_lcm(lambda.get(), p1.get(), q1.get());
  if (mpz_invert(d.get(), e.get(), lambda.get()) == 0) {
    raise(Errc::invalid_key_size, "public exponent not invertible");  // unreachable by construction
  }
  mpz_mod(dp.get(), d.get(), p1.get());
  mpz_mod(dq.get(), d.get(), q1.get());
  mpz_invert(qinv.get(), q.get(), p.get());

  RsaKeyPair pair;
  pair.modulus_bits = modulus_bits;
  pair.public_part = {n.to_bytes(mod_bytes), e.to_bytes(3), modulus_bits};
  pair.private_part = {n.to_bytes(mod_bytes), d.to_bytes(mod_bytes), p.to_bytes(prime_bytes),
                       q.to_bytes(prime_bytes), dp.to_bytes(prime_bytes), dq.to_bytes(prime_bytes),
                       qinv.to_bytes(prime_bytes), modulus_bits};
  return pair;
}

RsaKeyPair generate_keypair_cached(unsigned modulus_bits, SeededRng& rng, bool allow_test_sizes) {
  auto key = std::make_tuple(rng.seed(), rng.position(), modulus_bits);
  auto& cache = key_cache();
  {
    std::lock_guard lock(cache.mutex);
    auto it = cache.entries.find(key);
    if (it != cache.entries.end()) {
      rng.seek(it->second.second);
      return it->second.first;
    }
  }
  RsaKeyPair pair = generate_keypair(modulus_bits, rng, allow_test_sizes);
  {
    std::lock_guard lock(cache.mutex);
    cache.entries.emplace(key, std::make_pair(pair, rng.position()));
  }
  return pair;
}

RsaKeyPair keypair_from_hex(std::string_view n_hex, std::string_view e_hex,
                            std::string_view d_hex, std::string_view p_hex,
                            std::string_view q_hex) {
  auto parse = [](std::string_view hex) {
    Mpz out;
    if (mpz_set_str(out.get(), std::string(hex).c_str(), 16) != 0) {
      raise(Errc::invalid_key_size, "bad hex in key component");
    }
    return out;
  };
  Mpz n = parse(n_hex), e = parse(e_hex), d = parse(d_hex), p = parse(p_hex), q = parse(q_hex);

  const std::size_t n_bits = mpz_sizeinbase(n.get(), 2);
  const unsigned modulus_bits = static_cast<unsigned>((n_bits + 255) / 256 * 256);
  check_modulus_bits(modulus_bits, /*allow_test_sizes=*/true);
  const std::size_t mod_bytes = modulus_bits / 8;
  const std::size_t prime_bytes = mod_bytes / 2;

  Mpz p1, q1, dp, dq, qinv;
  mpz_sub_ui(p1.get(), p.get(), 1);
  mpz_sub_ui(q1.get(), q.get(), 1);
  mpz_mod(dp.get(), d.get(), p1.get());
  mpz_mod(dq.get(), d.get(), q1.get());
  if (mpz_invert(qinv.get(), q.get(), p.get()) == 0) {
    raise(Errc::invalid_key_size, "q not invertible mod p");
  }

  RsaKeyPair pair;
  pair.modulus_bits = modulus_bits;
  pair.public_part = {n.to_bytes(mod_bytes), e.to_bytes(3), modulus_bits};
  pair.private_part = {n.to_bytes(mod_bytes), d.to_bytes(mod_bytes), p.to_bytes(prime_bytes),
                       q.to_bytes(prime_bytes), dp.to_bytes(prime_bytes), dq.to_bytes(prime_bytes),
                       qinv.to_bytes(prime_bytes), modulus_bits};
  return pair;
}

std::size_t oaep_capacity(unsigned modulus_bits, HashAlg alg) {
  const std::size_t k = modulus_bits / 8;
  const std::size_t overhead = 2 * digest_length(alg) + 2;
  return k > overhead ? k - overhead : 0;
}

Bytes oaep_encrypt(const RsaPublicKey& key, std::span<const std::uint8_t> plaintext,
                   SeededRng& rng, HashAlg alg) {
  const std::size_t k = key.modulus_bytes();
  const std::size_t hlen = digest_length(alg);
  const std::size_t capacity = oaep_capacity(key.modulus_bits, alg);
  if (plaintext.size() > capacity) {
    raise(Errc::message_too_long, "plaintext of " + std::to_string(plaintext.size()) +
                                      " bytes exceeds OAEP capacity of " + std::to_string(capacity));
  }

  // EME-OAEP encoding, empty label.
  Bytes db = hash({}, alg).bytes;  // lHash
  db.resize(k - hlen - 1, 0);      // zero PS
  db[k - hlen - 1 - 1 - plaintext.size()] = 0x01;
  std::copy(plaintext.begin(), plaintext.end(), db.end() - plaintext.size());

  Bytes seed = rng.next_bytes(hlen);
  xor_into(db, mgf1(seed, db.size(), alg));
  xor_into(seed, mgf1(db, hlen, alg));

  Bytes em(k, 0);
  std::copy(seed.begin(), seed.end(), em.begin() + 1);
  std::copy(db.begin(), db.end(), em.begin() + 1 + hlen);

  Mpz m = Mpz::from_bytes(em);
  Mpz n = Mpz::from_bytes(key.modulus);
  Mpz e = Mpz::from_bytes(key.public_exponent);
  Mpz c;
  mpz_powm(c.get(), m.get(), e.get(), n.get());
  return c.to_bytes(k);
}

Bytes oaep_decrypt(const RsaPrivateKey& key, std::span<const std::uint8_t> ciphertext,
                   HashAlg alg) {
  const std::size_t k = key.modulus_bytes();
  const std::size_t hlen = digest_length(alg);
  if (ciphertext.size() != k || k < 2 * hlen + 2) {
    raise(Errc::decryption_failure, "malformed ciphertext");
  }

  Mpz c = Mpz::from_bytes(ciphertext);
  Mpz n = Mpz::from_bytes(key.modulus);
  if (mpz_cmp(c.get(), n.get()) >= 0) {
    raise(Errc::decryption_failure, "malformed ciphertext");
  }

  // CRT decryption: m = mq + q*(qinv*(mp - mq) mod p)
  Mpz p = Mpz::from_bytes(key.prime_p);
  Mpz q = Mpz::from_bytes(key.prime_q);
  Mpz dp = Mpz::from_bytes(key.exp_dp);
  Mpz dq = Mpz::from_bytes(key.exp_dq);
  Mpz qinv = Mpz::from_bytes(key.coeff_qinv);
  Mpz mp, mq, h, m;
  mpz_powm(mp.get(), c.get(), dp.get(), p.get());
  mpz_powm(mq.get(), c.get(), dq.get(), q.get());
  mpz_sub(h.get(), mp.get(), mq.get());
  mpz_mul(h.get(), h.get(), qinv.get());
  mpz_mod(h.get(), h.get(), p.get());
  mpz_mul(m.get(), h.get(), q.get());
  mpz_add(m.get(), m.get(), mq.get());

  Bytes em = m.to_bytes(k);

  // EME-OAEP decoding; any failure collapses into one opaque error.
  bool bad = em[0] != 0;
  Bytes seed(em.begin() + 1, em.begin() + 1 + hlen);
  Bytes db(em.begin() + 1 + hlen, em.end());
  xor_into(seed, mgf1(db, hlen, alg));
  xor_into(db, mgf1(seed, db.size(), alg));

  Bytes lhash = hash({}, alg).bytes;
  for (std::size_t i = 0; i < hlen; ++i) bad |= db[i] != lhash[i];

  std::size_t sep = 0;
  for (std::size_t i = hlen; i < db.size(); ++i) {
    if (db[i] == 0x01) {
      sep = i;
      break;
    }
    if (db[i] != 0x00) {
      bad = true;
      break;
    }
  }
  bad |= sep == 0;
  if (bad) raise(Errc::decryption_failure, "padding check failed");
  return Bytes(db.begin() + sep + 1, db.end());
}

}  // namespace kidemonas::crypto
