#include "kidemonas/rng.hpp"

#include <cstring>
#include <stdexcept>

#include "kidemonas/sha.hpp"

namespace kidemonas::crypto {

SeededRng::SeededRng(std::uint64_t seed) : seed_(seed) {}

void SeededRng::seek(std::uint64_t position) { position_ = position; }

const std::uint8_t* SeededRng::block_at(std::uint64_t index) {
  if (index != cached_block_) {
    std::uint8_t msg[16];
    store_u64_be(msg, seed_);
    store_u64_be(msg + 8, index);
    Bytes digest = sha256(msg);
    std::memcpy(block_, digest.data(), 32);
    cached_block_ = index;
  }
  return block_;
}

void SeededRng::fill(std::span<std::uint8_t> out) {
  std::size_t done = 0;
  while (done < out.size()) {
    std::uint64_t block = position_ / 32;
    std::size_t offset = position_ % 32;
    std::size_t take = std::min(out.size() - done, 32 - offset);
    std::memcpy(out.data() + done, block_at(block) + offset, take);
    done += take;
    position_ += take;
  }
}

Bytes SeededRng::next_bytes(std::size_t n) {
  Bytes out(n);
  fill(out);
  return out;
}

std::uint64_t SeededRng::next_u64() {
  std::uint8_t buf[8];
  fill(buf);
  return load_u64_be(buf);
}

double SeededRng::uniform01() {
  return static_cast<double>(next_u64()) * 0x1p-64;
}

std::uint64_t SeededRng::next_below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("next_below(0)");
  return next_u64() % n;
}

std::uint64_t derive_seed(std::uint64_t parent, std::string_view label) {
  Bytes msg(8 + label.size());
  store_u64_be(msg.data(), parent);
  std::memcpy(msg.data() + 8, label.data(), label.size());
  Bytes digest = sha256(msg);
  return load_u64_be(digest.data());
}

}  // namespace kidemonas::crypto
