#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kidemonas {

using Bytes = std::vector<std::uint8_t>;

/// Lowercase hex encoding.
std::string to_hex(std::span<const std::uint8_t> data);

/// Decodes a hex string; throws std::invalid_argument on odd length or bad digits.
Bytes from_hex(std::string_view hex);

/// Byte copy of an ASCII/UTF-8 string.
Bytes to_bytes(std::string_view text);

std::uint64_t load_u64_be(const std::uint8_t* p);
void store_u64_be(std::uint8_t* p, std::uint64_t v);

}  // namespace kidemonas
