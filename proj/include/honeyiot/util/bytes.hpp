// Byte-level helpers: base64, hex, SHA-256, FNV-1a.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace honeyiot {

std::string base64_encode(std::string_view data);
// Returns nullopt on any non-alphabet character or bad padding.
std::optional<std::string> base64_decode(std::string_view text);

std::string to_hex(std::string_view data);

// Lowercase hex digest.
std::string sha256_hex(std::string_view data);

inline uint64_t fnv1a64(std::string_view data, uint64_t h = 14695981039346656037ULL) {
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace honeyiot
