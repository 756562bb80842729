#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace chainfund {

using Hash32 = std::array<uint8_t, 32>;

constexpr Hash32 zero_hash() { return Hash32{}; }

// Incremental SHA-256 (FIPS 180-4).
class Sha256 {
 public:
  Sha256();

  void update(const void* data, size_t len);
  Hash32 finish();

  static Hash32 digest(const void* data, size_t len);
  static Hash32 digest(std::string_view s) { return digest(s.data(), s.size()); }

 private:
  void process_block(const uint8_t* block);

  uint32_t state_[8];
  uint64_t total_len_ = 0;
  uint8_t buffer_[64];
  size_t buffer_len_ = 0;
};

std::string to_hex(const Hash32& h);
std::optional<Hash32> hash_from_hex(std::string_view hex);

}  // namespace chainfund
