#pragma once

#include "vvote/bytes.hpp"
#include "vvote/hash.hpp"

namespace vvote {

/// Deterministic byte stream: SHA-256 in counter mode over a 32-byte seed.
/// Every source of randomness in the system draws from one of these so a
/// whole election run is reproducible from (config, scenario, seed).
class Rng {
 public:
  explicit Rng(const Digest& seed) : seed_(seed) {}
  explicit Rng(ByteView seed_material);

  /// Independent stream derived from this seed and a label.
  Rng fork(std::string_view label) const;

  void fill(std::span<uint8_t> out);
  Bytes bytes(size_t n);
  std::array<uint8_t, 32> block32();
  std::array<uint8_t, 64> block64();

  uint64_t next_u64();
  /// Uniform in [0, bound) by rejection sampling; bound > 0.
  uint64_t uniform(uint64_t bound);

  /// Fisher-Yates shuffle of indices 0..n-1.
  std::vector<size_t> permutation(size_t n);

 private:
  Digest seed_{};
  uint64_t counter_ = 0;
  Bytes buffer_;
  size_t pos_ = 0;
};

}  // namespace vvote
