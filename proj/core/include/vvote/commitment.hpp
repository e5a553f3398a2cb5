#pragma once

#include "vvote/bytes.hpp"
#include "vvote/hash.hpp"

namespace vvote::crypto {

/// Hash commitment: digest = SHA-256(R || m) with a 256-bit witness R.
struct Commitment {
  Digest digest{};

  bool operator==(const Commitment& o) const { return digest == o.digest; }
  std::string hex() const { return digest_hex(digest); }
  static Commitment from_hex(std::string_view h);
};

using Witness = std::array<uint8_t, 32>;

Commitment commit(ByteView message, const Witness& witness);
bool verify_commitment(const Commitment& c, ByteView message,
                       const Witness& witness);

}  // namespace vvote::crypto
