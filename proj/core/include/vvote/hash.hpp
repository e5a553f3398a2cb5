#pragma once

#include "vvote/bytes.hpp"

namespace vvote {

using Digest = std::array<uint8_t, 32>;

Digest sha256(ByteView data);
Digest sha256(const std::vector<ByteView>& parts);

/// 64 bytes derived from one input: SHA-256(0x00 || m) || SHA-256(0x01 || m).
/// Used where a 64-byte uniform string is needed (hash-to-group input).
std::array<uint8_t, 64> sha256_expand(ByteView data);

Bytes digest_bytes(const Digest& d);
std::string digest_hex(const Digest& d);

}  // namespace vvote
