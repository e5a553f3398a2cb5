#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vvote {

using Bytes = std::vector<uint8_t>;
using ByteView = std::span<const uint8_t>;

std::string to_hex(ByteView data);
Bytes from_hex(std::string_view hex);

Bytes to_bytes(std::string_view s);
std::string to_string(ByteView data);

void append(Bytes& out, ByteView data);
void append_u32be(Bytes& out, uint32_t v);
void append_u64be(Bytes& out, uint64_t v);

/// Length-prefixed field concatenation: every field is appended as
/// u32-be(length) || bytes.  This is the canonical signing serialization
/// for all protocol messages (see tests/vectors/signing_payloads.txt).
Bytes length_prefixed(const std::vector<Bytes>& fields);
Bytes length_prefixed_strings(const std::vector<std::string>& fields);

bool constant_time_equal(ByteView a, ByteView b);

}  // namespace vvote
