#include "vvote/bytes.hpp"

#include <sodium.h>

#include <stdexcept>

namespace vvote {

static constexpr char kHexDigits[] = "0123456789abcdef";

std::string to_hex(ByteView data) {
  std::string out;
  out.reserve(data.size() * 2);
  for (uint8_t b : data) {
    out.push_back(kHexDigits[b >> 4]);
    out.push_back(kHexDigits[b & 0x0f]);
  }
  return out;
}

static int hex_nibble(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

Bytes from_hex(std::string_view hex) {
  if (hex.size() % 2 != 0) throw std::invalid_argument("from_hex: odd length");
  Bytes out(hex.size() / 2);
  for (size_t i = 0; i < out.size(); ++i) {
    int hi = hex_nibble(hex[2 * i]);
    int lo = hex_nibble(hex[2 * i + 1]);
    if (hi < 0 || lo < 0) throw std::invalid_argument("from_hex: bad digit");
    out[i] = static_cast<uint8_t>((hi << 4) | lo);
  }
  return out;
}

Bytes to_bytes(std::string_view s) { return Bytes(s.begin(), s.end()); }

std::string to_string(ByteView data) {
  return std::string(data.begin(), data.end());
}

void append(Bytes& out, ByteView data) {
  out.insert(out.end(), data.begin(), data.end());
}

void append_u32be(Bytes& out, uint32_t v) {
  out.push_back(static_cast<uint8_t>(v >> 24));
  out.push_back(static_cast<uint8_t>(v >> 16));
  out.push_back(static_cast<uint8_t>(v >> 8));
  out.push_back(static_cast<uint8_t>(v));
}

void append_u64be(Bytes& out, uint64_t v) {
  append_u32be(out, static_cast<uint32_t>(v >> 32));
  append_u32be(out, static_cast<uint32_t>(v));
}

Bytes length_prefixed(const std::vector<Bytes>& fields) {
  Bytes out;
  for (const Bytes& f : fields) {
    append_u32be(out, static_cast<uint32_t>(f.size()));
    append(out, f);
  }
  return out;
}

Bytes length_prefixed_strings(const std::vector<std::string>& fields) {
  Bytes out;
  for (const std::string& f : fields) {
    append_u32be(out, static_cast<uint32_t>(f.size()));
    append(out, to_bytes(f));
  }
  return out;
}

bool constant_time_equal(ByteView a, ByteView b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  return sodium_memcmp(a.data(), b.data(), a.size()) == 0;
}

}  // namespace vvote
