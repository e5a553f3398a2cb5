#include "vvote/rng.hpp"

#include <stdexcept>

namespace vvote {

Rng::Rng(ByteView seed_material) : seed_(sha256(seed_material)) {}

Rng Rng::fork(std::string_view label) const {
  Bytes m;
  append(m, ByteView(seed_.data(), seed_.size()));
  append(m, to_bytes("/"));
  append(m, to_bytes(label));
  return Rng(sha256(m));
}

void Rng::fill(std::span<uint8_t> out) {
  size_t off = 0;
  while (off < out.size()) {
    if (pos_ >= buffer_.size()) {
      Bytes m(seed_.begin(), seed_.end());
      append_u64be(m, counter_++);
      Digest block = sha256(m);
      buffer_.assign(block.begin(), block.end());
      pos_ = 0;
    }
    size_t take = std::min(out.size() - off, buffer_.size() - pos_);
    std::copy(buffer_.begin() + pos_, buffer_.begin() + pos_ + take,
              out.begin() + off);
    pos_ += take;
    off += take;
  }
}

Bytes Rng::bytes(size_t n) {
  Bytes out(n);
  fill(out);
  return out;
}

std::array<uint8_t, 32> Rng::block32() {
  std::array<uint8_t, 32> out{};
  fill(out);
  return out;
}

std::array<uint8_t, 64> Rng::block64() {
  std::array<uint8_t, 64> out{};
  fill(out);
  return out;
}

uint64_t Rng::next_u64() {
  std::array<uint8_t, 8> b{};
  fill(b);
  uint64_t v = 0;
  for (uint8_t x : b) v = (v << 8) | x;
  return v;
}

uint64_t Rng::uniform(uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::uniform: bound = 0");
  uint64_t limit = UINT64_MAX - (UINT64_MAX % bound);
  for (;;) {
    uint64_t v = next_u64();
    if (v < limit) return v % bound;
  }
}

std::vector<size_t> Rng::permutation(size_t n) {
  std::vector<size_t> p(n);
  for (size_t i = 0; i < n; ++i) p[i] = i;
  for (size_t i = n; i > 1; --i) {
    size_t j = uniform(i);
    std::swap(p[i - 1], p[j]);
  }
  return p;
}

}  // namespace vvote
