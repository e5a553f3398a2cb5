#include "vvote/group.hpp"

#include <sodium.h>

#include <stdexcept>

namespace vvote::crypto {

void ensure_sodium_init() {
  static const int rc = sodium_init();
  if (rc < 0) throw std::runtime_error("libsodium initialization failed");
}

namespace {
struct SodiumInit {
  SodiumInit() { ensure_sodium_init(); }
};
const SodiumInit g_sodium_init;
}  // namespace

Scalar Scalar::one() { return from_u64(1); }

Scalar Scalar::from_u64(uint64_t v) {
  Scalar s;
  for (size_t i = 0; i < 8; ++i)
    s.v_[i] = static_cast<uint8_t>(v >> (8 * i));
  return s;
}

Scalar Scalar::reduce32(const std::array<uint8_t, 32>& wide) {
  std::array<uint8_t, 64> w{};
  std::copy(wide.begin(), wide.end(), w.begin());
  return reduce64(w);
}

Scalar Scalar::reduce64(const std::array<uint8_t, 64>& wide) {
  Scalar s;
  crypto_core_ristretto255_scalar_reduce(s.v_.data(), wide.data());
  return s;
}

Scalar Scalar::random(Rng& rng) { return reduce64(rng.block64()); }

Scalar Scalar::from_bytes(ByteView b) {
  if (b.size() != kSize) throw std::invalid_argument("Scalar: bad length");
  std::array<uint8_t, 64> w{};
  std::copy(b.begin(), b.end(), w.begin());
  Scalar s = reduce64(w);
  if (!std::equal(b.begin(), b.end(), s.v_.begin()))
    throw std::invalid_argument("Scalar: non-canonical encoding");
  return s;
}

Scalar Scalar::add(const Scalar& o) const {
  Scalar r;
  crypto_core_ristretto255_scalar_add(r.v_.data(), v_.data(), o.v_.data());
  return r;
}

Scalar Scalar::sub(const Scalar& o) const {
  Scalar r;
  crypto_core_ristretto255_scalar_sub(r.v_.data(), v_.data(), o.v_.data());
  return r;
}

Scalar Scalar::mul(const Scalar& o) const {
  Scalar r;
  crypto_core_ristretto255_scalar_mul(r.v_.data(), v_.data(), o.v_.data());
  return r;
}

Scalar Scalar::negate() const {
  Scalar r;
  crypto_core_ristretto255_scalar_negate(r.v_.data(), v_.data());
  return r;
}

Scalar Scalar::invert() const {
  Scalar r;
  if (crypto_core_ristretto255_scalar_invert(r.v_.data(), v_.data()) != 0)
    throw std::domain_error("Scalar::invert: zero scalar");
  return r;
}

bool Scalar::is_zero() const {
  uint8_t acc = 0;
  for (uint8_t b : v_) acc |= b;
  return acc == 0;
}

GroupElement GroupElement::base_point() {
  return base_mul(Scalar::one());
}

GroupElement GroupElement::base_mul(const Scalar& s) {
  GroupElement g;
  if (crypto_scalarmult_ristretto255_base(g.v_.data(), s.bytes().data()) != 0)
    throw std::domain_error("base_mul: zero scalar");
  return g;
}

GroupElement GroupElement::from_hash(const std::array<uint8_t, 64>& h) {
  GroupElement g;
  crypto_core_ristretto255_from_hash(g.v_.data(), h.data());
  return g;
}

GroupElement GroupElement::hash_to_group(ByteView domain, ByteView data) {
  Bytes m = length_prefixed({Bytes(domain.begin(), domain.end()),
                             Bytes(data.begin(), data.end())});
  return from_hash(sha256_expand(m));
}

GroupElement GroupElement::from_bytes(ByteView b) {
  if (b.size() != kSize)
    throw std::invalid_argument("GroupElement: bad length");
  GroupElement g;
  std::copy(b.begin(), b.end(), g.v_.begin());
  if (!g.is_identity() &&
      crypto_core_ristretto255_is_valid_point(g.v_.data()) != 1)
    throw std::invalid_argument("GroupElement: invalid encoding");
  return g;
}

GroupElement GroupElement::add(const GroupElement& o) const {
  if (is_identity()) return o;
  if (o.is_identity()) return *this;
  GroupElement r;
  if (crypto_core_ristretto255_add(r.v_.data(), v_.data(), o.v_.data()) != 0)
    throw std::runtime_error("GroupElement::add failed");
  return r;
}

GroupElement GroupElement::sub(const GroupElement& o) const {
  if (o.is_identity()) return *this;
  GroupElement r;
  if (crypto_core_ristretto255_sub(r.v_.data(), v_.data(), o.v_.data()) != 0)
    throw std::runtime_error("GroupElement::sub failed");
  return r;
}

GroupElement GroupElement::mul(const Scalar& s) const {
  if (is_identity()) return identity();
  if (s.is_zero()) return identity();
  GroupElement r;
  if (crypto_scalarmult_ristretto255(r.v_.data(), s.bytes().data(),
                                     v_.data()) != 0)
    throw std::runtime_error("GroupElement::mul failed");
  return r;
}

bool GroupElement::is_identity() const {
  uint8_t acc = 0;
  for (uint8_t b : v_) acc |= b;
  return acc == 0;
}

GroupElement candidate_id(std::string_view name, std::string_view race) {
  if (name.empty()) throw std::invalid_argument("candidate_id: empty name");
  Bytes data = length_prefixed_strings({std::string(race), std::string(name)});
  return GroupElement::hash_to_group(to_bytes("vvote/candidate-id/v1"), data);
}

GroupElement null_plaintext() {
  return GroupElement::hash_to_group(to_bytes("vvote/null-plaintext/v1"), {});
}

Scalar derive_randomness(const std::vector<std::array<uint8_t, 32>>& parts) {
  if (parts.empty())
    throw std::invalid_argument("derive_randomness: no parts");
  std::vector<ByteView> views;
  views.reserve(parts.size());
  for (const auto& p : parts) views.emplace_back(p.data(), p.size());
  Digest d = sha256(views);
  std::array<uint8_t, 32> raw{};
  std::copy(d.begin(), d.end(), raw.begin());
  return Scalar::reduce32(raw);
}

}  // namespace vvote::crypto
