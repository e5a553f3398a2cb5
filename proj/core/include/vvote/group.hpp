#pragma once

#include <compare>

#include "vvote/bytes.hpp"
#include "vvote/hash.hpp"
#include "vvote/rng.hpp"

namespace vvote::crypto {

/// Scalar modulo the ristretto255 group order, little-endian 32-byte form.
class Scalar {
 public:
  static constexpr size_t kSize = 32;

  Scalar() = default;  // zero
  static Scalar zero() { return Scalar(); }
  static Scalar one();
  static Scalar from_u64(uint64_t v);
  /// Reduce a 32-byte little-endian integer modulo the group order.
  static Scalar reduce32(const std::array<uint8_t, 32>& wide);
  /// Reduce a 64-byte little-endian integer modulo the group order.
  static Scalar reduce64(const std::array<uint8_t, 64>& wide);
  static Scalar random(Rng& rng);
  static Scalar from_bytes(ByteView b);  // must already be canonical

  Scalar add(const Scalar& o) const;
  Scalar sub(const Scalar& o) const;
  Scalar mul(const Scalar& o) const;
  Scalar negate() const;
  Scalar invert() const;  // throws on zero

  bool is_zero() const;
  bool operator==(const Scalar& o) const { return v_ == o.v_; }

  ByteView bytes() const { return ByteView(v_.data(), v_.size()); }
  Bytes to_bytes() const { return Bytes(v_.begin(), v_.end()); }
  std::string hex() const { return to_hex(bytes()); }

 private:
  std::array<uint8_t, kSize> v_{};
};

/// Element of the ristretto255 prime-order group in canonical 32-byte
/// encoding.  Encodings round-trip bit-exactly; the canonical total order
/// used throughout (ballot sorting, batch ordering) is byte-lexicographic
/// on this encoding.
class GroupElement {
 public:
  static constexpr size_t kSize = 32;

  GroupElement() = default;  // identity
  static GroupElement identity() { return GroupElement(); }
  static GroupElement base_point();
  static GroupElement base_mul(const Scalar& s);  // throws if s = 0
  static GroupElement from_hash(const std::array<uint8_t, 64>& h);
  static GroupElement hash_to_group(ByteView domain, ByteView data);
  static GroupElement from_bytes(ByteView b);  // validates encoding

  GroupElement add(const GroupElement& o) const;
  GroupElement sub(const GroupElement& o) const;
  /// Scalar multiplication; s must be nonzero (sodium rejects an identity
  /// result).  Multiplying the identity element returns identity.
  GroupElement mul(const Scalar& s) const;

  bool is_identity() const;
  bool operator==(const GroupElement& o) const { return v_ == o.v_; }
  std::strong_ordering operator<=>(const GroupElement& o) const {
    return v_ <=> o.v_;
  }

  ByteView bytes() const { return ByteView(v_.data(), v_.size()); }
  Bytes to_bytes() const { return Bytes(v_.begin(), v_.end()); }
  std::string hex() const { return to_hex(bytes()); }

 private:
  std::array<uint8_t, kSize> v_{};
};

/// Deterministic candidate identifier: hash-to-group of (race, name).
/// Distinctness across one election's configured candidates is checked at
/// setup.
GroupElement candidate_id(std::string_view name, std::string_view race);

/// The agreed, published padding plaintext for mix batches.
GroupElement null_plaintext();

/// SHA-256 over the in-order concatenation of 32-byte parts, interpreted as
/// a little-endian integer and reduced modulo the group order.  This is the
/// randomness-derivation hash used by the printer.
Scalar derive_randomness(const std::vector<std::array<uint8_t, 32>>& parts);

void ensure_sodium_init();

}  // namespace vvote::crypto
