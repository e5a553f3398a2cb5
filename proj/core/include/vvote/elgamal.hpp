#pragma once

#include "vvote/group.hpp"
#include "vvote/symenc.hpp"

namespace vvote::crypto {

/// ElGamal ciphertext (c1, c2) over ristretto255.  Canonical serialization
/// is c1 || c2; the canonical order on ciphertexts is byte-lexicographic on
/// that serialization.
struct Ciphertext {
  GroupElement c1;
  GroupElement c2;

  Bytes to_bytes() const;
  static Ciphertext from_bytes(ByteView b);
  std::string hex() const { return to_hex(to_bytes()); }
  static Ciphertext from_hex(std::string_view h);

  bool operator==(const Ciphertext& o) const = default;
  std::strong_ordering operator<=>(const Ciphertext& o) const;
};

struct ElGamalKeypair {
  Scalar sk;
  GroupElement pk;
  static ElGamalKeypair generate(Rng& rng);
};

/// r must be nonzero: c2 = m * pk^r would expose m with r = 0.
Ciphertext encrypt(const GroupElement& pk, const GroupElement& m,
                   const Scalar& r);
GroupElement decrypt(const Scalar& sk, const Ciphertext& ct);
/// Re-randomisation; reencrypt(ct, 0) = ct.
Ciphertext reencrypt(const GroupElement& pk, const Ciphertext& ct,
                     const Scalar& r);

/// Hybrid public-key encryption of an arbitrary byte string (ephemeral DH +
/// AES-256-GCM).  Used to deliver randomness-table keys to the printer.
Bytes seal(const GroupElement& pk, ByteView plaintext, Rng& rng);
Bytes open_sealed(const Scalar& sk, ByteView sealed);

}  // namespace vvote::crypto
