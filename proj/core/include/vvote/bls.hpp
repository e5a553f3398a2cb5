#pragma once

#include <optional>

#include "vvote/pairing.hpp"
#include "vvote/rng.hpp"

namespace vvote::crypto {

/// Deterministic BLS signatures on the fixed pairing curve: sig = H(m)^sk.
/// Signing the same message with the same key is bit-stable, and threshold
/// combination yields the same bytes no matter which t shares are used.
struct BlsSignature {
  pairing::EPoint point;

  Bytes to_bytes() const { return point.to_bytes(); }
  std::string hex() const { return point.hex(); }
  static BlsSignature from_bytes(ByteView b) {
    return BlsSignature{pairing::EPoint::from_bytes(b)};
  }
  static BlsSignature from_hex(std::string_view h) {
    return from_bytes(vvote::from_hex(h));
  }
  bool operator==(const BlsSignature& o) const = default;
};

struct BlsPublicKey {
  pairing::EPoint point;

  Bytes to_bytes() const { return point.to_bytes(); }
  std::string hex() const { return point.hex(); }
  static BlsPublicKey from_bytes(ByteView b) {
    return BlsPublicKey{pairing::EPoint::from_bytes(b)};
  }
  static BlsPublicKey from_hex(std::string_view h) {
    return from_bytes(vvote::from_hex(h));
  }
  bool operator==(const BlsPublicKey& o) const = default;
};

struct BlsKeypair {
  mpz_class sk;
  BlsPublicKey pk;
  static BlsKeypair generate(Rng& rng);
};

BlsSignature bls_sign(const mpz_class& sk, ByteView message);
bool bls_verify(const BlsPublicKey& pk, ByteView message,
                const BlsSignature& sig);

/// t-of-n Shamir sharing of a BLS signing key.
struct BlsThresholdMaterial {
  BlsPublicKey joint_pk;
  uint32_t threshold = 0;
  uint32_t peer_count = 0;
  std::vector<mpz_class> shares;        // peer i+1 holds shares[i]
  std::vector<BlsPublicKey> share_pks;  // g^{share_i}
};

BlsThresholdMaterial bls_keygen_threshold(uint32_t n, uint32_t t, Rng& rng);
/// Dealerless variant: every peer deals; shares and joint key are sums.
BlsThresholdMaterial bls_keygen_threshold_joint(uint32_t n, uint32_t t,
                                                Rng& rng);

struct BlsSignatureShare {
  uint32_t peer_index = 0;  // 1-based
  pairing::EPoint point;

  Bytes to_bytes() const;
  static BlsSignatureShare from_bytes(ByteView b);
};

BlsSignatureShare bls_sign_share(const mpz_class& share, uint32_t peer_index,
                                 ByteView message);

bool bls_verify_share(const BlsPublicKey& share_pk, ByteView message,
                      const BlsSignatureShare& share);

struct BlsCombineError : std::runtime_error {
  explicit BlsCombineError(const std::string& what,
                           std::vector<uint32_t> bad = {})
      : std::runtime_error(what), bad_peers(std::move(bad)) {}
  std::vector<uint32_t> bad_peers;
};

/// Lagrange-combines >= t shares and checks the result under the joint key.
/// On failure every share is individually pairing-checked so the bad peers
/// can be named.
BlsSignature bls_combine(const BlsThresholdMaterial& pub, ByteView message,
                         const std::vector<BlsSignatureShare>& shares);

/// Combination without the secret material (verifier/client side): needs
/// only the joint key, share keys, and threshold.
BlsSignature bls_combine_public(const BlsPublicKey& joint_pk,
                                const std::vector<BlsPublicKey>& share_pks,
                                uint32_t threshold, ByteView message,
                                const std::vector<BlsSignatureShare>& shares);

}  // namespace vvote::crypto
