#pragma once

#include <map>
#include <optional>

#include "vvote/dleq.hpp"
#include "vvote/elgamal.hpp"

namespace vvote::crypto {

struct ParameterError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// t-of-n Shamir sharing of an ElGamal decryption key.  share_commitments
/// holds g^{s_i} so decryption shares can be proof-checked per peer.
struct ThresholdKeyMaterial {
  GroupElement public_key;
  uint32_t threshold = 0;
  uint32_t peer_count = 0;
  std::vector<Scalar> shares;                  // index i -> share of peer i+1
  std::vector<GroupElement> share_commitments; // g^{s_i}
  /// Dealer-mode only: the joint secret, retained for test oracles.
  std::optional<Scalar> dealer_secret;
};

/// Dealer-mode key generation: one trusted dealer samples the polynomial.
ThresholdKeyMaterial keygen_threshold(uint32_t n, uint32_t t, Rng& rng);

/// Dealerless joint generation (Feldman-style verifiable secret sharing):
/// every peer deals a polynomial; shares and the joint key are sums.
/// Functionally interchangeable with dealer mode; no party ever holds the
/// joint secret.
ThresholdKeyMaterial keygen_threshold_joint(uint32_t n, uint32_t t, Rng& rng);

struct DecryptionShare {
  uint32_t peer_index = 0;  // 1-based
  GroupElement value;       // c1^{s_i}
  DleqProof proof;
};

DecryptionShare partial_decrypt(const ThresholdKeyMaterial& km,
                                uint32_t peer_index, const Ciphertext& ct,
                                Rng& rng);

bool verify_decryption_share(const GroupElement& share_commitment,
                             const Ciphertext& ct,
                             const DecryptionShare& share);

struct CombineError : std::runtime_error {
  explicit CombineError(const std::string& what,
                        std::vector<uint32_t> bad = {})
      : std::runtime_error(what), bad_peers(std::move(bad)) {}
  std::vector<uint32_t> bad_peers;
};

/// Combines >= t proof-valid shares into the plaintext.  Shares with bad
/// proofs are rejected and identified by peer index; fewer than t valid
/// shares is a CombineError.
GroupElement combine_decrypt(const ThresholdKeyMaterial& km,
                             const Ciphertext& ct,
                             const std::vector<DecryptionShare>& shares);

/// Lagrange coefficient at zero for index i over the given index set,
/// in the ristretto scalar field.
Scalar lagrange_at_zero(uint32_t i, const std::vector<uint32_t>& indices);

}  // namespace vvote::crypto
