#include "vvote/threshold.hpp"

#include <algorithm>
#include <set>

namespace vvote::crypto {

namespace {

std::vector<Scalar> sample_polynomial(uint32_t t, Rng& rng) {
  std::vector<Scalar> coeffs(t);
  for (auto& c : coeffs) c = Scalar::random(rng);
  while (coeffs[0].is_zero()) coeffs[0] = Scalar::random(rng);
  return coeffs;
}

Scalar eval_polynomial(const std::vector<Scalar>& coeffs, uint32_t x) {
  Scalar xs = Scalar::from_u64(x);
  Scalar acc = Scalar::zero();
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
    acc = acc.mul(xs).add(*it);
  return acc;
}

void check_params(uint32_t n, uint32_t t) {
  if (t < 1 || n < 1 || t > n)
    throw ParameterError("threshold keygen requires 1 <= t <= n");
}

}  // namespace

ThresholdKeyMaterial keygen_threshold(uint32_t n, uint32_t t, Rng& rng) {
  check_params(n, t);
  ThresholdKeyMaterial km;
  km.threshold = t;
  km.peer_count = n;
  std::vector<Scalar> poly = sample_polynomial(t, rng);
  km.dealer_secret = poly[0];
  km.public_key = GroupElement::base_mul(poly[0]);
  km.shares.resize(n);
  km.share_commitments.resize(n);
  for (uint32_t i = 1; i <= n; ++i) {
    km.shares[i - 1] = eval_polynomial(poly, i);
    km.share_commitments[i - 1] = GroupElement::base_mul(km.shares[i - 1]);
  }
  return km;
}

ThresholdKeyMaterial keygen_threshold_joint(uint32_t n, uint32_t t, Rng& rng) {
  check_params(n, t);
  ThresholdKeyMaterial km;
  km.threshold = t;
  km.peer_count = n;
  km.shares.assign(n, Scalar::zero());
  GroupElement joint = GroupElement::identity();
  // Each peer deals a polynomial; Feldman commitments to the coefficients
  // let every receiver check its share before accepting.
  for (uint32_t dealer = 1; dealer <= n; ++dealer) {
    Rng dealer_rng = rng.fork("dkg-dealer-" + std::to_string(dealer));
    std::vector<Scalar> poly = sample_polynomial(t, dealer_rng);
    std::vector<GroupElement> feldman(t);
    for (uint32_t k = 0; k < t; ++k)
      feldman[k] = GroupElement::base_mul(poly[k]);
    for (uint32_t i = 1; i <= n; ++i) {
      Scalar share = eval_polynomial(poly, i);
      // Receiver-side VSS check: g^share == prod feldman[k]^(i^k).
      GroupElement expect = GroupElement::identity();
      Scalar x = Scalar::one();
      Scalar xi = Scalar::from_u64(i);
      for (uint32_t k = 0; k < t; ++k) {
        expect = expect.add(feldman[k].mul(x));
        x = x.mul(xi);
      }
      if (!(GroupElement::base_mul(share) == expect))
        throw std::runtime_error("joint DKG: share failed VSS check");
      km.shares[i - 1] = km.shares[i - 1].add(share);
    }
    joint = joint.add(feldman[0]);
  }
  km.public_key = joint;
  km.share_commitments.resize(n);
  for (uint32_t i = 0; i < n; ++i)
    km.share_commitments[i] = GroupElement::base_mul(km.shares[i]);
  return km;
}

DecryptionShare partial_decrypt(const ThresholdKeyMaterial& km,
                                uint32_t peer_index, const Ciphertext& ct,
                                Rng& rng) {
  if (peer_index < 1 || peer_index > km.peer_count)
    throw ParameterError("partial_decrypt: bad peer index");
  const Scalar& s = km.shares[peer_index - 1];
  DecryptionShare out;
  out.peer_index = peer_index;
  out.value = ct.c1.mul(s);
  out.proof = dleq_prove(to_bytes("vvote/decrypt-share/v1"),
                         GroupElement::base_point(), ct.c1,
                         km.share_commitments[peer_index - 1], out.value, s,
                         rng);
  return out;
}

bool verify_decryption_share(const GroupElement& share_commitment,
                             const Ciphertext& ct,
                             const DecryptionShare& share) {
  return dleq_verify(to_bytes("vvote/decrypt-share/v1"),
                     GroupElement::base_point(), ct.c1, share_commitment,
                     share.value, share.proof);
}

Scalar lagrange_at_zero(uint32_t i, const std::vector<uint32_t>& indices) {
  Scalar num = Scalar::one();
  Scalar den = Scalar::one();
  Scalar xi = Scalar::from_u64(i);
  for (uint32_t j : indices) {
    if (j == i) continue;
    Scalar xj = Scalar::from_u64(j);
    num = num.mul(xj);
    den = den.mul(xj.sub(xi));
  }
  return num.mul(den.invert());
}

GroupElement combine_decrypt(const ThresholdKeyMaterial& km,
                             const Ciphertext& ct,
                             const std::vector<DecryptionShare>& shares) {
  std::vector<const DecryptionShare*> valid;
  std::vector<uint32_t> bad;
  std::set<uint32_t> seen;
  for (const auto& s : shares) {
    if (s.peer_index < 1 || s.peer_index > km.peer_count || seen.count(s.peer_index))
      continue;
    if (verify_decryption_share(km.share_commitments[s.peer_index - 1], ct,
                                s)) {
      valid.push_back(&s);
      seen.insert(s.peer_index);
    } else {
      bad.push_back(s.peer_index);
    }
  }
  if (valid.size() < km.threshold)
    throw CombineError("combine_decrypt: fewer than t valid shares", bad);
  valid.resize(km.threshold);
  std::vector<uint32_t> indices;
  indices.reserve(valid.size());
  for (const auto* s : valid) indices.push_back(s->peer_index);
  GroupElement acc = GroupElement::identity();
  for (const auto* s : valid)
    acc = acc.add(s->value.mul(lagrange_at_zero(s->peer_index, indices)));
  return ct.c2.sub(acc);
}

}  // namespace vvote::crypto
