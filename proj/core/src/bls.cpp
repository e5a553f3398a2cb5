#include "vvote/bls.hpp"

#include <map>
#include <mutex>
#include <set>

namespace vvote::crypto {

using pairing::EPoint;
using pairing::Fp2;

namespace {

mpz_class random_scalar_mod_r(Rng& rng) {
  const mpz_class& r = pairing::params().r;
  for (;;) {
    Bytes raw = rng.bytes(40);  // 64 spare bits keep the bias negligible
    mpz_class v = pairing::mpz_from_bytes(raw);
    v %= r;
    if (v != 0) return v;
  }
}

mpz_class eval_poly_mod_r(const std::vector<mpz_class>& coeffs, uint32_t x) {
  const mpz_class& r = pairing::params().r;
  mpz_class acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = (acc * x + *it) % r;
  }
  return acc;
}

mpz_class lagrange_mod_r(uint32_t i, const std::vector<uint32_t>& indices) {
  const mpz_class& r = pairing::params().r;
  mpz_class num = 1, den = 1;
  for (uint32_t j : indices) {
    if (j == i) continue;
    num = (num * j) % r;
    mpz_class d = (mpz_class(j) - mpz_class(i)) % r;
    if (d < 0) d += r;
    den = (den * d) % r;
  }
  mpz_class den_inv;
  if (mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), r.get_mpz_t()) == 0)
    throw std::runtime_error("lagrange_mod_r: duplicate index");
  return (num * den_inv) % r;
}

// Verification memo: the same joint signatures are checked by every peer
// and again by the verifier; the predicate is pure.
std::mutex g_verify_mutex;
std::map<Digest, bool> g_verify_cache;
constexpr size_t kVerifyCacheMax = 8192;

}  // namespace

BlsKeypair BlsKeypair::generate(Rng& rng) {
  BlsKeypair kp;
  kp.sk = random_scalar_mod_r(rng);
  kp.pk = BlsPublicKey{pairing::ec_mul(kp.sk, pairing::generator())};
  return kp;
}

BlsSignature bls_sign(const mpz_class& sk, ByteView message) {
  EPoint h = pairing::hash_to_point(message);
  return BlsSignature{pairing::ec_mul(sk, h)};
}

bool bls_verify(const BlsPublicKey& pk, ByteView message,
                const BlsSignature& sig) {
  Bytes key_material = pk.to_bytes();
  append(key_material, message);
  append(key_material, sig.to_bytes());
  Digest key = sha256(key_material);
  {
    std::lock_guard<std::mutex> lock(g_verify_mutex);
    auto it = g_verify_cache.find(key);
    if (it != g_verify_cache.end()) return it->second;
  }
  bool ok = false;
  if (!sig.point.inf && !pk.point.inf) {
    EPoint h = pairing::hash_to_point(message);
    Fp2 lhs = pairing::tate(sig.point, pairing::generator());
    Fp2 rhs = pairing::tate(h, pk.point);
    ok = lhs == rhs;
  }
  {
    std::lock_guard<std::mutex> lock(g_verify_mutex);
    if (g_verify_cache.size() >= kVerifyCacheMax) g_verify_cache.clear();
    g_verify_cache.emplace(key, ok);
  }
  return ok;
}

BlsThresholdMaterial bls_keygen_threshold(uint32_t n, uint32_t t, Rng& rng) {
  if (t < 1 || n < 1 || t > n)
    throw std::invalid_argument("bls threshold keygen requires 1 <= t <= n");
  BlsThresholdMaterial m;
  m.threshold = t;
  m.peer_count = n;
  std::vector<mpz_class> poly(t);
  for (auto& c : poly) c = random_scalar_mod_r(rng);
  m.joint_pk = BlsPublicKey{pairing::ec_mul(poly[0], pairing::generator())};
  m.shares.resize(n);
  m.share_pks.resize(n);
  for (uint32_t i = 1; i <= n; ++i) {
    m.shares[i - 1] = eval_poly_mod_r(poly, i);
    m.share_pks[i - 1] =
        BlsPublicKey{pairing::ec_mul(m.shares[i - 1], pairing::generator())};
  }
  return m;
}

BlsThresholdMaterial bls_keygen_threshold_joint(uint32_t n, uint32_t t,
                                                Rng& rng) {
  if (t < 1 || n < 1 || t > n)
    throw std::invalid_argument("bls threshold keygen requires 1 <= t <= n");
  const mpz_class& r = pairing::params().r;
  BlsThresholdMaterial m;
  m.threshold = t;
  m.peer_count = n;
  m.shares.assign(n, 0);
  EPoint joint = EPoint::infinity();
  for (uint32_t dealer = 1; dealer <= n; ++dealer) {
    Rng dealer_rng = rng.fork("bls-dkg-dealer-" + std::to_string(dealer));
    std::vector<mpz_class> poly(t);
    for (auto& c : poly) c = random_scalar_mod_r(dealer_rng);
    std::vector<EPoint> feldman(t);
    for (uint32_t k = 0; k < t; ++k)
      feldman[k] = pairing::ec_mul(poly[k], pairing::generator());
    for (uint32_t i = 1; i <= n; ++i) {
      mpz_class share = eval_poly_mod_r(poly, i);
      EPoint expect = EPoint::infinity();
      mpz_class x = 1;
      for (uint32_t k = 0; k < t; ++k) {
        expect = pairing::ec_add(expect, pairing::ec_mul(x, feldman[k]));
        x = (x * i) % r;
      }
      if (!(pairing::ec_mul(share, pairing::generator()) == expect))
        throw std::runtime_error("bls joint DKG: share failed VSS check");
      m.shares[i - 1] = (m.shares[i - 1] + share) % r;
    }
    joint = pairing::ec_add(joint, feldman[0]);
  }
  m.joint_pk = BlsPublicKey{joint};
  m.share_pks.resize(n);
  for (uint32_t i = 0; i < n; ++i)
    m.share_pks[i] =
        BlsPublicKey{pairing::ec_mul(m.shares[i], pairing::generator())};
  return m;
}

Bytes BlsSignatureShare::to_bytes() const {
  Bytes out;
  append_u32be(out, peer_index);
  append(out, point.to_bytes());
  return out;
}

BlsSignatureShare BlsSignatureShare::from_bytes(ByteView b) {
  if (b.size() < 4) throw std::invalid_argument("BlsSignatureShare: short");
  BlsSignatureShare s;
  s.peer_index = (uint32_t(b[0]) << 24) | (uint32_t(b[1]) << 16) |
                 (uint32_t(b[2]) << 8) | uint32_t(b[3]);
  s.point = EPoint::from_bytes(b.subspan(4));
  return s;
}

BlsSignatureShare bls_sign_share(const mpz_class& share, uint32_t peer_index,
                                 ByteView message) {
  EPoint h = pairing::hash_to_point(message);
  return BlsSignatureShare{peer_index, pairing::ec_mul(share, h)};
}

bool bls_verify_share(const BlsPublicKey& share_pk, ByteView message,
                      const BlsSignatureShare& share) {
  return bls_verify(share_pk, message, BlsSignature{share.point});
}

BlsSignature bls_combine_public(const BlsPublicKey& joint_pk,
                                const std::vector<BlsPublicKey>& share_pks,
                                uint32_t threshold, ByteView message,
                                const std::vector<BlsSignatureShare>& shares) {
  std::vector<const BlsSignatureShare*> chosen;
  std::set<uint32_t> seen;
  for (const auto& s : shares) {
    if (s.peer_index < 1 || s.peer_index > share_pks.size()) continue;
    if (seen.count(s.peer_index)) continue;
    seen.insert(s.peer_index);
    chosen.push_back(&s);
  }
  if (chosen.size() < threshold)
    throw BlsCombineError("bls_combine: fewer than t distinct shares");
  chosen.resize(threshold);
  std::vector<uint32_t> indices;
  for (const auto* s : chosen) indices.push_back(s->peer_index);
  EPoint acc = EPoint::infinity();
  for (const auto* s : chosen) {
    mpz_class lam = lagrange_mod_r(s->peer_index, indices);
    acc = pairing::ec_add(acc, pairing::ec_mul(lam, s->point));
  }
  BlsSignature sig{acc};
  if (bls_verify(joint_pk, message, sig)) return sig;
  // Optimistic combination failed: find the shares that do not verify.
  std::vector<uint32_t> bad;
  for (const auto& s : shares) {
    if (s.peer_index < 1 || s.peer_index > share_pks.size()) {
      bad.push_back(s.peer_index);
      continue;
    }
    if (!bls_verify_share(share_pks[s.peer_index - 1], message, s))
      bad.push_back(s.peer_index);
  }
  throw BlsCombineError(
      "bls_combine: combined signature invalid (mismatched message or "
      "corrupt shares)",
      bad);
}

BlsSignature bls_combine(const BlsThresholdMaterial& pub, ByteView message,
                         const std::vector<BlsSignatureShare>& shares) {
  return bls_combine_public(pub.joint_pk, pub.share_pks, pub.threshold,
                            message, shares);
}

}  // namespace vvote::crypto
