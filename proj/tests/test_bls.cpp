#include <algorithm>

#include "doctest.h"
#include "vvote/bls.hpp"

using namespace vvote;
using namespace vvote::crypto;
namespace pr = vvote::crypto::pairing;

namespace {
Rng test_rng(const std::string& label) {
  return Rng(to_bytes("bls-tests")).fork(label);
}
}  // namespace

TEST_CASE("pairing parameters are consistent") {
  const auto& prm = pr::params();
  CHECK(mpz_probab_prime_p(prm.p.get_mpz_t(), 32) > 0);
  CHECK(mpz_probab_prime_p(prm.r.get_mpz_t(), 32) > 0);
  CHECK(prm.p % 4 == 3);
  CHECK(prm.r * prm.h == prm.p + 1);
  CHECK(pr::on_curve(pr::generator()));
  CHECK(pr::in_subgroup(pr::generator()));
}

TEST_CASE("tate pairing is bilinear and non-degenerate") {
  pr::EPoint g = pr::generator();
  mpz_class a = 123457;
  mpz_class b = 987643;
  pr::EPoint ag = pr::ec_mul(a, g);
  pr::EPoint bg = pr::ec_mul(b, g);
  pr::Fp2 e_ab = pr::tate(ag, bg);
  pr::Fp2 e_base = pr::tate(g, g);
  CHECK(e_ab == pr::fp2_pow(e_base, a * b));
  CHECK(!e_base.is_one());
  CHECK(pr::fp2_pow(e_base, pr::params().r).is_one());
  // symmetry of the distorted pairing
  CHECK(pr::tate(ag, bg) == pr::tate(bg, ag));
}

TEST_CASE("point serialization round-trips and validates") {
  Rng rng = test_rng("points");
  BlsKeypair kp = BlsKeypair::generate(rng);
  Bytes b = kp.pk.to_bytes();
  CHECK(BlsPublicKey::from_bytes(b) == kp.pk);
  Bytes bad = b;
  bad[10] ^= 1;
  CHECK_THROWS((void)BlsPublicKey::from_bytes(bad));
}

TEST_CASE("bls sign/verify and determinism") {
  Rng rng = test_rng("sign");
  BlsKeypair kp = BlsKeypair::generate(rng);
  Bytes msg = to_bytes("serialNo|district");
  BlsSignature sig = bls_sign(kp.sk, msg);
  CHECK(bls_verify(kp.pk, msg, sig));
  CHECK(bls_sign(kp.sk, msg) == sig);  // bit-stable
  CHECK(!bls_verify(kp.pk, to_bytes("other message"), sig));
  BlsKeypair other = BlsKeypair::generate(rng);
  CHECK(!bls_verify(other.pk, msg, sig));
}

TEST_CASE("threshold combination is share-set independent") {
  Rng rng = test_rng("threshold");
  BlsThresholdMaterial m = bls_keygen_threshold(7, 5, rng);
  Bytes msg = to_bytes("commit hash");

  std::vector<BlsSignatureShare> s15, s37;
  for (uint32_t i = 1; i <= 5; ++i)
    s15.push_back(bls_sign_share(m.shares[i - 1], i, msg));
  for (uint32_t i = 3; i <= 7; ++i)
    s37.push_back(bls_sign_share(m.shares[i - 1], i, msg));

  BlsSignature a = bls_combine(m, msg, s15);
  BlsSignature b = bls_combine(m, msg, s37);
  CHECK(a.to_bytes() == b.to_bytes());  // byte-identical joint signature
  CHECK(bls_verify(m.joint_pk, msg, a));

  // 4 of threshold-5 shares -> error
  std::vector<BlsSignatureShare> four(s15.begin(), s15.begin() + 4);
  CHECK_THROWS_AS((void)bls_combine(m, msg, four), BlsCombineError);
}

TEST_CASE("mismatched message among shares is a combination error") {
  Rng rng = test_rng("mismatch");
  BlsThresholdMaterial m = bls_keygen_threshold(4, 3, rng);
  Bytes msg = to_bytes("payload");
  std::vector<BlsSignatureShare> shares;
  shares.push_back(bls_sign_share(m.shares[0], 1, msg));
  shares.push_back(bls_sign_share(m.shares[1], 2, msg));
  shares.push_back(bls_sign_share(m.shares[2], 3, to_bytes("other")));
  try {
    (void)bls_combine(m, msg, shares);
    FAIL("expected BlsCombineError");
  } catch (const BlsCombineError& e) {
    REQUIRE(e.bad_peers.size() == 1);
    CHECK(e.bad_peers[0] == 3);
  }
}

TEST_CASE("corrupted share is identified by peer index") {
  Rng rng = test_rng("corrupt");
  BlsThresholdMaterial m = bls_keygen_threshold(4, 3, rng);
  Bytes msg = to_bytes("payload");
  std::vector<BlsSignatureShare> shares;
  for (uint32_t i = 1; i <= 3; ++i)
    shares.push_back(bls_sign_share(m.shares[i - 1], i, msg));
  shares[1].point = pr::ec_add(shares[1].point, pr::generator());
  try {
    (void)bls_combine(m, msg, shares);
    FAIL("expected BlsCombineError");
  } catch (const BlsCombineError& e) {
    REQUIRE(e.bad_peers.size() == 1);
    CHECK(e.bad_peers[0] == 2);
  }
}

TEST_CASE("dealerless joint BLS keygen behaves like dealer mode") {
  Rng rng = test_rng("joint");
  BlsThresholdMaterial m = bls_keygen_threshold_joint(4, 3, rng);
  Bytes msg = to_bytes("joint payload");
  std::vector<BlsSignatureShare> shares;
  for (uint32_t i = 2; i <= 4; ++i)
    shares.push_back(bls_sign_share(m.shares[i - 1], i, msg));
  BlsSignature sig = bls_combine(m, msg, shares);
  CHECK(bls_verify(m.joint_pk, msg, sig));
}
