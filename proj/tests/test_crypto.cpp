#include <gmpxx.h>

#include <algorithm>
#include <set>

#include "doctest.h"
#include "vvote/commitment.hpp"
#include "vvote/dleq.hpp"
#include "vvote/elgamal.hpp"
#include "vvote/group.hpp"
#include "vvote/symenc.hpp"
#include "vvote/threshold.hpp"

using namespace vvote;
using namespace vvote::crypto;

namespace {
Rng test_rng(const std::string& label) {
  return Rng(to_bytes("crypto-tests")).fork(label);
}
}  // namespace

TEST_CASE("group element encoding round-trips and orders") {
  Rng rng = test_rng("group");
  for (int i = 0; i < 16; ++i) {
    GroupElement g = GroupElement::base_mul(Scalar::random(rng));
    GroupElement back = GroupElement::from_bytes(g.bytes());
    CHECK(back == g);
  }
  GroupElement a = GroupElement::hash_to_group(to_bytes("d"), to_bytes("a"));
  GroupElement b = GroupElement::hash_to_group(to_bytes("d"), to_bytes("b"));
  CHECK(a != b);
  // byte-lexicographic total order
  CHECK(((a < b) != (b < a)));
  CHECK((a <=> a) == std::strong_ordering::equal);
}

TEST_CASE("scalar arithmetic basics") {
  Rng rng = test_rng("scalar");
  Scalar x = Scalar::random(rng);
  Scalar y = Scalar::random(rng);
  CHECK(x.add(y).sub(y) == x);
  CHECK(x.mul(y) == y.mul(x));
  if (!x.is_zero()) CHECK(x.mul(x.invert()) == Scalar::one());
  CHECK(x.add(x.negate()).is_zero());
}

TEST_CASE("elgamal round trip and determinism") {
  Rng rng = test_rng("elgamal");
  ElGamalKeypair kp = ElGamalKeypair::generate(rng);
  GroupElement m = candidate_id("Alice", "LA");
  Scalar r = Scalar::random(rng);

  Ciphertext ct = encrypt(kp.pk, m, r);
  CHECK(decrypt(kp.sk, ct) == m);
  // bit-exact determinism for fixed (pk, m, r)
  CHECK(encrypt(kp.pk, m, r) == ct);
  // distinct r, same m -> distinct ciphertexts
  Scalar r2 = Scalar::random(rng);
  CHECK(encrypt(kp.pk, m, r2) != ct);
  // r = 0 rejected
  CHECK_THROWS(encrypt(kp.pk, m, Scalar::zero()));
}

TEST_CASE("reencrypt preserves plaintext; zero randomness is identity") {
  Rng rng = test_rng("reenc");
  ElGamalKeypair kp = ElGamalKeypair::generate(rng);
  GroupElement m = candidate_id("Bob", "LA");
  Ciphertext ct = encrypt(kp.pk, m, Scalar::random(rng));

  CHECK(reencrypt(kp.pk, ct, Scalar::zero()) == ct);
  Scalar r1 = Scalar::random(rng);
  Scalar r2 = Scalar::random(rng);
  CHECK(decrypt(kp.sk, reencrypt(kp.pk, ct, r1)) == m);
  // reencrypt(reencrypt(ct, r1), r2) == reencrypt(ct, r1+r2)
  Ciphertext lhs = reencrypt(kp.pk, reencrypt(kp.pk, ct, r1), r2);
  Ciphertext rhs = reencrypt(kp.pk, ct, r1.add(r2));
  CHECK(lhs == rhs);
}

TEST_CASE("threshold decryption matches dealer-key decryption") {
  Rng rng = test_rng("threshold");
  ThresholdKeyMaterial km = keygen_threshold(7, 5, rng);
  GroupElement m = candidate_id("Carol", "LC");
  Ciphertext ct = encrypt(km.public_key, m, Scalar::random(rng));

  CHECK(decrypt(*km.dealer_secret, ct) == m);

  // exhaustive over all 5-subsets of 7
  std::vector<uint32_t> idx = {1, 2, 3, 4, 5, 6, 7};
  std::vector<bool> mask(7, false);
  std::fill(mask.begin(), mask.begin() + 5, true);
  int subsets = 0;
  do {
    std::vector<DecryptionShare> shares;
    for (size_t i = 0; i < 7; ++i)
      if (mask[i]) shares.push_back(partial_decrypt(km, idx[i], ct, rng));
    CHECK(combine_decrypt(km, ct, shares) == m);
    ++subsets;
  } while (std::prev_permutation(mask.begin(), mask.end()));
  CHECK(subsets == 21);
}

TEST_CASE("threshold boundary and tamper identification") {
  Rng rng = test_rng("threshold-edge");
  ThresholdKeyMaterial km = keygen_threshold(3, 2, rng);
  GroupElement m = candidate_id("Dave", "LA");
  Ciphertext ct = encrypt(km.public_key, m, Scalar::random(rng));

  // t-1 shares fail
  std::vector<DecryptionShare> one = {partial_decrypt(km, 1, ct, rng)};
  CHECK_THROWS_AS((void)combine_decrypt(km, ct, one), CombineError);

  // different t-subsets agree
  std::vector<DecryptionShare> s13 = {partial_decrypt(km, 1, ct, rng),
                                      partial_decrypt(km, 3, ct, rng)};
  std::vector<DecryptionShare> s23 = {partial_decrypt(km, 2, ct, rng),
                                      partial_decrypt(km, 3, ct, rng)};
  CHECK(combine_decrypt(km, ct, s13) == combine_decrypt(km, ct, s23));

  // a tampered share is identified by peer index
  std::vector<DecryptionShare> bad = {partial_decrypt(km, 1, ct, rng),
                                      partial_decrypt(km, 2, ct, rng)};
  bad[1].value = bad[1].value.add(GroupElement::base_point());
  try {
    (void)combine_decrypt(km, ct, bad);
    FAIL("expected CombineError");
  } catch (const CombineError& e) {
    REQUIRE(e.bad_peers.size() == 1);
    CHECK(e.bad_peers[0] == 2);
  }
}

TEST_CASE("dealerless joint DKG decrypts like dealer mode") {
  Rng rng = test_rng("dkg-joint");
  ThresholdKeyMaterial km = keygen_threshold_joint(5, 4, rng);
  CHECK(!km.dealer_secret.has_value());
  GroupElement m = candidate_id("Erin", "LC");
  Ciphertext ct = encrypt(km.public_key, m, Scalar::random(rng));
  std::vector<DecryptionShare> shares;
  for (uint32_t i = 1; i <= 4; ++i)
    shares.push_back(partial_decrypt(km, i, ct, rng));
  CHECK(combine_decrypt(km, ct, shares) == m);
}

TEST_CASE("degenerate 1-of-1 threshold") {
  Rng rng = test_rng("deg");
  ThresholdKeyMaterial km = keygen_threshold(1, 1, rng);
  GroupElement m = candidate_id("Solo", "LA");
  Ciphertext ct = encrypt(km.public_key, m, Scalar::random(rng));
  std::vector<DecryptionShare> shares = {partial_decrypt(km, 1, ct, rng)};
  CHECK(combine_decrypt(km, ct, shares) == m);
  CHECK_THROWS_AS(keygen_threshold(3, 4, rng), ParameterError);
}

TEST_CASE("commitments verify and reject bit flips") {
  Rng rng = test_rng("commit");
  Witness w{};
  rng.fill(w);
  Bytes msg = to_bytes("ballot column randomness");
  Commitment c = commit(msg, w);
  CHECK(verify_commitment(c, msg, w));

  Bytes msg2 = msg;
  msg2[0] ^= 1;
  CHECK(!verify_commitment(c, msg2, w));
  Witness w2 = w;
  w2[31] ^= 0x80;
  CHECK(!verify_commitment(c, msg, w2));
}

TEST_CASE("commitment binding over random pairs") {
  // random (m, R) pairs never verify against a different stored digest
  Rng rng = test_rng("binding");
  Witness w{};
  rng.fill(w);
  Bytes msg = rng.bytes(48);
  Commitment c = commit(msg, w);
  for (int i = 0; i < 10000; ++i) {
    Witness w2{};
    rng.fill(w2);
    Bytes m2 = rng.bytes(48);
    if (m2 == msg && w2 == w) continue;
    CHECK_FALSE(verify_commitment(c, m2, w2));
  }
}

TEST_CASE("symmetric encryption round trips and authenticates") {
  Rng rng = test_rng("sym");
  SymKey key{};
  rng.fill(key);
  Bytes msg = to_bytes("r || R pair");
  Bytes ct = sym_encrypt(key, msg, rng);
  CHECK(sym_decrypt(key, ct) == msg);

  SymKey wrong = key;
  wrong[0] ^= 1;
  CHECK_THROWS_AS((void)sym_decrypt(wrong, ct), IntegrityError);

  Bytes tampered = ct;
  tampered[tampered.size() / 2] ^= 1;
  CHECK_THROWS_AS((void)sym_decrypt(key, tampered), IntegrityError);

  Bytes empty_ct = sym_encrypt(key, {}, rng);
  CHECK(sym_decrypt(key, empty_ct).empty());
}

TEST_CASE("hybrid seal/open") {
  Rng rng = test_rng("seal");
  ElGamalKeypair kp = ElGamalKeypair::generate(rng);
  Bytes secret = rng.bytes(32);
  Bytes sealed = seal(kp.pk, secret, rng);
  CHECK(open_sealed(kp.sk, sealed) == secret);
  Bytes tampered = sealed;
  tampered.back() ^= 1;
  CHECK_THROWS_AS((void)open_sealed(kp.sk, tampered), IntegrityError);
}

TEST_CASE("derive_randomness is order-sensitive and deterministic") {
  std::array<uint8_t, 32> p1{};
  std::array<uint8_t, 32> p2{};
  p1.fill(0x11);
  p2.fill(0x22);
  Scalar a = derive_randomness({p1, p2});
  Scalar b = derive_randomness({p1, p2});
  CHECK(a == b);
  CHECK(derive_randomness({p2, p1}) != a);
  CHECK_THROWS(derive_randomness({}));
  // single part equals hash-then-reduce of that part
  Scalar single = derive_randomness({p1});
  Digest d = sha256(ByteView(p1.data(), p1.size()));
  std::array<uint8_t, 32> raw{};
  std::copy(d.begin(), d.end(), raw.begin());
  CHECK(single == Scalar::reduce32(raw));
}

TEST_CASE("derive_randomness matches independent GMP reimplementation") {
  // straight-line oracle: SHA-256(concat), little-endian import, mod group
  // order, little-endian export
  const mpz_class ell("7237005577332262213973186563042994240857116359379907606"
                      "001950938285454250989");
  Rng rng = test_rng("derive-oracle");
  for (int trial = 0; trial < 100; ++trial) {
    size_t nparts = 1 + trial % 5;
    std::vector<std::array<uint8_t, 32>> parts(nparts);
    Bytes concat;
    for (auto& p : parts) {
      rng.fill(p);
      append(concat, ByteView(p.data(), p.size()));
    }
    Digest d = sha256(concat);
    mpz_class v;
    mpz_import(v.get_mpz_t(), d.size(), -1, 1, 0, 0, d.data());
    v %= ell;
    std::array<uint8_t, 32> expect{};
    size_t count = 0;
    mpz_export(expect.data(), &count, -1, 1, 0, 0, v.get_mpz_t());
    Scalar got = derive_randomness(parts);
    CHECK(std::equal(expect.begin(), expect.end(), got.bytes().begin()));
  }
}

TEST_CASE("candidate ids deterministic and collision-free at desk scale") {
  CHECK(candidate_id("Alice", "LA") == candidate_id("Alice", "LA"));
  CHECK(candidate_id("Alice", "LA") != candidate_id("Alice", "LC"));
  std::set<Bytes> seen;
  for (int i = 0; i < 40; ++i) {
    GroupElement id = candidate_id("Candidate " + std::to_string(i), "LA");
    CHECK(seen.insert(id.to_bytes()).second);
  }
  CHECK_THROWS(candidate_id("", "LA"));
}

TEST_CASE("dleq proof verifies and rejects tampering") {
  Rng rng = test_rng("dleq");
  Scalar x = Scalar::random(rng);
  GroupElement g = GroupElement::base_point();
  GroupElement h = GroupElement::hash_to_group(to_bytes("dleq"), to_bytes("h"));
  GroupElement a = g.mul(x);
  GroupElement b = h.mul(x);
  DleqProof proof = dleq_prove(to_bytes("test"), g, h, a, b, x, rng);
  CHECK(dleq_verify(to_bytes("test"), g, h, a, b, proof));
  CHECK(!dleq_verify(to_bytes("other"), g, h, a, b, proof));
  GroupElement b2 = b.add(g);
  CHECK(!dleq_verify(to_bytes("test"), g, h, a, b2, proof));
  DleqProof bad = proof;
  bad.response = bad.response.add(Scalar::one());
  CHECK(!dleq_verify(to_bytes("test"), g, h, a, b, bad));
}
