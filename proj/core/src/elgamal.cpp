#include "vvote/elgamal.hpp"

#include <stdexcept>

namespace vvote::crypto {

Bytes Ciphertext::to_bytes() const {
  Bytes out = c1.to_bytes();
  append(out, c2.bytes());
  return out;
}

Ciphertext Ciphertext::from_bytes(ByteView b) {
  if (b.size() != 64) throw std::invalid_argument("Ciphertext: bad length");
  Ciphertext ct;
  ct.c1 = GroupElement::from_bytes(b.subspan(0, 32));
  ct.c2 = GroupElement::from_bytes(b.subspan(32, 32));
  return ct;
}

Ciphertext Ciphertext::from_hex(std::string_view h) {
  return from_bytes(vvote::from_hex(h));
}

std::strong_ordering Ciphertext::operator<=>(const Ciphertext& o) const {
  auto c = c1 <=> o.c1;
  if (c != std::strong_ordering::equal) return c;
  return c2 <=> o.c2;
}

ElGamalKeypair ElGamalKeypair::generate(Rng& rng) {
  ElGamalKeypair kp;
  do {
    kp.sk = Scalar::random(rng);
  } while (kp.sk.is_zero());
  kp.pk = GroupElement::base_mul(kp.sk);
  return kp;
}

Ciphertext encrypt(const GroupElement& pk, const GroupElement& m,
                   const Scalar& r) {
  if (r.is_zero())
    throw std::invalid_argument("encrypt: zero randomness leaks the message");
  Ciphertext ct;
  ct.c1 = GroupElement::base_mul(r);
  ct.c2 = m.add(pk.mul(r));
  return ct;
}

GroupElement decrypt(const Scalar& sk, const Ciphertext& ct) {
  return ct.c2.sub(ct.c1.mul(sk));
}

Ciphertext reencrypt(const GroupElement& pk, const Ciphertext& ct,
                     const Scalar& r) {
  if (r.is_zero()) return ct;
  Ciphertext out;
  out.c1 = ct.c1.add(GroupElement::base_mul(r));
  out.c2 = ct.c2.add(pk.mul(r));
  return out;
}

Bytes seal(const GroupElement& pk, ByteView plaintext, Rng& rng) {
  Scalar eph;
  do {
    eph = Scalar::random(rng);
  } while (eph.is_zero());
  GroupElement eph_pub = GroupElement::base_mul(eph);
  GroupElement shared = pk.mul(eph);
  Bytes ikm = length_prefixed({to_bytes("vvote/seal/v1"), shared.to_bytes(),
                               eph_pub.to_bytes()});
  Digest key_digest = sha256(ikm);
  SymKey key{};
  std::copy(key_digest.begin(), key_digest.end(), key.begin());
  Bytes out = eph_pub.to_bytes();
  append(out, sym_encrypt(key, plaintext, rng));
  return out;
}

Bytes open_sealed(const Scalar& sk, ByteView sealed) {
  if (sealed.size() < 32) throw IntegrityError("open_sealed: too short");
  GroupElement eph_pub = GroupElement::from_bytes(sealed.subspan(0, 32));
  GroupElement shared = eph_pub.mul(sk);
  Bytes ikm = length_prefixed({to_bytes("vvote/seal/v1"), shared.to_bytes(),
                               eph_pub.to_bytes()});
  Digest key_digest = sha256(ikm);
  SymKey key{};
  std::copy(key_digest.begin(), key_digest.end(), key.begin());
  return sym_decrypt(key, sealed.subspan(32));
}

}  // namespace vvote::crypto
