#include "vvote/dleq.hpp"

#include <stdexcept>

namespace vvote::crypto {

namespace {
Scalar transcript_challenge(ByteView domain, const GroupElement& g,
                            const GroupElement& h, const GroupElement& a,
                            const GroupElement& b, const GroupElement& t1,
                            const GroupElement& t2) {
  Bytes m = length_prefixed({Bytes(domain.begin(), domain.end()),
                             g.to_bytes(), h.to_bytes(), a.to_bytes(),
                             b.to_bytes(), t1.to_bytes(), t2.to_bytes()});
  std::array<uint8_t, 64> wide = sha256_expand(m);
  return Scalar::reduce64(wide);
}
}  // namespace

Bytes DleqProof::to_bytes() const {
  Bytes out = challenge.to_bytes();
  append(out, response.bytes());
  return out;
}

DleqProof DleqProof::from_bytes(ByteView b) {
  if (b.size() != 64) throw std::invalid_argument("DleqProof: bad length");
  DleqProof p;
  p.challenge = Scalar::from_bytes(b.subspan(0, 32));
  p.response = Scalar::from_bytes(b.subspan(32, 32));
  return p;
}

DleqProof dleq_prove(ByteView domain, const GroupElement& g,
                     const GroupElement& h, const GroupElement& a,
                     const GroupElement& b, const Scalar& x, Rng& rng) {
  Scalar w;
  do {
    w = Scalar::random(rng);
  } while (w.is_zero());
  GroupElement t1 = g.mul(w);
  GroupElement t2 = h.mul(w);
  DleqProof p;
  p.challenge = transcript_challenge(domain, g, h, a, b, t1, t2);
  p.response = w.add(p.challenge.mul(x));
  return p;
}

bool dleq_verify(ByteView domain, const GroupElement& g, const GroupElement& h,
                 const GroupElement& a, const GroupElement& b,
                 const DleqProof& proof) {
  if (proof.response.is_zero()) return false;
  // t1 = g^z - A^c, t2 = h^z - B^c
  GroupElement t1 = g.mul(proof.response).sub(a.mul(proof.challenge));
  GroupElement t2 = h.mul(proof.response).sub(b.mul(proof.challenge));
  Scalar c = transcript_challenge(domain, g, h, a, b, t1, t2);
  return c == proof.challenge;
}

}  // namespace vvote::crypto
