#include "vvote/commitment.hpp"

#include <stdexcept>

namespace vvote::crypto {

Commitment Commitment::from_hex(std::string_view h) {
  Bytes b = vvote::from_hex(h);
  if (b.size() != 32) throw std::invalid_argument("Commitment: bad length");
  Commitment c;
  std::copy(b.begin(), b.end(), c.digest.begin());
  return c;
}

Commitment commit(ByteView message, const Witness& witness) {
  Commitment c;
  c.digest = sha256({ByteView(witness.data(), witness.size()), message});
  return c;
}

bool verify_commitment(const Commitment& c, ByteView message,
                       const Witness& witness) {
  Commitment expect = commit(message, witness);
  return constant_time_equal(ByteView(c.digest.data(), c.digest.size()),
                             ByteView(expect.digest.data(),
                                      expect.digest.size()));
}

}  // namespace vvote::crypto
