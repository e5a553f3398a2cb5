#pragma once

#include "vvote/group.hpp"

namespace vvote::crypto {

/// Chaum-Pedersen proof of discrete-log equality: given (g, h, A, B),
/// proves knowledge of x with A = g^x and B = h^x.  Non-interactive via
/// Fiat-Shamir over the full transcript.
struct DleqProof {
  Scalar challenge;
  Scalar response;

  Bytes to_bytes() const;
  static DleqProof from_bytes(ByteView b);
};

DleqProof dleq_prove(ByteView domain, const GroupElement& g,
                     const GroupElement& h, const GroupElement& a,
                     const GroupElement& b, const Scalar& x, Rng& rng);

bool dleq_verify(ByteView domain, const GroupElement& g, const GroupElement& h,
                 const GroupElement& a, const GroupElement& b,
                 const DleqProof& proof);

}  // namespace vvote::crypto
