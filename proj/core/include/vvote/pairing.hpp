#pragma once

#include <gmpxx.h>

#include "vvote/bytes.hpp"
#include "vvote/hash.hpp"

namespace vvote::crypto::pairing {

/// Fixed type-A supersingular curve E: y^2 = x^3 + x over F_p with
/// p = r*h - 1, p = 3 (mod 4), r a 256-bit prime.  #E(F_p) = p + 1, the
/// subgroup of order r is pairing-friendly with embedding degree 2 via the
/// distortion map (x, y) -> (-x, iy).  Parameters are deterministic and
/// pinned by tests/vectors/crypto_vectors.txt.
struct Params {
  mpz_class p;      // field prime, 515 bits
  mpz_class r;      // subgroup order, 256 bits
  mpz_class h;      // cofactor, p + 1 = r*h
  mpz_class exp2;   // (p^2 - 1) / r, final exponentiation
  mpz_class gx, gy; // generator of the order-r subgroup
};

const Params& params();

/// Element of F_{p^2} = F_p[i], i^2 = -1.
struct Fp2 {
  mpz_class re, im;

  bool operator==(const Fp2& o) const { return re == o.re && im == o.im; }
  bool is_one() const { return re == 1 && im == 0; }
};

Fp2 fp2_mul(const Fp2& a, const Fp2& b);
Fp2 fp2_sqr(const Fp2& a);
Fp2 fp2_inv(const Fp2& a);
Fp2 fp2_pow(const Fp2& a, const mpz_class& e);

/// Affine point on E(F_p); inf marks the identity.
struct EPoint {
  mpz_class x, y;
  bool inf = true;

  static EPoint infinity() { return EPoint{}; }
  bool operator==(const EPoint& o) const {
    if (inf || o.inf) return inf == o.inf;
    return x == o.x && y == o.y;
  }

  /// Fixed-width big-endian x||y (65 bytes each).  Parsing validates the
  /// curve equation and the order-r subgroup.
  Bytes to_bytes() const;
  static EPoint from_bytes(ByteView b);
  std::string hex() const { return to_hex(to_bytes()); }
};

EPoint generator();
EPoint ec_add(const EPoint& a, const EPoint& b);
EPoint ec_neg(const EPoint& a);
EPoint ec_mul(const mpz_class& k, const EPoint& a);
bool on_curve(const EPoint& a);
bool in_subgroup(const EPoint& a);

/// Reduced Tate pairing e(P, Q) with the distortion map applied to Q.
/// Bilinear and non-degenerate on the order-r subgroup.
Fp2 tate(const EPoint& p_point, const EPoint& q_point);

/// Deterministic hash to the order-r subgroup (try-and-increment, then
/// cofactor clearing).  Results are memoized; the map is pure.
EPoint hash_to_point(ByteView message);

mpz_class mpz_from_bytes(ByteView b);
Bytes mpz_to_bytes(const mpz_class& v, size_t width);
mpz_class mod_r(const mpz_class& v);

}  // namespace vvote::crypto::pairing
