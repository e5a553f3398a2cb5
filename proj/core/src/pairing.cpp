#include "vvote/pairing.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace vvote::crypto::pairing {

namespace {

constexpr const char* kP =
    "6033c7976befddda20e185b71c4759e3fb42dfa04c14c86ca7027a5f691f9274ceffffff"
    "fffffffffffffffffffffffffffffffffffffffffffffffffffffffff";
constexpr const char* kR =
    "ea8cdf4f0c096d5a85ce12cf81e6097c4c37c49302a2d2b6027631abaaf7a477";
constexpr const char* kH =
    "69000000000000000000000000000000000000000000000000000000000000000";
constexpr const char* kGx =
    "38b884703977bb71ea6f307f1b268c0f7071f0efd8b242ff7d4e5f8dd22d29237de973ca"
    "27094852e3a80c9a182d2c961be762ee2ef1688cba6b9ada46f8eb7b7";
constexpr const char* kGy =
    "5105b46f543e523b85661b9506ba5eb5ba12fabc55ac63a2cda6907d9bd495dc5a2993c9"
    "aa355c880dcaeb3941e143b7cc3dc51e42ca6f3b5809f862afc729343";

constexpr size_t kCoordBytes = 65;  // 515-bit p

Params make_params() {
  Params prm;
  prm.p = mpz_class(kP, 16);
  prm.r = mpz_class(kR, 16);
  prm.h = mpz_class(kH, 16);
  prm.gx = mpz_class(kGx, 16);
  prm.gy = mpz_class(kGy, 16);
  prm.exp2 = (prm.p * prm.p - 1) / prm.r;
  return prm;
}

const mpz_class& P() { return params().p; }

mpz_class mulmod(const mpz_class& a, const mpz_class& b) {
  mpz_class r = a * b;
  r %= P();
  if (r < 0) r += P();
  return r;
}

mpz_class addmod(const mpz_class& a, const mpz_class& b) {
  mpz_class r = a + b;
  if (r >= P()) r -= P();
  return r;
}

mpz_class submod(const mpz_class& a, const mpz_class& b) {
  mpz_class r = a - b;
  if (r < 0) r += P();
  return r;
}

mpz_class invmod(const mpz_class& a) {
  mpz_class r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), P().get_mpz_t()) == 0)
    throw std::domain_error("invmod: not invertible");
  return r;
}

mpz_class powmod_p(const mpz_class& b, const mpz_class& e) {
  mpz_class r;
  mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), P().get_mpz_t());
  return r;
}

}  // namespace

const Params& params() {
  static const Params prm = make_params();
  return prm;
}

Fp2 fp2_mul(const Fp2& a, const Fp2& b) {
  // (a0 + a1 i)(b0 + b1 i) with i^2 = -1, Karatsuba.
  mpz_class t0 = mulmod(a.re, b.re);
  mpz_class t1 = mulmod(a.im, b.im);
  mpz_class t2 = mulmod(addmod(a.re, a.im), addmod(b.re, b.im));
  Fp2 out;
  out.re = submod(t0, t1);
  out.im = submod(submod(t2, t0), t1);
  return out;
}

Fp2 fp2_sqr(const Fp2& a) {
  // (a0^2 - a1^2) + 2 a0 a1 i
  mpz_class s = addmod(a.re, a.im);
  mpz_class d = submod(a.re, a.im);
  Fp2 out;
  out.re = mulmod(s, d);
  out.im = mulmod(addmod(a.im, a.im), a.re);
  return out;
}

Fp2 fp2_inv(const Fp2& a) {
  mpz_class n = addmod(mulmod(a.re, a.re), mulmod(a.im, a.im));
  mpz_class ninv = invmod(n);
  Fp2 out;
  out.re = mulmod(a.re, ninv);
  out.im = submod(0, mulmod(a.im, ninv));
  return out;
}

Fp2 fp2_pow(const Fp2& a, const mpz_class& e) {
  Fp2 acc{1, 0};
  long bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (long i = bits - 1; i >= 0; --i) {
    acc = fp2_sqr(acc);
    if (mpz_tstbit(e.get_mpz_t(), i)) acc = fp2_mul(acc, a);
  }
  return acc;
}

EPoint generator() {
  EPoint g;
  g.x = params().gx;
  g.y = params().gy;
  g.inf = false;
  return g;
}

bool on_curve(const EPoint& a) {
  if (a.inf) return true;
  mpz_class lhs = mulmod(a.y, a.y);
  mpz_class rhs = addmod(mulmod(mulmod(a.x, a.x), a.x), a.x);
  return lhs == rhs;
}

bool in_subgroup(const EPoint& a) {
  if (a.inf) return true;
  return ec_mul(params().r, a).inf;
}

EPoint ec_neg(const EPoint& a) {
  if (a.inf) return a;
  EPoint out = a;
  out.y = submod(0, a.y);
  return out;
}

EPoint ec_add(const EPoint& a, const EPoint& b) {
  if (a.inf) return b;
  if (b.inf) return a;
  mpz_class lam;
  if (a.x == b.x) {
    if (addmod(a.y, b.y) == 0) return EPoint::infinity();
    // tangent: (3x^2 + 1) / 2y
    lam = mulmod(addmod(mulmod(3, mulmod(a.x, a.x)), 1),
                 invmod(addmod(a.y, a.y)));
  } else {
    lam = mulmod(submod(b.y, a.y), invmod(submod(b.x, a.x)));
  }
  EPoint out;
  out.inf = false;
  out.x = submod(submod(mulmod(lam, lam), a.x), b.x);
  out.y = submod(mulmod(lam, submod(a.x, out.x)), a.y);
  return out;
}

namespace {

// Jacobian coordinates for scalar multiplication (curve a = 1, b = 0).
struct Jac {
  mpz_class x, y, z;  // z = 0 marks infinity
};

Jac jac_from(const EPoint& a) {
  if (a.inf) return Jac{1, 1, 0};
  return Jac{a.x, a.y, 1};
}

EPoint jac_to_affine(const Jac& j) {
  if (j.z == 0) return EPoint::infinity();
  mpz_class zinv = invmod(j.z);
  mpz_class zinv2 = mulmod(zinv, zinv);
  EPoint out;
  out.inf = false;
  out.x = mulmod(j.x, zinv2);
  out.y = mulmod(j.y, mulmod(zinv2, zinv));
  return out;
}

Jac jac_double(const Jac& a) {
  if (a.z == 0 || a.y == 0) return Jac{1, 1, 0};
  mpz_class xx = mulmod(a.x, a.x);
  mpz_class yy = mulmod(a.y, a.y);
  mpz_class yyyy = mulmod(yy, yy);
  mpz_class zz = mulmod(a.z, a.z);
  mpz_class s = addmod(a.x, yy);
  s = submod(submod(mulmod(s, s), xx), yyyy);
  s = addmod(s, s);
  mpz_class m = addmod(addmod(xx, addmod(xx, xx)), mulmod(zz, zz));  // a = 1
  Jac out;
  out.x = submod(mulmod(m, m), addmod(s, s));
  mpz_class y8 = yyyy;
  for (int i = 0; i < 3; ++i) y8 = addmod(y8, y8);
  out.y = submod(mulmod(m, submod(s, out.x)), y8);
  mpz_class yz = addmod(a.y, a.z);
  out.z = submod(submod(mulmod(yz, yz), yy), zz);
  return out;
}

Jac jac_add_affine(const Jac& a, const EPoint& b) {
  if (b.inf) return a;
  if (a.z == 0) return jac_from(b);
  mpz_class z1z1 = mulmod(a.z, a.z);
  mpz_class u2 = mulmod(b.x, z1z1);
  mpz_class s2 = mulmod(b.y, mulmod(a.z, z1z1));
  if (u2 == a.x) {
    if (s2 == a.y) return jac_double(a);
    return Jac{1, 1, 0};
  }
  mpz_class hh = submod(u2, a.x);
  mpz_class hh2 = mulmod(hh, hh);
  mpz_class i4 = addmod(hh2, hh2);
  i4 = addmod(i4, i4);
  mpz_class j = mulmod(hh, i4);
  mpz_class rr = submod(s2, a.y);
  rr = addmod(rr, rr);
  mpz_class v = mulmod(a.x, i4);
  Jac out;
  out.x = submod(submod(mulmod(rr, rr), j), addmod(v, v));
  mpz_class yj = mulmod(a.y, j);
  out.y = submod(mulmod(rr, submod(v, out.x)), addmod(yj, yj));
  mpz_class zh = addmod(a.z, hh);
  out.z = submod(submod(mulmod(zh, zh), z1z1), hh2);
  return out;
}

}  // namespace

EPoint ec_mul(const mpz_class& k, const EPoint& a) {
  if (a.inf || k == 0) return EPoint::infinity();
  mpz_class e = k;
  if (e < 0) return ec_mul(-e, ec_neg(a));
  Jac acc{1, 1, 0};
  long bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (long i = bits - 1; i >= 0; --i) {
    acc = jac_double(acc);
    if (mpz_tstbit(e.get_mpz_t(), i)) acc = jac_add_affine(acc, a);
  }
  return jac_to_affine(acc);
}

Bytes EPoint::to_bytes() const {
  if (inf) return Bytes(2 * kCoordBytes, 0);  // not expected on the wire
  Bytes out = mpz_to_bytes(x, kCoordBytes);
  append(out, mpz_to_bytes(y, kCoordBytes));
  return out;
}

namespace {
// Subgroup validation costs a full scalar multiplication; the same point
// bytes are parsed by every peer and again by the verifier, so memoize the
// verdict.
std::mutex g_parse_mutex;
std::map<Digest, bool> g_parse_cache;
constexpr size_t kParseCacheMax = 16384;

bool point_bytes_valid(ByteView b, const EPoint& candidate) {
  Digest key = sha256(b);
  {
    std::lock_guard<std::mutex> lock(g_parse_mutex);
    auto it = g_parse_cache.find(key);
    if (it != g_parse_cache.end()) return it->second;
  }
  bool ok = candidate.x < P() && candidate.y < P() && on_curve(candidate) &&
            in_subgroup(candidate);
  {
    std::lock_guard<std::mutex> lock(g_parse_mutex);
    if (g_parse_cache.size() >= kParseCacheMax) g_parse_cache.clear();
    g_parse_cache.emplace(key, ok);
  }
  return ok;
}
}  // namespace

EPoint EPoint::from_bytes(ByteView b) {
  if (b.size() != 2 * kCoordBytes)
    throw std::invalid_argument("EPoint: bad length");
  bool all_zero = true;
  for (uint8_t v : b)
    if (v != 0) { all_zero = false; break; }
  if (all_zero) return EPoint::infinity();
  EPoint out;
  out.inf = false;
  out.x = mpz_from_bytes(b.subspan(0, kCoordBytes));
  out.y = mpz_from_bytes(b.subspan(kCoordBytes, kCoordBytes));
  if (!point_bytes_valid(b, out))
    throw std::invalid_argument("EPoint: not on curve subgroup");
  return out;
}

Fp2 tate(const EPoint& p_point, const EPoint& q_point) {
  if (p_point.inf || q_point.inf) return Fp2{1, 0};
  // phi(Q) = (-xq, i*yq); the line l through T with slope lam evaluated at
  // phi(Q) is (i*yq - yT - lam(-xq - xT)): real -(yT + lam(-xq - xT)),
  // imaginary yq.  Vertical lines evaluate into F_p and are erased by the
  // final exponentiation, so they are skipped (denominator elimination).
  const mpz_class& xq = q_point.x;
  const mpz_class& yq = q_point.y;
  const mpz_class& r = params().r;
  Fp2 f{1, 0};
  EPoint t = p_point;
  const mpz_class exp_unitary = (P() + 1) / r;  // h
  long bits = mpz_sizeinbase(r.get_mpz_t(), 2);
  for (long i = bits - 2; i >= 0; --i) {
    // tangent line at T
    {
      mpz_class lam = mulmod(addmod(mulmod(3, mulmod(t.x, t.x)), 1),
                             invmod(addmod(t.y, t.y)));
      mpz_class dx = submod(submod(0, xq), t.x);
      mpz_class re = submod(0, addmod(t.y, mulmod(lam, dx)));
      f = fp2_mul(fp2_sqr(f), Fp2{re, yq});
      t = ec_add(t, t);
    }
    if (mpz_tstbit(r.get_mpz_t(), i)) {
      if (!t.inf) {
        if (t.x == p_point.x && !(t == p_point)) {
          // T = -P: vertical line, skipped.
        } else {
          mpz_class lam;
          if (t == p_point)
            lam = mulmod(addmod(mulmod(3, mulmod(t.x, t.x)), 1),
                         invmod(addmod(t.y, t.y)));
          else
            lam = mulmod(submod(p_point.y, t.y),
                         invmod(submod(p_point.x, t.x)));
          mpz_class dx = submod(submod(0, xq), t.x);
          mpz_class re = submod(0, addmod(t.y, mulmod(lam, dx)));
          f = fp2_mul(f, Fp2{re, yq});
        }
      }
      t = ec_add(t, p_point);
    }
  }
  // Final exponentiation (p^2-1)/r = (p-1) * h.  The (p-1) part is the
  // Frobenius step conj(f)/f (f^p = conj(f) in F_p[i]); the result is
  // unitary and only the short cofactor exponent remains.
  Fp2 conj{f.re, submod(0, f.im)};
  Fp2 g = fp2_mul(conj, fp2_inv(f));
  return fp2_pow(g, exp_unitary);
}

namespace {

std::mutex g_h2p_mutex;
std::map<Digest, EPoint> g_h2p_cache;
constexpr size_t kH2pCacheMax = 4096;

EPoint hash_to_point_uncached(ByteView message) {
  const Params& prm = params();
  mpz_class exp_sqrt = (prm.p + 1) / 4;
  mpz_class exp_euler = (prm.p - 1) / 2;
  for (uint32_t ctr = 0;; ++ctr) {
    Bytes m;
    append(m, to_bytes("vvote/bls-h2p/v1"));
    append_u32be(m, ctr);
    append(m, message);
    std::array<uint8_t, 64> wide = sha256_expand(m);
    mpz_class x = mpz_from_bytes(ByteView(wide.data(), wide.size()));
    x %= prm.p;
    mpz_class rhs = addmod(mulmod(mulmod(x, x), x), x);
    if (rhs == 0) continue;
    if (powmod_p(rhs, exp_euler) != 1) continue;
    mpz_class y = powmod_p(rhs, exp_sqrt);
    if (mulmod(y, y) != rhs) continue;
    if (y > prm.p - y) y = prm.p - y;
    EPoint pt;
    pt.inf = false;
    pt.x = x;
    pt.y = y;
    EPoint cleared = ec_mul(prm.h, pt);
    if (cleared.inf) continue;
    return cleared;
  }
}

}  // namespace

EPoint hash_to_point(ByteView message) {
  Digest key = sha256(message);
  {
    std::lock_guard<std::mutex> lock(g_h2p_mutex);
    auto it = g_h2p_cache.find(key);
    if (it != g_h2p_cache.end()) return it->second;
  }
  EPoint pt = hash_to_point_uncached(message);
  {
    std::lock_guard<std::mutex> lock(g_h2p_mutex);
    if (g_h2p_cache.size() >= kH2pCacheMax) g_h2p_cache.clear();
    g_h2p_cache.emplace(key, pt);
  }
  return pt;
}

mpz_class mpz_from_bytes(ByteView b) {
  mpz_class v;
  mpz_import(v.get_mpz_t(), b.size(), 1, 1, 1, 0, b.data());
  return v;
}

Bytes mpz_to_bytes(const mpz_class& v, size_t width) {
  Bytes out(width, 0);
  size_t count = 0;
  mpz_export(nullptr, &count, 1, 1, 1, 0, v.get_mpz_t());
  if (count > width) throw std::invalid_argument("mpz_to_bytes: overflow");
  if (count > 0)
    mpz_export(out.data() + (width - count), &count, 1, 1, 1, 0,
               v.get_mpz_t());
  return out;
}

mpz_class mod_r(const mpz_class& v) {
  mpz_class r = v % params().r;
  if (r < 0) r += params().r;
  return r;
}

}  // namespace vvote::crypto::pairing
