#include "vvote/hash.hpp"

#include <openssl/evp.h>

#include <stdexcept>

namespace vvote {

Digest sha256(const std::vector<ByteView>& parts) {
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  if (!ctx) throw std::runtime_error("sha256: ctx alloc failed");
  Digest out{};
  unsigned int len = 0;
  if (EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) != 1) {
    EVP_MD_CTX_free(ctx);
    throw std::runtime_error("sha256: init failed");
  }
  for (ByteView p : parts) {
    if (!p.empty() && EVP_DigestUpdate(ctx, p.data(), p.size()) != 1) {
      EVP_MD_CTX_free(ctx);
      throw std::runtime_error("sha256: update failed");
    }
  }
  if (EVP_DigestFinal_ex(ctx, out.data(), &len) != 1 || len != out.size()) {
    EVP_MD_CTX_free(ctx);
    throw std::runtime_error("sha256: final failed");
  }
  EVP_MD_CTX_free(ctx);
  return out;
}

Digest sha256(ByteView data) { return sha256(std::vector<ByteView>{data}); }

std::array<uint8_t, 64> sha256_expand(ByteView data) {
  Bytes m0, m1;
  m0.push_back(0x00);
  append(m0, data);
  m1.push_back(0x01);
  append(m1, data);
  Digest d0 = sha256(m0);
  Digest d1 = sha256(m1);
  std::array<uint8_t, 64> out{};
  std::copy(d0.begin(), d0.end(), out.begin());
  std::copy(d1.begin(), d1.end(), out.begin() + 32);
  return out;
}

Bytes digest_bytes(const Digest& d) { return Bytes(d.begin(), d.end()); }

std::string digest_hex(const Digest& d) {
  return to_hex(ByteView(d.data(), d.size()));
}

}  // namespace vvote
