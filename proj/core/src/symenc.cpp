#include "vvote/symenc.hpp"

#include <openssl/evp.h>

#include <memory>

namespace vvote::crypto {

namespace {
constexpr size_t kNonceLen = 12;
constexpr size_t kTagLen = 16;

struct CtxFree {
  void operator()(EVP_CIPHER_CTX* c) const { EVP_CIPHER_CTX_free(c); }
};
using CtxPtr = std::unique_ptr<EVP_CIPHER_CTX, CtxFree>;
}  // namespace

Bytes sym_encrypt(const SymKey& key, ByteView plaintext, Rng& rng) {
  Bytes nonce = rng.bytes(kNonceLen);
  CtxPtr ctx(EVP_CIPHER_CTX_new());
  if (!ctx) throw std::runtime_error("sym_encrypt: ctx alloc");
  if (EVP_EncryptInit_ex(ctx.get(), EVP_aes_256_gcm(), nullptr, key.data(),
                         nonce.data()) != 1)
    throw std::runtime_error("sym_encrypt: init");
  Bytes out = nonce;
  out.resize(kNonceLen + plaintext.size() + kTagLen);
  int len = 0;
  if (!plaintext.empty() &&
      EVP_EncryptUpdate(ctx.get(), out.data() + kNonceLen, &len,
                        plaintext.data(),
                        static_cast<int>(plaintext.size())) != 1)
    throw std::runtime_error("sym_encrypt: update");
  int fin = 0;
  if (EVP_EncryptFinal_ex(ctx.get(), out.data() + kNonceLen + len, &fin) != 1)
    throw std::runtime_error("sym_encrypt: final");
  if (EVP_CIPHER_CTX_ctrl(ctx.get(), EVP_CTRL_GCM_GET_TAG, kTagLen,
                          out.data() + kNonceLen + plaintext.size()) != 1)
    throw std::runtime_error("sym_encrypt: tag");
  return out;
}

Bytes sym_decrypt(const SymKey& key, ByteView ciphertext) {
  if (ciphertext.size() < kNonceLen + kTagLen)
    throw IntegrityError("sym_decrypt: ciphertext too short");
  const uint8_t* nonce = ciphertext.data();
  const uint8_t* body = ciphertext.data() + kNonceLen;
  size_t body_len = ciphertext.size() - kNonceLen - kTagLen;
  const uint8_t* tag = ciphertext.data() + ciphertext.size() - kTagLen;

  CtxPtr ctx(EVP_CIPHER_CTX_new());
  if (!ctx) throw std::runtime_error("sym_decrypt: ctx alloc");
  if (EVP_DecryptInit_ex(ctx.get(), EVP_aes_256_gcm(), nullptr, key.data(),
                         nonce) != 1)
    throw std::runtime_error("sym_decrypt: init");
  Bytes out(body_len);
  int len = 0;
  if (body_len > 0 && EVP_DecryptUpdate(ctx.get(), out.data(), &len, body,
                                        static_cast<int>(body_len)) != 1)
    throw IntegrityError("sym_decrypt: update failed");
  if (EVP_CIPHER_CTX_ctrl(ctx.get(), EVP_CTRL_GCM_SET_TAG, kTagLen,
                          const_cast<uint8_t*>(tag)) != 1)
    throw std::runtime_error("sym_decrypt: set tag");
  int fin = 0;
  if (EVP_DecryptFinal_ex(ctx.get(), out.data() + len, &fin) != 1)
    throw IntegrityError("sym_decrypt: authentication failed");
  return out;
}

}  // namespace vvote::crypto
