#pragma once

#include <stdexcept>

#include "vvote/bytes.hpp"
#include "vvote/rng.hpp"

namespace vvote::crypto {

/// Authenticated decryption failure: the ciphertext or key is wrong.
struct IntegrityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using SymKey = std::array<uint8_t, 32>;

/// AES-256-GCM.  Output layout: 12-byte nonce || ciphertext || 16-byte tag.
Bytes sym_encrypt(const SymKey& key, ByteView plaintext, Rng& rng);
Bytes sym_decrypt(const SymKey& key, ByteView ciphertext);  // throws IntegrityError

}  // namespace vvote::crypto
