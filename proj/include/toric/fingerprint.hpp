#ifndef TORIC_FINGERPRINT_HPP
#define TORIC_FINGERPRINT_HPP

// Content hash of a fan: SHA-256 (lowercase hex) of the compact JSON dump of
// canonicalize(f). Fans differing only by a permutation of their rays share
// a fingerprint. Requires linking OpenSSL::Crypto.

#include <toric/fan_io.hpp>

#include <openssl/evp.h>

#include <cstdio>
#include <string>

namespace toric {

inline std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw ToricError("sha256: digest failed");
  std::string hex;
  hex.reserve(2 * len);
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

inline std::string fingerprint(const Fan& f) { return sha256_hex(fan_to_json(canonicalize(f)).dump()); }

}  // namespace toric

#endif  // TORIC_FINGERPRINT_HPP
