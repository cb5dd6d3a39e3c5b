#include "privacydates/hash.hpp"

#include <openssl/sha.h>

#include <array>
#include <cstdio>

namespace privacydates {

std::string sha256_hex(std::string_view data) {
  std::array<unsigned char, SHA256_DIGEST_LENGTH> digest;
  SHA256(reinterpret_cast<const unsigned char*>(data.data()), data.size(),
         digest.data());
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(64);
  for (unsigned char byte : digest) {
    out.push_back(hex[byte >> 4]);
    out.push_back(hex[byte & 0xf]);
  }
  return out;
}

std::string UuidStream::next() {
  std::string material = seed_ + ":" + std::to_string(sequence_++);
  std::string h = sha256_hex(material);
  // 8-4-4-4-12 layout from the first 32 hex digits, version/variant forced.
  std::string out;
  out.reserve(36);
  out.append(h, 0, 8);
  out.push_back('-');
  out.append(h, 8, 4);
  out.push_back('-');
  out.push_back('4');
  out.append(h, 13, 3);
  out.push_back('-');
  static const char* variant = "89ab";
  out.push_back(variant[(h[16] >= 'a' ? h[16] - 'a' + 10 : h[16] - '0') & 3]);
  out.append(h, 17, 3);
  out.push_back('-');
  out.append(h, 20, 12);
  return out;
}

}  // namespace privacydates
