#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace privacydates {

/// SHA-256 of the input bytes, lowercase hex (64 characters).
std::string sha256_hex(std::string_view data);

/// Deterministic stream of version-4-formatted UUIDs.
///
/// Ids are derived by hashing (seed, sequence number), so a store that
/// persists its seed and draw count reproduces the identical id stream on
/// replay while the ids themselves stay free of ordering information.
class UuidStream {
 public:
  UuidStream(std::string_view seed, std::uint64_t next_sequence)
      : seed_(seed), sequence_(next_sequence) {}

  /// Lowercase hyphenated UUID with version 4 / variant 1 bits set.
  std::string next();

  std::uint64_t sequence() const { return sequence_; }

 private:
  std::string seed_;
  std::uint64_t sequence_;
};

}  // namespace privacydates
