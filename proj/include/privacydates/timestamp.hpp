#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace privacydates {

/// A fixed-length span of time in whole seconds.
struct Duration {
  std::int64_t total_seconds = 0;

  constexpr auto operator<=>(const Duration&) const = default;
};

constexpr Duration seconds(std::int64_t s) { return Duration{s}; }
constexpr Duration minutes(std::int64_t m) { return Duration{m * 60}; }
constexpr Duration hours(std::int64_t h) { return Duration{h * 3600}; }
constexpr Duration days(std::int64_t d) { return Duration{d * 86400}; }

/// A UTC instant with microsecond resolution.
///
/// Internally a count of microseconds since the Unix epoch. The supported
/// range is 1970-01-01T00:00:00Z through 9999-12-31T23:59:59.999999Z; there
/// is no timezone ambiguity because every value is UTC.
class Timestamp {
 public:
  static constexpr std::int64_t kMicrosPerSecond = 1'000'000;

  Timestamp() = default;

  /// Throws invalid-timestamp outside the supported range.
  static Timestamp from_micros(std::int64_t micros_since_epoch);

  static Timestamp from_civil(int year, int month, int day, int hour = 0,
                              int minute = 0, int second = 0,
                              std::int64_t microsecond = 0);

  /// Parses the RFC 3339 UTC profile: "YYYY-MM-DDThh:mm:ss[.ffffff]Z".
  /// The fractional part is optional on input (1..6 digits).
  static Timestamp parse(std::string_view text);

  /// Formats as RFC 3339 UTC with exactly six fractional digits.
  std::string to_string() const;

  std::int64_t micros_since_epoch() const { return micros_; }

  /// Sub-second component, in [0, 999999].
  std::int32_t microseconds() const {
    return static_cast<std::int32_t>(micros_ % kMicrosPerSecond);
  }

  /// Same instant with the sub-second component replaced.
  Timestamp with_microseconds(std::int32_t micros) const;

  Timestamp operator+(Duration d) const {
    return from_micros(micros_ + d.total_seconds * kMicrosPerSecond);
  }

  auto operator<=>(const Timestamp&) const = default;

 private:
  std::int64_t micros_ = 0;
};

}  // namespace privacydates
