#include "privacydates/timestamp.hpp"

#include <charconv>
#include <chrono>
#include <cstdio>

#include "privacydates/errors.hpp"

namespace privacydates {

namespace {

namespace chr = std::chrono;

// 9999-12-31T23:59:59.999999Z
constexpr std::int64_t kMaxMicros =
    (chr::sys_days{chr::year{9999} / 12 / 31}.time_since_epoch().count() *
         std::int64_t{86400} +
     86399) * Timestamp::kMicrosPerSecond +
    999999;

int parse_digits(std::string_view text, std::size_t pos, std::size_t len) {
  int value = 0;
  if (pos + len > text.size()) throw Error(Errc::invalid_timestamp, std::string(text));
  for (std::size_t i = pos; i < pos + len; ++i) {
    char c = text[i];
    if (c < '0' || c > '9') throw Error(Errc::invalid_timestamp, std::string(text));
    value = value * 10 + (c - '0');
  }
  return value;
}

}  // namespace

Timestamp Timestamp::from_micros(std::int64_t micros_since_epoch) {
  if (micros_since_epoch < 0 || micros_since_epoch > kMaxMicros) {
    throw Error(Errc::invalid_timestamp,
                "instant outside supported range 1970-9999");
  }
  Timestamp t;
  t.micros_ = micros_since_epoch;
  return t;
}

Timestamp Timestamp::from_civil(int year, int month, int day, int hour,
                                int minute, int second,
                                std::int64_t microsecond) {
  chr::year_month_day ymd{chr::year{year}, chr::month{unsigned(month)},
                          chr::day{unsigned(day)}};
  if (!ymd.ok() || hour < 0 || hour > 23 || minute < 0 || minute > 59 ||
      second < 0 || second > 59 || microsecond < 0 || microsecond > 999999) {
    throw Error(Errc::invalid_timestamp, "invalid civil date-time");
  }
  auto days_since_epoch = chr::sys_days{ymd}.time_since_epoch().count();
  std::int64_t secs = std::int64_t(days_since_epoch) * 86400 + hour * 3600 +
                      minute * 60 + second;
  return from_micros(secs * kMicrosPerSecond + microsecond);
}

Timestamp Timestamp::parse(std::string_view text) {
  // YYYY-MM-DDThh:mm:ss[.f{1,6}]Z
  if (text.size() < 20 || text[4] != '-' || text[7] != '-' ||
      (text[10] != 'T' && text[10] != 't') || text[13] != ':' ||
      text[16] != ':') {
    throw Error(Errc::invalid_timestamp, std::string(text));
  }
  int year = parse_digits(text, 0, 4);
  int month = parse_digits(text, 5, 2);
  int day = parse_digits(text, 8, 2);
  int hour = parse_digits(text, 11, 2);
  int minute = parse_digits(text, 14, 2);
  int second = parse_digits(text, 17, 2);
  std::size_t pos = 19;
  std::int64_t micros = 0;
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    std::size_t digits = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      if (digits == 6) throw Error(Errc::invalid_timestamp, std::string(text));
      micros = micros * 10 + (text[pos] - '0');
      ++digits;
      ++pos;
    }
    if (digits == 0) throw Error(Errc::invalid_timestamp, std::string(text));
    for (; digits < 6; ++digits) micros *= 10;
  }
  if (pos + 1 != text.size() || (text[pos] != 'Z' && text[pos] != 'z')) {
    throw Error(Errc::invalid_timestamp, std::string(text));
  }
  return from_civil(year, month, day, hour, minute, second, micros);
}

std::string Timestamp::to_string() const {
  std::int64_t secs = micros_ / kMicrosPerSecond;
  std::int64_t sub = micros_ % kMicrosPerSecond;
  auto dp = chr::sys_days{chr::days{secs / 86400}};
  chr::year_month_day ymd{dp};
  std::int64_t sod = secs % 86400;
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02uT%02d:%02d:%02d.%06dZ",
                int(ymd.year()), unsigned(ymd.month()), unsigned(ymd.day()),
                int(sod / 3600), int(sod / 60 % 60), int(sod % 60), int(sub));
  return buf;
}

Timestamp Timestamp::with_microseconds(std::int32_t micros) const {
  if (micros < 0 || micros > 999999) {
    throw Error(Errc::invalid_timestamp, "sub-second component out of range");
  }
  return from_micros(micros_ - micros_ % kMicrosPerSecond + micros);
}

}  // namespace privacydates
