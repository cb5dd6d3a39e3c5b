#include "privacydates/precision.hpp"

#include <charconv>
#include <chrono>

#include "privacydates/errors.hpp"

namespace privacydates {

namespace chr = std::chrono;

char unit_symbol(Unit unit) noexcept {
  switch (unit) {
    case Unit::second: return 's';
    case Unit::minute: return 'm';
    case Unit::hour: return 'h';
    case Unit::day: return 'd';
    case Unit::week: return 'w';
    case Unit::month: return 'M';
    case Unit::year: return 'y';
  }
  return '?';
}

std::string PrecisionSpec::to_string() const {
  return std::to_string(count) + unit_symbol(unit);
}

PrecisionSpec PrecisionSpec::parse(std::string_view text) {
  if (text.size() < 2) throw Error(Errc::invalid_count, std::string(text));
  int count = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size() - 1,
                                   count);
  if (ec != std::errc{} || ptr != text.data() + text.size() - 1) {
    throw Error(Errc::invalid_count, std::string(text));
  }
  Unit unit;
  switch (text.back()) {
    case 's': unit = Unit::second; break;
    case 'm': unit = Unit::minute; break;
    case 'h': unit = Unit::hour; break;
    case 'd': unit = Unit::day; break;
    case 'w': unit = Unit::week; break;
    case 'M': unit = Unit::month; break;
    case 'y': unit = Unit::year; break;
    default:
      throw Error(Errc::invalid_count, "unknown unit symbol in " + std::string(text));
  }
  return make_precision(unit, count);
}

PrecisionSpec make_precision(Unit unit, int count) {
  if (count <= 0) throw Error(Errc::invalid_count, "count must be positive");
  int capacity = 0;
  switch (unit) {
    case Unit::second:
    case Unit::minute: capacity = 60; break;
    case Unit::hour: capacity = 24; break;
    case Unit::month: capacity = 12; break;
    case Unit::day:
    case Unit::week:
      if (count != 1) {
        throw Error(Errc::invalid_count,
                    "day and week precisions only support count 1");
      }
      return {unit, count};
    case Unit::year:
      return {unit, count};
  }
  if (capacity % count != 0) {
    throw Error(Errc::invalid_count,
                std::to_string(count) + " does not divide " +
                    std::to_string(capacity));
  }
  return {unit, count};
}

Timestamp truncate(Timestamp t, PrecisionSpec p) {
  std::int64_t secs = t.micros_since_epoch() / Timestamp::kMicrosPerSecond;
  std::int64_t day = secs / 86400;
  std::int64_t sod = secs % 86400;  // seconds since midnight UTC

  switch (p.unit) {
    case Unit::second:
    case Unit::minute:
    case Unit::hour: {
      std::int64_t grid = p.count;
      if (p.unit == Unit::minute) grid *= 60;
      if (p.unit == Unit::hour) grid *= 3600;
      sod -= sod % grid;
      return Timestamp::from_micros((day * 86400 + sod) *
                                    Timestamp::kMicrosPerSecond);
    }
    case Unit::day:
      return Timestamp::from_micros(day * 86400 * Timestamp::kMicrosPerSecond);
    case Unit::week: {
      // 1970-01-01 is a Thursday; ISO weekday index 0 = Monday.
      std::int64_t monday = day - (day + 3) % 7;
      return Timestamp::from_micros(monday * 86400 *
                                    Timestamp::kMicrosPerSecond);
    }
    case Unit::month: {
      chr::year_month_day ymd{chr::sys_days{chr::days{day}}};
      int month0 = (int(unsigned(ymd.month())) - 1) / p.count * p.count;
      auto first = chr::sys_days{ymd.year() / (month0 + 1) / 1};
      return Timestamp::from_micros(first.time_since_epoch().count() *
                                    std::int64_t{86400} *
                                    Timestamp::kMicrosPerSecond);
    }
    case Unit::year: {
      chr::year_month_day ymd{chr::sys_days{chr::days{day}}};
      int year = int(ymd.year()) / p.count * p.count;
      auto first = chr::sys_days{chr::year{year} / 1 / 1};
      return Timestamp::from_micros(first.time_since_epoch().count() *
                                    std::int64_t{86400} *
                                    Timestamp::kMicrosPerSecond);
    }
  }
  throw Error(Errc::invalid_count, "unreachable unit");
}

Duration nominal_duration(PrecisionSpec p) {
  std::int64_t unit_seconds = 0;
  switch (p.unit) {
    case Unit::second: unit_seconds = 1; break;
    case Unit::minute: unit_seconds = 60; break;
    case Unit::hour: unit_seconds = 3600; break;
    case Unit::day: unit_seconds = 86400; break;
    case Unit::week: unit_seconds = 604800; break;
    case Unit::month: unit_seconds = 2592000; break;
    case Unit::year: unit_seconds = 31536000; break;
  }
  return Duration{unit_seconds * p.count};
}

}  // namespace privacydates
