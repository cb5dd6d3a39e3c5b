#pragma once

#include <string>
#include <string_view>

#include "privacydates/timestamp.hpp"

namespace privacydates {

enum class Unit { second, minute, hour, day, week, month, year };

/// Serialization symbols: s m h d w M y.
char unit_symbol(Unit unit) noexcept;

/// A calendar-aware precision: count multiples of a single unit.
///
/// Counts must tile the parent unit evenly (seconds and minutes divide 60,
/// hours divide 24, months divide 12, day and week only allow 1) so that the
/// truncation grid is the same whether anchored at the day or the epoch.
struct PrecisionSpec {
  Unit unit = Unit::second;
  int count = 1;

  auto operator<=>(const PrecisionSpec&) const = default;

  /// e.g. "1h", "5s", "1M".
  std::string to_string() const;
  static PrecisionSpec parse(std::string_view text);
};

/// Validates the divisibility invariant; throws invalid-count on failure.
PrecisionSpec make_precision(Unit unit, int count);

/// Largest grid point <= t for the spec's truncation grid. Sub-day units
/// floor within the timestamp's own UTC day, day goes to midnight, week to
/// the ISO Monday, month to the first of a count-aligned month, year to
/// Jan 1 of a count-aligned year.
Timestamp truncate(Timestamp t, PrecisionSpec p);

/// Fixed nominal length used to order precisions (month = 30 d, year = 365 d).
Duration nominal_duration(PrecisionSpec p);

}  // namespace privacydates
