#pragma once

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "privacydates/store.hpp"

namespace privacydates {
namespace cost {

// Modeled byte costs of the reference storage engine, not measured from the
// document store.
inline constexpr std::int64_t kPlainDatetime = 8;
inline constexpr std::int64_t kDate = 8;
inline constexpr std::int64_t kInt = 4;
inline constexpr std::int64_t kUuid = 38;
inline constexpr std::int64_t kRough = 8;
inline constexpr std::int64_t kOrdering = 4;
// Three UUIDs, two dates, a foreign key and an event counter.
inline constexpr std::int64_t kVanishing = 3 * kUuid + 2 * kDate + 2 * kInt;
inline constexpr std::int64_t kHybrid = kVanishing;
inline constexpr std::int64_t kContext = 44;

static_assert(kVanishing == 138);

/// Per-field byte cost of a field kind; throws unknown-kind.
std::int64_t field_cost(FieldKind kind);
std::int64_t field_cost(std::string_view kind_name);

struct ScenarioCost {
  std::int64_t total_bytes = 0;
  std::int64_t field_count = 0;
  double average_bytes = 0.0;
  double factor = 0.0;  // average relative to a plain datetime
};

/// Unweighted per-field average over a field mix; throws empty-mix.
ScenarioCost scenario_cost(
    const std::vector<std::pair<FieldKind, std::int64_t>>& mix);

}  // namespace cost
}  // namespace privacydates
