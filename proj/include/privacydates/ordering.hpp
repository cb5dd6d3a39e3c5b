#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "privacydates/store.hpp"

namespace privacydates {

/// 256-bit key for a context label: SHA-256 over the label's UTF-8 bytes,
/// lowercase hex. The label itself never reaches the store.
std::string context_key(std::string_view label);

/// Issues the next count for the label's context, creating the context on
/// first use. Counts start at 1 and are persisted before the call returns.
/// Throws counter-overflow if the 32-bit persisted form would overflow.
std::uint64_t next_count(StoreHandle& store, std::string_view label);

/// Assigns the next count to a record's ordering field.
std::uint64_t assign_order(StoreHandle& store, Record& record,
                           const std::string& field_name,
                           std::string_view label);

}  // namespace privacydates
