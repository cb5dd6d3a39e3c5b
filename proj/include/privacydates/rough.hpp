#pragma once

#include "privacydates/precision.hpp"
#include "privacydates/store.hpp"
#include "privacydates/timestamp.hpp"

namespace privacydates {

/// Field definition for a rough date. The precision is mandatory; there is
/// deliberately no default so callers must pick one for their use case.
struct RoughFieldDef {
  PrecisionSpec spec;
  CaptureMode capture_mode = CaptureMode::manual;
};

/// Truncates a raw timestamp on the persistence path. For on_create/on_save
/// fields `raw` is the current time; for manual fields it is caller-supplied.
inline Timestamp rough_capture(const RoughFieldDef& field, Timestamp raw) {
  return truncate(raw, field.spec);
}

/// Captures into a record's rough field and persists the store.
Timestamp capture_rough(StoreHandle& store, Record& record,
                        const std::string& field_name, Timestamp raw);

}  // namespace privacydates
