#pragma once

#include <optional>
#include <string>

#include "privacydates/precision.hpp"
#include "privacydates/rough.hpp"
#include "privacydates/store.hpp"

namespace privacydates {

/// Order-preserving variant of a rough or vanishing field. The end
/// precision is never configured directly: it is the rough spec itself, or
/// the last step of the vanishing policy.
struct HybridFieldDef {
  std::string label;  // scopes the per-bucket counter contexts
  std::optional<RoughFieldDef> rough;  // exactly one of rough / policy_id
  std::string policy_id;

  PrecisionSpec end_precision(const StoreHandle& store) const;
  PrecisionSpec first_precision(const StoreHandle& store) const;
};

/// Assigns an order-preserving value: the date part is truncated to the
/// current (first) precision and the microseconds carry a counter that
/// resets whenever the end-precision bucket changes. Values must arrive in
/// chronological order; an earlier bucket than the last seen one is
/// rejected with out-of-order-insertion, and a full bucket (10^6 values)
/// with counter-overflow.
///
/// For a vanishing-backed field this also creates the item and its first
/// reduction event; the returned value is the item's stored value.
Timestamp assign_hybrid(StoreHandle& store, const HybridFieldDef& field,
                        Timestamp now,
                        const std::optional<OwnerRef>& owner = std::nullopt);

/// Truncates the date part to a coarser step precision, preserving the
/// microsecond counter bit-exactly.
Timestamp hybrid_reduce(Timestamp value, PrecisionSpec p);

}  // namespace privacydates
