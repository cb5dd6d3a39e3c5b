#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "privacydates/store.hpp"
#include "privacydates/timestamp.hpp"

namespace privacydates {

struct ReductionReport {
  std::size_t applied = 0;    // reductions performed in this pass
  std::size_t remaining = 0;  // pending events left afterwards
};

/// Validates the step list, canonicalizes it, and stores it content-addressed.
/// Submitting an equivalent step list again returns the existing policy.
///
/// Validation enforces, in this order: strictly increasing precision
/// (coarser at every step), offset 0 for the first step and strictly
/// increasing afterwards, and each step's precision no larger than the
/// following step's offset.
const VanishingPolicy& make_policy(StoreHandle& store,
                                   const std::vector<VanishingStep>& steps);

/// Pure validation half of make_policy, usable without a store.
void validate_policy_steps(const std::vector<VanishingStep>& steps);

/// Creates a vanishing item for an owner's field: applies the first
/// reduction step immediately and enqueues the second step's event, if any.
/// Item and event are persisted together.
VanishingItem& create_vanishing(StoreHandle& store, const std::string& policy_id,
                                Timestamp now, const OwnerRef& owner,
                                bool hybrid = false);

/// Drains every due event: repeatedly applies the pending event with the
/// smallest (due, item id) such that due <= now, including events enqueued
/// during the pass, so a long-idle store catches up in one call.
ReductionReport reduce_due(StoreHandle& store, Timestamp now);

/// Cascading delete of a record: its vanishing items and their events go too.
void delete_owner(StoreHandle& store, const std::string& record_id);

/// Deletes one item: clears the owning record's field reference and removes
/// the item's pending event.
void delete_item(StoreHandle& store, const std::string& item_id);

}  // namespace privacydates
