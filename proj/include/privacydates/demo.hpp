#pragma once

#include <string>
#include <vector>

#include "privacydates/store.hpp"

namespace privacydates {

/// Ids of the objects created by populate_demo, for inspection and tests.
struct DemoRefs {
  std::string policy_id;          // three-step hour/day/month policy
  std::string hybrid_policy_id;   // two-step 5 s / 30 s policy
  std::string vanish_record;      // record created at 2021-11-08T15:17Z
  std::string vanish_item;
  std::vector<std::string> hybrid_records;  // five order-preserving samples
  std::vector<std::string> hybrid_items;
  std::string rough_record;
  std::string ordering_record;
};

/// Populates a store with the demo dataset: one vanishing date under the
/// three-step policy, five order-preserving vanishing dates sharing a 30 s
/// end-precision bucket scope, plus a rough and an ordering field example.
DemoRefs populate_demo(StoreHandle& store);

}  // namespace privacydates
