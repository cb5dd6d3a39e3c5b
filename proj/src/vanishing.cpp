#include "privacydates/vanishing.hpp"

#include <tuple>
#include <vector>

#include "privacydates/errors.hpp"
#include "privacydates/precision.hpp"

namespace privacydates {

namespace {

// Reapplies one step; hybrid items keep the sub-second counter.
Timestamp apply_step(Timestamp value, PrecisionSpec precision, bool hybrid) {
  Timestamp reduced = truncate(value, precision);
  if (hybrid) reduced = reduced.with_microseconds(value.microseconds());
  return reduced;
}

void enqueue_next(StoreHandle& store, VanishingItem& item,
                  const VanishingPolicy& policy) {
  std::size_t next = item.step_index + 1;
  if (next >= policy.steps.size()) return;
  ReductionEvent event;
  event.id = store.new_uuid();
  event.item_id = item.id;
  event.due = item.value + policy.steps[next].offset;
  event.step_index = next;
  store.doc().events.emplace(event.id, std::move(event));
}

void erase_events_for_item(StoreDocument& doc, const std::string& item_id) {
  for (auto it = doc.events.begin(); it != doc.events.end();) {
    if (it->second.item_id == item_id) {
      it = doc.events.erase(it);
    } else {
      ++it;
    }
  }
}

}  // namespace

void validate_policy_steps(const std::vector<VanishingStep>& steps) {
  if (steps.empty()) {
    throw Error(Errc::empty_policy, "policy needs at least one step");
  }
  for (std::size_t i = 1; i < steps.size(); ++i) {
    if (nominal_duration(steps[i].precision) <=
        nominal_duration(steps[i - 1].precision)) {
      throw Error(Errc::non_monotonic_precision,
                  "step " + std::to_string(i) + " is not coarser than step " +
                      std::to_string(i - 1));
    }
  }
  if (steps[0].offset.total_seconds != 0) {
    throw Error(Errc::non_monotonic_offset,
                "first step must have offset 0 (applied at creation)");
  }
  for (std::size_t i = 1; i < steps.size(); ++i) {
    if (steps[i].offset <= steps[i - 1].offset) {
      throw Error(Errc::non_monotonic_offset,
                  "offset of step " + std::to_string(i) +
                      " does not exceed the previous offset");
    }
  }
  for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
    if (nominal_duration(steps[i].precision).total_seconds >
        steps[i + 1].offset.total_seconds) {
      throw Error(Errc::step_exceeds_next_offset,
                  "precision of step " + std::to_string(i) + " (" +
                      std::to_string(
                          nominal_duration(steps[i].precision).total_seconds) +
                      " s) exceeds the offset of step " +
                      std::to_string(i + 1));
    }
  }
}

const VanishingPolicy& make_policy(StoreHandle& store,
                                   const std::vector<VanishingStep>& steps) {
  validate_policy_steps(steps);
  std::string id = policy_content_hash(steps);
  auto it = store.doc().policies.find(id);
  if (it != store.doc().policies.end()) return it->second;
  VanishingPolicy policy;
  policy.id = id;
  policy.steps = steps;
  auto [pos, inserted] = store.doc().policies.emplace(id, std::move(policy));
  store.commit();
  return pos->second;
}

VanishingItem& create_vanishing(StoreHandle& store, const std::string& policy_id,
                                Timestamp now, const OwnerRef& owner,
                                bool hybrid) {
  auto& doc = store.doc();
  auto policy = doc.policies.find(policy_id);
  if (policy == doc.policies.end()) {
    throw Error(Errc::unknown_policy, policy_id);
  }
  auto record = doc.records.find(owner.record_id);
  if (record == doc.records.end()) {
    throw Error(Errc::unknown_owner, owner.record_id);
  }
  auto field = record->second.fields.find(owner.field);
  if (field == record->second.fields.end() ||
      (field->second.kind != FieldKind::vanishing &&
       field->second.kind != FieldKind::hybrid)) {
    throw Error(Errc::unknown_owner,
                "record has no vanishing field named " + owner.field);
  }

  VanishingItem item;
  item.id = store.new_uuid();
  item.value = apply_step(now, policy->second.steps[0].precision, hybrid);
  item.policy_id = policy_id;
  item.step_index = 0;
  item.owner = owner;
  item.hybrid = hybrid;
  field->second.item_ref = item.id;
  auto [pos, inserted] = doc.items.emplace(item.id, std::move(item));
  enqueue_next(store, pos->second, policy->second);
  store.commit();
  return pos->second;
}

ReductionReport reduce_due(StoreHandle& store, Timestamp now) {
  auto& doc = store.doc();
  ReductionReport report;
  for (;;) {
    // Smallest (due, item id) among due events; the event map is keyed by
    // random ids, so order must come from the payload.
    const ReductionEvent* next = nullptr;
    for (const auto& [id, event] : doc.events) {
      if (event.due > now) continue;
      if (!next || std::tie(event.due, event.item_id) <
                       std::tie(next->due, next->item_id)) {
        next = &event;
      }
    }
    if (!next) break;

    ReductionEvent event = *next;
    doc.events.erase(event.id);
    auto item_it = doc.items.find(event.item_id);
    if (item_it == doc.items.end()) {
      throw Error(Errc::corrupt_queue,
                  "event " + event.id + " references missing item " +
                      event.item_id);
    }
    VanishingItem& item = item_it->second;
    const VanishingPolicy& policy = doc.policies.at(item.policy_id);
    item.value =
        apply_step(item.value, policy.steps[event.step_index].precision,
                   item.hybrid);
    item.step_index = event.step_index;
    enqueue_next(store, item, policy);
    ++report.applied;
  }
  report.remaining = doc.events.size();
  if (report.applied > 0) store.commit();
  return report;
}

void delete_owner(StoreHandle& store, const std::string& record_id) {
  auto& doc = store.doc();
  auto record = doc.records.find(record_id);
  if (record == doc.records.end()) {
    throw Error(Errc::unknown_owner, record_id);
  }
  for (const auto& [name, field] : record->second.fields) {
    if (field.item_ref.empty()) continue;
    erase_events_for_item(doc, field.item_ref);
    doc.items.erase(field.item_ref);
  }
  doc.records.erase(record);
  store.commit();
}

void delete_item(StoreHandle& store, const std::string& item_ref) {
  // The argument often aliases the owner field's item_ref, which gets
  // cleared below; work on a copy.
  std::string item_id = item_ref;
  auto& doc = store.doc();
  auto item = doc.items.find(item_id);
  if (item == doc.items.end()) {
    throw Error(Errc::unknown_owner, "no item " + item_id);
  }
  auto record = doc.records.find(item->second.owner.record_id);
  if (record != doc.records.end()) {
    auto field = record->second.fields.find(item->second.owner.field);
    if (field != record->second.fields.end()) {
      field->second.item_ref.clear();
    }
  }
  erase_events_for_item(doc, item_id);
  doc.items.erase(item);
  store.commit();
}

}  // namespace privacydates
