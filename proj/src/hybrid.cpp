#include "privacydates/hybrid.hpp"

#include "privacydates/errors.hpp"
#include "privacydates/hash.hpp"
#include "privacydates/ordering.hpp"
#include "privacydates/vanishing.hpp"

namespace privacydates {

namespace {

constexpr std::uint64_t kCounterSpace = 1'000'000;  // microsecond range

const VanishingPolicy& policy_of(const StoreHandle& store,
                                 const std::string& policy_id) {
  auto it = store.doc().policies.find(policy_id);
  if (it == store.doc().policies.end()) {
    throw Error(Errc::unknown_policy, policy_id);
  }
  return it->second;
}

std::string bucket_label(const HybridFieldDef& field, Timestamp bucket) {
  return field.label + "|" + bucket.to_string();
}

}  // namespace

PrecisionSpec HybridFieldDef::end_precision(const StoreHandle& store) const {
  if (rough) return rough->spec;
  return policy_of(store, policy_id).steps.back().precision;
}

PrecisionSpec HybridFieldDef::first_precision(const StoreHandle& store) const {
  if (rough) return rough->spec;
  return policy_of(store, policy_id).steps.front().precision;
}

Timestamp assign_hybrid(StoreHandle& store, const HybridFieldDef& field,
                        Timestamp now, const std::optional<OwnerRef>& owner) {
  auto& doc = store.doc();
  Timestamp bucket = truncate(now, field.end_precision(store));

  auto state = doc.hybrid_fields.find(field.label);
  if (state != doc.hybrid_fields.end()) {
    if (bucket < state->second.bucket) {
      throw Error(Errc::out_of_order_insertion,
                  "bucket " + bucket.to_string() + " precedes last-seen " +
                      state->second.bucket.to_string());
    }
    if (bucket > state->second.bucket) {
      // Chronological insertion means the previous bucket can never grow
      // again; drop its counter context.
      doc.contexts.erase(
          context_key(bucket_label(field, state->second.bucket)));
      state->second.bucket = bucket;
    }
  } else {
    doc.hybrid_fields[field.label] = {bucket};
  }

  std::string label = bucket_label(field, bucket);
  auto ctx = doc.contexts.find(context_key(label));
  if (ctx != doc.contexts.end() && ctx->second.counter >= kCounterSpace) {
    throw Error(Errc::counter_overflow,
                "bucket " + bucket.to_string() + " of field " + field.label +
                    " is full");
  }
  auto counter = static_cast<std::int32_t>(next_count(store, label) - 1);

  if (field.rough) {
    Timestamp value =
        truncate(now, field.rough->spec).with_microseconds(counter);
    if (owner) {
      auto record = doc.records.find(owner->record_id);
      if (record == doc.records.end()) {
        throw Error(Errc::unknown_owner, owner->record_id);
      }
      record->second.fields.at(owner->field).time_value = value;
    }
    store.commit();
    return value;
  }

  if (!owner) {
    throw Error(Errc::unknown_owner,
                "vanishing-backed hybrid field needs an owner");
  }
  VanishingItem& item = create_vanishing(
      store, field.policy_id, now.with_microseconds(counter), *owner, true);
  return item.value;
}

Timestamp hybrid_reduce(Timestamp value, PrecisionSpec p) {
  return truncate(value, p).with_microseconds(value.microseconds());
}

}  // namespace privacydates
