#include "privacydates/ordering.hpp"

#include <limits>

#include "privacydates/errors.hpp"
#include "privacydates/hash.hpp"

namespace privacydates {

std::string context_key(std::string_view label) {
  if (label.empty()) {
    throw Error(Errc::empty_label, "context label must be non-empty");
  }
  return sha256_hex(label);
}

std::uint64_t next_count(StoreHandle& store, std::string_view label) {
  std::string key = context_key(label);
  OrderingContext& ctx = store.doc().contexts[key];
  if (ctx.counter >= std::numeric_limits<std::uint32_t>::max()) {
    throw Error(Errc::counter_overflow,
                "32-bit counter exhausted for context " + key);
  }
  ++ctx.counter;
  std::uint64_t issued = ctx.counter;
  store.commit();
  return issued;
}

std::uint64_t assign_order(StoreHandle& store, Record& record,
                           const std::string& field_name,
                           std::string_view label) {
  auto it = record.fields.find(field_name);
  if (it == record.fields.end() || it->second.kind != FieldKind::ordering) {
    throw Error(Errc::unknown_kind,
                "record has no ordering field named " + field_name);
  }
  std::uint64_t count = next_count(store, label);
  it->second.count_value = count;
  store.commit();
  return count;
}

}  // namespace privacydates
