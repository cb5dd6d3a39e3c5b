#include "privacydates/rough.hpp"

#include "privacydates/errors.hpp"

namespace privacydates {

Timestamp capture_rough(StoreHandle& store, Record& record,
                        const std::string& field_name, Timestamp raw) {
  auto it = record.fields.find(field_name);
  if (it == record.fields.end() || it->second.kind != FieldKind::rough ||
      !it->second.spec) {
    throw Error(Errc::unknown_kind,
                "record has no rough field named " + field_name);
  }
  Timestamp value = truncate(raw, *it->second.spec);
  it->second.time_value = value;
  store.commit();
  return value;
}

}  // namespace privacydates
