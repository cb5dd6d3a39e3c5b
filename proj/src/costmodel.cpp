#include "privacydates/costmodel.hpp"

#include "privacydates/errors.hpp"

namespace privacydates {
namespace cost {

std::int64_t field_cost(FieldKind kind) {
  switch (kind) {
    case FieldKind::plain: return kPlainDatetime;
    case FieldKind::rough: return kRough;
    case FieldKind::ordering: return kOrdering;
    case FieldKind::vanishing: return kVanishing;
    case FieldKind::hybrid: return kHybrid;
  }
  throw Error(Errc::unknown_kind, "unrecognized field kind");
}

std::int64_t field_cost(std::string_view kind_name) {
  return field_cost(parse_field_kind(kind_name));
}

ScenarioCost scenario_cost(
    const std::vector<std::pair<FieldKind, std::int64_t>>& mix) {
  if (mix.empty()) throw Error(Errc::empty_mix, "scenario mix is empty");
  ScenarioCost out;
  for (const auto& [kind, count] : mix) {
    if (count <= 0) throw Error(Errc::empty_mix, "counts must be positive");
    out.total_bytes += field_cost(kind) * count;
    out.field_count += count;
  }
  out.average_bytes = double(out.total_bytes) / double(out.field_count);
  out.factor = out.average_bytes / double(kPlainDatetime);
  return out;
}

}  // namespace cost
}  // namespace privacydates
