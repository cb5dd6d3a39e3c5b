#include "privacydates/demo.hpp"

#include "privacydates/hybrid.hpp"
#include "privacydates/ordering.hpp"
#include "privacydates/rough.hpp"
#include "privacydates/vanishing.hpp"

namespace privacydates {

DemoRefs populate_demo(StoreHandle& store) {
  DemoRefs refs;

  // Vanishing date: one hour initially, one day after three hours, one
  // month after seven days.
  const VanishingPolicy& policy =
      make_policy(store, {{make_precision(Unit::hour, 1), seconds(0)},
                          {make_precision(Unit::day, 1), hours(3)},
                          {make_precision(Unit::month, 1), days(7)}});
  refs.policy_id = policy.id;

  Record& entry = create_record(
      store, {{"created_at", {.kind = FieldKind::vanishing}}}, "history entry");
  refs.vanish_record = entry.id;
  refs.vanish_item =
      create_vanishing(store, refs.policy_id,
                       Timestamp::from_civil(2021, 11, 8, 15, 17),
                       {entry.id, "created_at"})
          .id;

  // Order-preserving vanishing dates: 5 s first precision, 30 s end
  // precision, five chronological samples spanning two end buckets.
  const VanishingPolicy& hybrid_policy =
      make_policy(store, {{make_precision(Unit::second, 5), seconds(0)},
                          {make_precision(Unit::second, 30), hours(1)}});
  refs.hybrid_policy_id = hybrid_policy.id;

  HybridFieldDef timeline{.label = "timeline:created",
                          .policy_id = refs.hybrid_policy_id};
  const std::int64_t sample_micros[] = {673320, 313406, 248323, 40852, 917632};
  const int sample_seconds[] = {11, 14, 17, 33, 35};
  for (int i = 0; i < 5; ++i) {
    Record& rec = create_record(
        store, {{"created", {.kind = FieldKind::hybrid}}}, "timeline event");
    refs.hybrid_records.push_back(rec.id);
    assign_hybrid(store, timeline,
                  Timestamp::from_civil(2021, 11, 8, 12, 20, sample_seconds[i],
                                        sample_micros[i]),
                  OwnerRef{rec.id, "created"});
    refs.hybrid_items.push_back(rec.fields.at("created").item_ref);
  }
  // advance the samples to their 30 s end precision so the only pending
  // event afterwards is the vanishing date's second step
  reduce_due(store, Timestamp::from_civil(2021, 11, 8, 14, 0));

  // Rough date with one hour precision.
  Record& epic = create_record(
      store,
      {{"created_date",
        {.kind = FieldKind::rough,
         .spec = make_precision(Unit::hour, 1),
         .capture_mode = CaptureMode::on_create}}},
      "epic");
  refs.rough_record = epic.id;
  capture_rough(store, epic, "created_date",
                Timestamp::from_civil(2021, 11, 8, 15, 17));

  // Ordering date under a per-object context label.
  Record& attachment = create_record(
      store, {{"created_date", {.kind = FieldKind::ordering}}}, "attachment");
  refs.ordering_record = attachment.id;
  assign_order(store, attachment, "created_date", "attachment:project42");

  return refs;
}

}  // namespace privacydates
