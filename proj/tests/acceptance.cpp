// Acceptance suite: replays the worked examples end to end and checks the
// library's core guarantees at full scale. Prints one PASS/FAIL line per
// criterion and exits nonzero if any fail.

#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "privacydates/costmodel.hpp"
#include "privacydates/demo.hpp"
#include "privacydates/errors.hpp"
#include "privacydates/hybrid.hpp"
#include "privacydates/ordering.hpp"
#include "privacydates/vanishing.hpp"

using namespace privacydates;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void report(const std::string& name, bool ok, const std::string& detail = "") {
  std::printf("%s  %s%s%s\n", ok ? "PASS" : "FAIL", name.c_str(),
              detail.empty() ? "" : " -- ", detail.c_str());
  if (!ok) ++g_failures;
}

bool run_guarded(const std::function<bool()>& body, std::string& detail) {
  try {
    return body();
  } catch (const std::exception& e) {
    detail = e.what();
    return false;
  }
}

void criterion(const std::string& name, const std::function<bool()>& body) {
  std::string detail;
  bool ok = run_guarded(body, detail);
  report(name, ok, detail);
}

Timestamp ts(int y, int mo, int d, int h = 0, int mi = 0, int s = 0,
             std::int64_t us = 0) {
  return Timestamp::from_civil(y, mo, d, h, mi, s, us);
}

std::vector<VanishingStep> listing_policy() {
  return {{make_precision(Unit::hour, 1), seconds(0)},
          {make_precision(Unit::day, 1), hours(3)},
          {make_precision(Unit::month, 1), days(7)}};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("pd-acceptance-" + std::to_string(::getpid()));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// --- criterion 1: three-step progression golden replay -------------------

bool table2_replay() {
  auto begin = std::chrono::steady_clock::now();
  TempDir dir;
  fs::path path = dir.path / "demo.json";
  std::string item_id;
  {
    StoreHandle store = StoreHandle::open(path);
    DemoRefs refs = populate_demo(store);
    item_id = refs.vanish_item;
    const VanishingItem& item = store.doc().items.at(item_id);
    if (item.value != ts(2021, 11, 8, 15)) return false;
    bool found = false;
    for (const auto& [id, event] : store.doc().events) {
      if (event.item_id == item_id) {
        if (event.due != ts(2021, 11, 8, 18)) return false;
        found = true;
      }
    }
    if (!found) return false;
  }
  {
    StoreHandle store = StoreHandle::open(path);
    reduce_due(store, ts(2021, 11, 8, 18, 1));
    const VanishingItem& item = store.doc().items.at(item_id);
    if (item.value != ts(2021, 11, 8)) return false;
    bool found = false;
    for (const auto& [id, event] : store.doc().events) {
      if (event.item_id == item_id) {
        if (event.due != ts(2021, 11, 15)) return false;
        found = true;
      }
    }
    if (!found) return false;
  }
  {
    StoreHandle store = StoreHandle::open(path);
    reduce_due(store, ts(2021, 11, 15, 0, 3));
    const VanishingItem& item = store.doc().items.at(item_id);
    if (item.value != ts(2021, 11, 1)) return false;
    for (const auto& [id, event] : store.doc().events) {
      if (event.item_id == item_id) return false;  // no pending event left
    }
  }
  auto elapsed = std::chrono::steady_clock::now() - begin;
  return elapsed < std::chrono::seconds(1);
}

// --- criterion 2: order-preserving sample sequence ------------------------

bool table3_replay() {
  StoreHandle store = StoreHandle::in_memory();
  const VanishingPolicy& policy =
      make_policy(store, {{make_precision(Unit::second, 5), seconds(0)},
                          {make_precision(Unit::second, 30), hours(1)}});
  HybridFieldDef field{.label = "timeline:created", .policy_id = policy.id};

  const int secs[] = {11, 14, 17, 33, 35};
  const std::int64_t micros[] = {673320, 313406, 248323, 40852, 917632};
  const Timestamp first[] = {
      ts(2021, 11, 8, 12, 20, 10, 0), ts(2021, 11, 8, 12, 20, 10, 1),
      ts(2021, 11, 8, 12, 20, 15, 2), ts(2021, 11, 8, 12, 20, 30, 0),
      ts(2021, 11, 8, 12, 20, 35, 1)};
  const Timestamp second[] = {
      ts(2021, 11, 8, 12, 20, 0, 0), ts(2021, 11, 8, 12, 20, 0, 1),
      ts(2021, 11, 8, 12, 20, 0, 2), ts(2021, 11, 8, 12, 20, 30, 0),
      ts(2021, 11, 8, 12, 20, 30, 1)};
  const int counters[] = {0, 1, 2, 0, 1};

  std::vector<std::string> item_ids;
  for (int i = 0; i < 5; ++i) {
    Record& rec =
        create_record(store, {{"created", {.kind = FieldKind::hybrid}}});
    Timestamp value =
        assign_hybrid(store, field, ts(2021, 11, 8, 12, 20, secs[i], micros[i]),
                      OwnerRef{rec.id, "created"});
    if (value != first[i]) return false;
    if (value.microseconds() != counters[i]) return false;
    item_ids.push_back(rec.fields.at("created").item_ref);
  }
  reduce_due(store, ts(2021, 11, 8, 14, 0));
  for (int i = 0; i < 5; ++i) {
    if (store.doc().items.at(item_ids[i]).value != second[i]) return false;
  }
  return true;
}

// --- criterion 3: storage cost arithmetic ---------------------------------

bool cost_model() {
  using namespace privacydates::cost;
  if (field_cost(FieldKind::vanishing) != 138) return false;
  if (double(field_cost(FieldKind::vanishing)) / kPlainDatetime != 17.25)
    return false;
  if (field_cost(FieldKind::ordering) != 4) return false;
  if (double(field_cost(FieldKind::ordering)) / kPlainDatetime != 0.5)
    return false;
  if (kContext != 44) return false;
  ScenarioCost scenario = scenario_cost({{FieldKind::rough, 10},
                                         {FieldKind::ordering, 3},
                                         {FieldKind::vanishing, 2},
                                         {FieldKind::hybrid, 3}});
  if (scenario.total_bytes != 782 || scenario.field_count != 18) return false;
  double exact = 782.0 / 18.0 / 8.0;
  if (std::abs(scenario.factor - exact) > 1e-12) return false;
  return scenario.factor >= 5.0 && scenario.factor <= 6.0;
}

// --- criterion 4: property suites ------------------------------------------

bool truncation_properties() {
  std::mt19937_64 rng(1);
  std::vector<PrecisionSpec> specs = {
      make_precision(Unit::second, 1),  make_precision(Unit::second, 5),
      make_precision(Unit::second, 30), make_precision(Unit::minute, 1),
      make_precision(Unit::minute, 15), make_precision(Unit::hour, 1),
      make_precision(Unit::hour, 6),    make_precision(Unit::day, 1),
      make_precision(Unit::week, 1),    make_precision(Unit::month, 1),
      make_precision(Unit::month, 3),   make_precision(Unit::year, 1),
      make_precision(Unit::year, 10)};
  std::uniform_int_distribution<std::int64_t> instants(
      0, std::int64_t{13569465600} * 1'000'000);
  std::uniform_int_distribution<std::size_t> pick(0, specs.size() - 1);
  for (int i = 0; i < 10000; ++i) {
    Timestamp t = Timestamp::from_micros(instants(rng));
    PrecisionSpec p = specs[pick(rng)];
    Timestamp once = truncate(t, p);
    if (truncate(once, p) != once) return false;
    if (once > t) return false;
    Timestamp t2 = Timestamp::from_micros(instants(rng));
    if (truncate(std::min(t, t2), p) > truncate(std::max(t, t2), p))
      return false;
  }
  return true;
}

bool counter_properties() {
  StoreHandle store = StoreHandle::in_memory();
  std::vector<std::string> labels;
  for (int i = 0; i < 8; ++i) labels.push_back("ctx:" + std::to_string(i));
  std::map<std::string, std::uint64_t> oracle;
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<std::size_t> pick(0, labels.size() - 1);
  for (int i = 0; i < 5000; ++i) {
    const std::string& label = labels[pick(rng)];
    if (next_count(store, label) != ++oracle[label]) return false;
  }
  for (const auto& [label, count] : oracle) {
    if (store.doc().contexts.at(context_key(label)).counter != count)
      return false;
  }
  return true;
}

bool hybrid_ordering_oracle() {
  std::mt19937_64 rng(3);
  for (int run = 0; run < 1000; ++run) {
    StoreHandle store = StoreHandle::in_memory();
    const VanishingPolicy& policy =
        make_policy(store, {{make_precision(Unit::second, 5), seconds(0)},
                            {make_precision(Unit::second, 30), hours(1)}});
    HybridFieldDef field{.label = "f", .policy_id = policy.id};
    int n = std::uniform_int_distribution<int>(2, 15)(rng);
    Timestamp now = ts(2021, 11, 8, 12, 20, 0);
    std::vector<std::string> item_ids;
    for (int i = 0; i < n; ++i) {
      now = Timestamp::from_micros(
          now.micros_since_epoch() +
          std::uniform_int_distribution<std::int64_t>(0, 15'000'000)(rng));
      Record& rec =
          create_record(store, {{"created", {.kind = FieldKind::hybrid}}});
      assign_hybrid(store, field, now, OwnerRef{rec.id, "created"});
      item_ids.push_back(rec.fields.at("created").item_ref);
    }
    reduce_due(store, now + hours(2));
    // chronological insertion: the lexicographic (timestamp, index) oracle
    // is the insertion order itself, and stored order must match strictly
    for (std::size_t i = 1; i < item_ids.size(); ++i) {
      if (!(store.doc().items.at(item_ids[i - 1]).value <
            store.doc().items.at(item_ids[i]).value))
        return false;
    }
  }
  return true;
}

bool queue_properties() {
  StoreHandle store = StoreHandle::in_memory();
  const VanishingPolicy& policy = make_policy(store, listing_policy());
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<std::int64_t> jitter(0, 86400 * 40);
  Timestamp base = ts(2021, 6, 1);
  for (int i = 0; i < 60; ++i) {
    Record& rec = create_record(
        store, {{"created_at", {.kind = FieldKind::vanishing}}});
    create_vanishing(store, policy.id, base + seconds(jitter(rng)),
                     {rec.id, "created_at"});
  }
  for (int pass = 0; pass < 8; ++pass) {
    Timestamp now = base + seconds(jitter(rng) * 2);
    reduce_due(store, now);
    for (const auto& [id, event] : store.doc().events) {
      if (event.due <= now) return false;
      const VanishingItem& item = store.doc().items.at(event.item_id);
      const VanishingPolicy& p = store.doc().policies.at(item.policy_id);
      if (event.due != item.value + p.steps[event.step_index].offset)
        return false;
    }
  }
  return true;
}

bool integrity_properties() {
  StoreHandle store = StoreHandle::in_memory();
  const VanishingPolicy& policy = make_policy(store, listing_policy());
  std::string policy_id = policy.id;
  std::mt19937_64 rng(6);
  std::vector<std::string> live;
  Timestamp now = ts(2021, 1, 1);
  for (int op = 0; op < 600; ++op) {
    now = now + seconds(std::uniform_int_distribution<int>(1, 50000)(rng));
    switch (std::uniform_int_distribution<int>(0, 4)(rng)) {
      case 0:
      case 1: {
        Record& rec = create_record(
            store, {{"created_at", {.kind = FieldKind::vanishing}}});
        create_vanishing(store, policy_id, now, {rec.id, "created_at"});
        live.push_back(rec.id);
        break;
      }
      case 2:
        reduce_due(store, now);
        break;
      case 3:
        if (!live.empty()) {
          std::size_t i = std::uniform_int_distribution<std::size_t>(
              0, live.size() - 1)(rng);
          delete_owner(store, live[i]);
          live.erase(live.begin() + i);
        }
        break;
      case 4:
        if (!live.empty()) {
          std::size_t i = std::uniform_int_distribution<std::size_t>(
              0, live.size() - 1)(rng);
          const std::string& ref = store.doc()
                                       .records.at(live[i])
                                       .fields.at("created_at")
                                       .item_ref;
          if (!ref.empty()) delete_item(store, ref);
        }
        break;
    }
    try {
      validate(store.doc());
    } catch (const Error&) {
      return false;
    }
  }
  return true;
}

bool id_rank_correlation() {
  StoreHandle store = StoreHandle::in_memory();
  const VanishingPolicy& policy =
      make_policy(store, {{make_precision(Unit::hour, 1), seconds(0)}});
  std::vector<std::string> ids;
  Timestamp now = ts(2021, 1, 1);
  for (int i = 0; i < 1000; ++i) {
    Record& rec = create_record(
        store, {{"created_at", {.kind = FieldKind::vanishing}}});
    now = now + hours(1);
    ids.push_back(
        create_vanishing(store, policy.id, now, {rec.id, "created_at"}).id);
  }
  std::vector<std::size_t> order(ids.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return ids[a] < ids[b]; });
  double n = double(ids.size());
  double d2 = 0;
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    double diff = double(rank) - double(order[rank]);
    d2 += diff * diff;
  }
  double rho = 1.0 - 6.0 * d2 / (n * (n * n - 1.0));
  return std::abs(rho) <= 0.1;
}

// --- criterion 5: replay determinism ---------------------------------------

bool replay_determinism() {
  TempDir dir;
  auto build = [&](const fs::path& path) {
    {
      StoreHandle store = StoreHandle::open(path);
      populate_demo(store);
    }
    {
      StoreHandle store = StoreHandle::open(path);
      reduce_due(store, ts(2021, 11, 8, 18, 1));
      store.commit();
    }
    {
      StoreHandle store = StoreHandle::open(path);
      reduce_due(store, ts(2021, 11, 15, 0, 3));
      store.commit();
    }
  };
  build(dir.path / "a.json");
  build(dir.path / "b.json");
  std::string a = read_file(dir.path / "a.json");
  return !a.empty() && a == read_file(dir.path / "b.json");
}

// --- criterion 6: policy validation ----------------------------------------

bool expect_error(Errc code, const std::function<void()>& body) {
  try {
    body();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

bool policy_validation() {
  StoreHandle store = StoreHandle::in_memory();
  if (!expect_error(Errc::non_monotonic_precision, [&] {
        make_policy(store, {{make_precision(Unit::day, 1), seconds(0)},
                            {make_precision(Unit::hour, 1), hours(3)}});
      }))
    return false;
  if (!expect_error(Errc::non_monotonic_offset, [&] {
        make_policy(store, {{make_precision(Unit::hour, 1), seconds(0)},
                            {make_precision(Unit::day, 1), days(3)},
                            {make_precision(Unit::month, 1), days(3)}});
      }))
    return false;
  if (!expect_error(Errc::step_exceeds_next_offset, [&] {
        make_policy(store, {{make_precision(Unit::hour, 1), seconds(0)},
                            {make_precision(Unit::day, 1), hours(3)},
                            {make_precision(Unit::month, 1), hours(12)}});
      }))
    return false;
  const VanishingPolicy& accepted = make_policy(store, listing_policy());
  const VanishingPolicy& again = make_policy(store, listing_policy());
  return accepted.id == again.id && store.doc().policies.size() == 1;
}

}  // namespace

int main() {
  criterion("criterion 1: three-step reduction golden replay", table2_replay);
  criterion("criterion 2: order-preserving sample replay", table3_replay);
  criterion("criterion 3: storage cost model", cost_model);
  criterion("criterion 4a: truncation idempotence/contraction/monotonicity",
            truncation_properties);
  criterion("criterion 4b: per-context counter sequences vs oracle",
            counter_properties);
  criterion("criterion 4c: hybrid ordering vs lexicographic oracle",
            hybrid_ordering_oracle);
  criterion("criterion 4d: queue soundness and due-from-reduced identity",
            queue_properties);
  criterion("criterion 4e: referential integrity under randomized operations",
            integrity_properties);
  criterion("criterion 4f: id/insertion-order rank correlation",
            id_rank_correlation);
  criterion("criterion 5: byte-identical replay determinism",
            replay_determinism);
  criterion("criterion 6: policy validation error classes", policy_validation);

  if (g_failures == 0) {
    std::printf("all acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d acceptance criteria failed\n", g_failures);
  return 1;
}
