#include <chrono>
#include <cstdio>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "privacydates/costmodel.hpp"
#include "privacydates/demo.hpp"
#include "privacydates/errors.hpp"
#include "privacydates/store.hpp"
#include "privacydates/vanishing.hpp"

namespace pd = privacydates;

namespace {

// 0 success, 2 usage, 3 store error, 4 policy/validation error.
constexpr int kExitStoreError = 3;
constexpr int kExitValidationError = 4;

int exit_code_for(pd::Errc code) {
  switch (code) {
    case pd::Errc::store_io:
    case pd::Errc::store_locked:
    case pd::Errc::corrupt_store:
    case pd::Errc::corrupt_queue:
    case pd::Errc::version_mismatch:
      return kExitStoreError;
    default:
      return kExitValidationError;
  }
}

pd::Timestamp effective_now(const std::string& now_flag) {
  if (!now_flag.empty()) return pd::Timestamp::parse(now_flag);
  auto wall = std::chrono::time_point_cast<std::chrono::microseconds>(
      std::chrono::system_clock::now());
  return pd::Timestamp::from_micros(wall.time_since_epoch().count());
}

std::string format_factor(double factor) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", factor);
  std::string s = buf;
  if (s.find('.') == std::string::npos) s += ".0";
  return s;
}

void print_reduce_report(const pd::ReductionReport& report) {
  std::printf("%zu reduction%s applied, %zu pending\n", report.applied,
              report.applied == 1 ? "" : "s", report.remaining);
}

int run_reduce(const std::string& store_path, const std::string& now_flag,
               long interval) {
  if (interval <= 0) {
    pd::StoreHandle store = pd::StoreHandle::open(store_path);
    print_reduce_report(pd::reduce_due(store, effective_now(now_flag)));
    return 0;
  }
  for (;;) {
    {
      pd::StoreHandle store = pd::StoreHandle::open(store_path);
      print_reduce_report(pd::reduce_due(store, effective_now(now_flag)));
      std::fflush(stdout);
    }
    std::this_thread::sleep_for(std::chrono::seconds(interval));
  }
}

int run_inspect(const std::string& store_path) {
  pd::StoreHandle store = pd::StoreHandle::open(store_path);
  const pd::StoreDocument& doc = store.doc();
  std::printf("records: %zu\n", doc.records.size());
  for (const auto& [id, record] : doc.records) {
    std::printf("  %s payload=%s\n", id.c_str(), record.payload.c_str());
    for (const auto& [name, field] : record.fields) {
      std::string value = "-";
      if (field.time_value) value = field.time_value->to_string();
      if (field.count_value) value = std::to_string(*field.count_value);
      if (!field.item_ref.empty()) value = "item " + field.item_ref;
      std::printf("    %s [%s] = %s\n", name.c_str(),
                  pd::field_kind_name(field.kind), value.c_str());
    }
  }
  std::printf("items: %zu\n", doc.items.size());
  for (const auto& [id, item] : doc.items) {
    std::printf("  %s value=%s step=%zu policy=%s%s\n", id.c_str(),
                item.value.to_string().c_str(), item.step_index,
                item.policy_id.c_str(), item.hybrid ? " hybrid" : "");
  }
  std::printf("pending events: %zu\n", doc.events.size());
  for (const auto& [id, event] : doc.events) {
    std::printf("  %s item=%s due=%s step=%zu\n", id.c_str(),
                event.item_id.c_str(), event.due.to_string().c_str(),
                event.step_index);
  }
  std::printf("contexts: %zu, policies: %zu\n", doc.contexts.size(),
              doc.policies.size());
  return 0;
}

int run_demo(const std::string& store_path) {
  pd::StoreHandle store = pd::StoreHandle::open(store_path);
  pd::DemoRefs refs = pd::populate_demo(store);
  std::printf("demo data written to %s\n", store_path.c_str());
  std::printf("vanishing record: %s\n", refs.vanish_record.c_str());
  std::printf("order-preserving records: %zu\n", refs.hybrid_records.size());
  return 0;
}

int run_cost(const std::vector<std::string>& mix_args) {
  if (mix_args.empty()) {
    for (const char* kind : {"plain", "rough", "ordering", "vanishing",
                             "hybrid"}) {
      std::int64_t bytes = pd::cost::field_cost(kind);
      std::printf("%s: %lld B (%sx plain)\n", kind, (long long)bytes,
                  format_factor(double(bytes) / pd::cost::kPlainDatetime)
                      .c_str());
    }
    std::printf("context: %lld B each (usage-dependent)\n",
                (long long)pd::cost::kContext);
    return 0;
  }
  std::vector<std::pair<pd::FieldKind, std::int64_t>> mix;
  for (const std::string& arg : mix_args) {
    auto eq = arg.find('=');
    if (eq == std::string::npos) {
      throw pd::Error(pd::Errc::empty_mix,
                      "expected kind=count, got '" + arg + "'");
    }
    pd::FieldKind kind = pd::parse_field_kind(arg.substr(0, eq));
    std::int64_t count = std::stoll(arg.substr(eq + 1));
    mix.emplace_back(kind, count);
    std::int64_t bytes = pd::cost::field_cost(kind);
    std::printf("%s: %lld B (%sx plain)\n", arg.substr(0, eq).c_str(),
                (long long)bytes,
                format_factor(double(bytes) / pd::cost::kPlainDatetime)
                    .c_str());
  }
  pd::cost::ScenarioCost scenario = pd::cost::scenario_cost(mix);
  std::printf("scenario: %lld fields, %lld B total, %.2f B average, %.2fx plain\n",
              (long long)scenario.field_count, (long long)scenario.total_bytes,
              scenario.average_bytes, scenario.factor);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"privacy-preserving timestamp store"};
  app.require_subcommand(1);

  std::string store_path;
  std::string now_flag;
  long interval = 0;
  std::vector<std::string> mix_args;

  CLI::App* reduce = app.add_subcommand(
      "reduce", "apply due precision reductions (cron entry point)");
  reduce->add_option("--store", store_path, "store file")->required();
  reduce->add_option("--now", now_flag, "override current time (RFC 3339 UTC)");
  reduce->add_option("--interval", interval,
                     "seconds between passes; loop until interrupted");

  CLI::App* inspect =
      app.add_subcommand("inspect", "dump records, items and pending events");
  inspect->add_option("--store", store_path, "store file")->required();

  CLI::App* demo =
      app.add_subcommand("demo", "populate a store with the demo dataset");
  demo->add_option("--store", store_path, "store file")->required();

  CLI::App* cost = app.add_subcommand(
      "cost", "print the per-kind byte cost table or evaluate a field mix");
  cost->add_option("mix", mix_args, "scenario as kind=count pairs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (reduce->parsed()) return run_reduce(store_path, now_flag, interval);
    if (inspect->parsed()) return run_inspect(store_path);
    if (demo->parsed()) return run_demo(store_path);
    if (cost->parsed()) return run_cost(mix_args);
  } catch (const pd::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitValidationError;
  }
  return 2;
}
