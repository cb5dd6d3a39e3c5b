#include "privacydates/store.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <cerrno>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "privacydates/errors.hpp"
#include "privacydates/hash.hpp"

namespace privacydates {

namespace {

using nlohmann::json;

constexpr int kFormatVersion = 1;
constexpr const char* kDefaultUuidSeed = "privacydates-store-v1";

json timestamp_to_json(Timestamp t) { return t.to_string(); }

Timestamp timestamp_from_json(const json& j) {
  return Timestamp::parse(j.get<std::string>());
}

json field_to_json(const RecordField& f) {
  json out;
  out["kind"] = field_kind_name(f.kind);
  if (f.spec) out["spec"] = f.spec->to_string();
  if (f.kind == FieldKind::rough) {
    out["capture"] = capture_mode_name(f.capture_mode);
  }
  if (f.time_value) out["value"] = timestamp_to_json(*f.time_value);
  if (f.count_value) out["count"] = *f.count_value;
  if (f.kind == FieldKind::vanishing || f.kind == FieldKind::hybrid) {
    out["item"] = f.item_ref;
  }
  return out;
}

RecordField field_from_json(const json& j) {
  RecordField f;
  f.kind = parse_field_kind(j.at("kind").get<std::string>());
  if (j.contains("spec")) f.spec = PrecisionSpec::parse(j["spec"].get<std::string>());
  if (j.contains("capture")) {
    f.capture_mode = parse_capture_mode(j["capture"].get<std::string>());
  }
  if (j.contains("value")) f.time_value = timestamp_from_json(j["value"]);
  if (j.contains("count")) f.count_value = j["count"].get<std::uint64_t>();
  if (j.contains("item")) f.item_ref = j["item"].get<std::string>();
  return f;
}

[[noreturn]] void corrupt(const std::string& what) {
  throw Error(Errc::corrupt_store, what);
}

}  // namespace

const char* field_kind_name(FieldKind kind) noexcept {
  switch (kind) {
    case FieldKind::plain: return "plain";
    case FieldKind::rough: return "rough";
    case FieldKind::ordering: return "ordering";
    case FieldKind::vanishing: return "vanishing";
    case FieldKind::hybrid: return "hybrid";
  }
  return "?";
}

FieldKind parse_field_kind(std::string_view name) {
  if (name == "plain") return FieldKind::plain;
  if (name == "rough") return FieldKind::rough;
  if (name == "ordering") return FieldKind::ordering;
  if (name == "vanishing") return FieldKind::vanishing;
  if (name == "hybrid") return FieldKind::hybrid;
  throw Error(Errc::unknown_kind, std::string(name));
}

const char* capture_mode_name(CaptureMode mode) noexcept {
  switch (mode) {
    case CaptureMode::manual: return "manual";
    case CaptureMode::on_create: return "on_create";
    case CaptureMode::on_save: return "on_save";
  }
  return "?";
}

CaptureMode parse_capture_mode(std::string_view name) {
  if (name == "manual") return CaptureMode::manual;
  if (name == "on_create") return CaptureMode::on_create;
  if (name == "on_save") return CaptureMode::on_save;
  throw Error(Errc::unknown_kind, std::string(name));
}

std::string policy_content_hash(const std::vector<VanishingStep>& steps) {
  std::string canon;
  for (const auto& step : steps) {
    canon += unit_symbol(step.precision.unit);
    canon += ':';
    canon += std::to_string(step.precision.count);
    canon += ':';
    canon += std::to_string(step.offset.total_seconds);
    canon += ';';
  }
  return sha256_hex(canon);
}

void validate(const StoreDocument& doc) {
  if (doc.format_version != kFormatVersion) {
    throw Error(Errc::version_mismatch,
                "format-version " + std::to_string(doc.format_version));
  }
  for (const auto& [id, policy] : doc.policies) {
    if (policy.steps.empty()) corrupt("policy " + id + " has no steps");
    if (policy_content_hash(policy.steps) != id) {
      corrupt("policy " + id + " does not match its content hash");
    }
  }
  std::map<std::string, int> events_per_item;
  for (const auto& [id, event] : doc.events) {
    auto item = doc.items.find(event.item_id);
    if (item == doc.items.end()) {
      corrupt("event " + id + " references missing item " + event.item_id);
    }
    if (++events_per_item[event.item_id] > 1) {
      corrupt("item " + event.item_id + " has more than one pending event");
    }
    const auto& policy = doc.policies.at(item->second.policy_id);
    if (event.step_index >= policy.steps.size()) {
      corrupt("event " + id + " step index out of range");
    }
  }
  for (const auto& [id, item] : doc.items) {
    auto policy = doc.policies.find(item.policy_id);
    if (policy == doc.policies.end()) {
      corrupt("item " + id + " references missing policy " + item.policy_id);
    }
    if (item.step_index >= policy->second.steps.size()) {
      corrupt("item " + id + " step index out of range");
    }
    auto record = doc.records.find(item.owner.record_id);
    if (record == doc.records.end()) {
      corrupt("item " + id + " references missing record " +
              item.owner.record_id);
    }
    auto field = record->second.fields.find(item.owner.field);
    if (field == record->second.fields.end()) {
      corrupt("item " + id + " references missing field " + item.owner.field);
    }
    if (field->second.item_ref != id) {
      corrupt("owner field of item " + id + " does not reference it back");
    }
  }
  for (const auto& [rid, record] : doc.records) {
    for (const auto& [name, field] : record.fields) {
      if (!field.item_ref.empty() && !doc.items.count(field.item_ref)) {
        corrupt("record " + rid + " field " + name +
                " references missing item " + field.item_ref);
      }
    }
  }
}

std::string serialize(const StoreDocument& doc) {
  json out;
  out["meta"] = {{"format_version", doc.format_version},
                 {"hash_algorithm", doc.hash_algorithm},
                 {"uuid_seed", doc.uuid_seed},
                 {"uuid_sequence", doc.uuid_sequence}};
  out["contexts"] = json::object();
  for (const auto& [key, ctx] : doc.contexts) {
    out["contexts"][key] = {{"counter", ctx.counter}};
  }
  out["policies"] = json::object();
  for (const auto& [id, policy] : doc.policies) {
    json steps = json::array();
    for (const auto& step : policy.steps) {
      steps.push_back({{"precision", step.precision.to_string()},
                       {"offset", step.offset.total_seconds}});
    }
    out["policies"][id] = {{"steps", std::move(steps)}};
  }
  out["items"] = json::object();
  for (const auto& [id, item] : doc.items) {
    out["items"][id] = {{"value", timestamp_to_json(item.value)},
                        {"policy", item.policy_id},
                        {"step", item.step_index},
                        {"owner", {{"record", item.owner.record_id},
                                   {"field", item.owner.field}}},
                        {"hybrid", item.hybrid}};
  }
  out["events"] = json::object();
  for (const auto& [id, event] : doc.events) {
    out["events"][id] = {{"item", event.item_id},
                         {"due", timestamp_to_json(event.due)},
                         {"step", event.step_index}};
  }
  out["records"] = json::object();
  for (const auto& [id, record] : doc.records) {
    json fields = json::object();
    for (const auto& [name, field] : record.fields) {
      fields[name] = field_to_json(field);
    }
    out["records"][id] = {{"fields", std::move(fields)},
                          {"payload", record.payload}};
  }
  out["hybrid_fields"] = json::object();
  for (const auto& [label, state] : doc.hybrid_fields) {
    out["hybrid_fields"][label] = {{"bucket", timestamp_to_json(state.bucket)}};
  }
  return out.dump(2) + "\n";
}

StoreDocument deserialize(std::string_view text) {
  json in;
  try {
    in = json::parse(text);
  } catch (const json::exception& e) {
    corrupt(std::string("not valid JSON: ") + e.what());
  }
  StoreDocument doc;
  try {
    const json& meta = in.at("meta");
    doc.format_version = meta.at("format_version").get<int>();
    if (doc.format_version != kFormatVersion) {
      throw Error(Errc::version_mismatch,
                  "format-version " + std::to_string(doc.format_version));
    }
    doc.hash_algorithm = meta.at("hash_algorithm").get<std::string>();
    doc.uuid_seed = meta.at("uuid_seed").get<std::string>();
    doc.uuid_sequence = meta.at("uuid_sequence").get<std::uint64_t>();
    for (const auto& [key, j] : in.at("contexts").items()) {
      doc.contexts[key] = {j.at("counter").get<std::uint64_t>()};
    }
    for (const auto& [id, j] : in.at("policies").items()) {
      VanishingPolicy policy;
      policy.id = id;
      for (const auto& s : j.at("steps")) {
        policy.steps.push_back(
            {PrecisionSpec::parse(s.at("precision").get<std::string>()),
             Duration{s.at("offset").get<std::int64_t>()}});
      }
      doc.policies.emplace(id, std::move(policy));
    }
    for (const auto& [id, j] : in.at("items").items()) {
      VanishingItem item;
      item.id = id;
      item.value = timestamp_from_json(j.at("value"));
      item.policy_id = j.at("policy").get<std::string>();
      item.step_index = j.at("step").get<std::size_t>();
      item.owner = {j.at("owner").at("record").get<std::string>(),
                    j.at("owner").at("field").get<std::string>()};
      item.hybrid = j.at("hybrid").get<bool>();
      doc.items.emplace(id, std::move(item));
    }
    for (const auto& [id, j] : in.at("events").items()) {
      doc.events[id] = {id, j.at("item").get<std::string>(),
                        timestamp_from_json(j.at("due")),
                        j.at("step").get<std::size_t>()};
    }
    for (const auto& [id, j] : in.at("records").items()) {
      Record record;
      record.id = id;
      for (const auto& [name, f] : j.at("fields").items()) {
        record.fields.emplace(name, field_from_json(f));
      }
      record.payload = j.at("payload").get<std::string>();
      doc.records.emplace(id, std::move(record));
    }
    for (const auto& [label, j] : in.at("hybrid_fields").items()) {
      doc.hybrid_fields[label] = {timestamp_from_json(j.at("bucket"))};
    }
  } catch (const json::exception& e) {
    corrupt(std::string("malformed document: ") + e.what());
  }
  validate(doc);
  return doc;
}

StoreHandle StoreHandle::open(const std::filesystem::path& path) {
  StoreHandle handle;
  handle.path_ = path;
  handle.lock_path_ = path;
  handle.lock_path_ += ".lock";
  handle.persistent_ = true;

  int fd = ::open(handle.lock_path_.c_str(), O_CREAT | O_EXCL | O_WRONLY, 0644);
  if (fd < 0) {
    if (errno == EEXIST) {
      throw Error(Errc::store_locked,
                  "lock file exists: " + handle.lock_path_.string());
    }
    throw Error(Errc::store_io, "cannot create lock file: " +
                                    std::string(std::strerror(errno)));
  }
  ::close(fd);

  std::error_code ec;
  if (std::filesystem::exists(path, ec)) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      std::filesystem::remove(handle.lock_path_, ec);
      handle.persistent_ = false;
      throw Error(Errc::store_io, "cannot read " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
      handle.doc_ = deserialize(buf.str());
    } catch (...) {
      std::filesystem::remove(handle.lock_path_, ec);
      handle.persistent_ = false;
      throw;
    }
  } else {
    handle.doc_.uuid_seed = kDefaultUuidSeed;
  }
  return handle;
}

StoreHandle StoreHandle::in_memory() {
  StoreHandle handle;
  handle.doc_.uuid_seed = kDefaultUuidSeed;
  return handle;
}

StoreHandle::StoreHandle(StoreHandle&& other) noexcept
    : path_(std::move(other.path_)),
      lock_path_(std::move(other.lock_path_)),
      persistent_(other.persistent_),
      doc_(std::move(other.doc_)) {
  other.persistent_ = false;
}

StoreHandle& StoreHandle::operator=(StoreHandle&& other) noexcept {
  if (this != &other) {
    this->~StoreHandle();
    new (this) StoreHandle(std::move(other));
  }
  return *this;
}

StoreHandle::~StoreHandle() {
  if (persistent_) {
    std::error_code ec;
    std::filesystem::remove(lock_path_, ec);
  }
}

std::string StoreHandle::new_uuid() {
  UuidStream stream(doc_.uuid_seed, doc_.uuid_sequence);
  std::string id = stream.next();
  doc_.uuid_sequence = stream.sequence();
  return id;
}

void StoreHandle::commit() {
  if (!persistent_) return;
  std::string text = serialize(doc_);
  std::filesystem::path tmp = path_;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw Error(Errc::store_io, "cannot write " + tmp.string());
    }
    out << text;
    out.flush();
    if (!out) {
      throw Error(Errc::store_io, "write failed for " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path_, ec);
  if (ec) {
    throw Error(Errc::store_io, "rename failed: " + ec.message());
  }
}

Record& create_record(StoreHandle& store,
                      const std::map<std::string, RecordField>& schema,
                      std::string payload) {
  Record record;
  record.id = store.new_uuid();
  record.fields = schema;
  record.payload = std::move(payload);
  auto [it, inserted] = store.doc().records.emplace(record.id, std::move(record));
  store.commit();
  return it->second;
}

}  // namespace privacydates
