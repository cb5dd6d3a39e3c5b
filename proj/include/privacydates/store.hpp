#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "privacydates/precision.hpp"
#include "privacydates/timestamp.hpp"

namespace privacydates {

/// Persisted counter state for one ordering context. The label itself is
/// never stored; the map key is the 256-bit context key in lowercase hex.
struct OrderingContext {
  std::uint64_t counter = 0;  // last issued count
};

struct VanishingStep {
  PrecisionSpec precision;
  Duration offset;  // distance from the previous step's reduced value

  auto operator<=>(const VanishingStep&) const = default;
};

/// Content-addressed reduction policy; id = hash of the canonical step list.
struct VanishingPolicy {
  std::string id;
  std::vector<VanishingStep> steps;
};

/// Canonical content hash over (unit symbol, count, offset seconds) triples.
/// Equivalent spellings of the same policy (3 h vs 180 min) hash identically.
std::string policy_content_hash(const std::vector<VanishingStep>& steps);

struct OwnerRef {
  std::string record_id;
  std::string field;

  auto operator<=>(const OwnerRef&) const = default;
};

struct VanishingItem {
  std::string id;  // randomized UUID, carries no ordering information
  Timestamp value;
  std::string policy_id;
  std::size_t step_index = 0;  // last applied step
  OwnerRef owner;
  bool hybrid = false;  // sub-second counter survives reductions
};

struct ReductionEvent {
  std::string id;
  std::string item_id;
  Timestamp due;
  std::size_t step_index;  // the step this event will apply
};

enum class FieldKind { plain, rough, ordering, vanishing, hybrid };

const char* field_kind_name(FieldKind kind) noexcept;
FieldKind parse_field_kind(std::string_view name);

enum class CaptureMode { manual, on_create, on_save };

const char* capture_mode_name(CaptureMode mode) noexcept;
CaptureMode parse_capture_mode(std::string_view name);

/// One schema-declared field of a record. Which members are meaningful
/// depends on the kind: plain/rough hold a timestamp, ordering holds a
/// count, vanishing/hybrid hold an item reference (empty after the item
/// was deleted directly).
struct RecordField {
  FieldKind kind = FieldKind::plain;
  std::optional<PrecisionSpec> spec;  // rough fields only
  CaptureMode capture_mode = CaptureMode::manual;
  std::optional<Timestamp> time_value;
  std::optional<std::uint64_t> count_value;
  std::string item_ref;
};

struct Record {
  std::string id;
  std::map<std::string, RecordField> fields;
  std::string payload;
};

/// Last-seen end-precision bucket for a hybrid field. Only the newest
/// bucket's counter context is kept alive; older ones are garbage-collected
/// because chronological insertion means they can never grow again.
struct HybridFieldState {
  Timestamp bucket;
};

struct StoreDocument {
  int format_version = 1;
  std::string hash_algorithm = "sha256";
  std::string uuid_seed;
  std::uint64_t uuid_sequence = 0;
  std::map<std::string, Record> records;
  std::map<std::string, OrderingContext> contexts;
  std::map<std::string, VanishingPolicy> policies;
  std::map<std::string, VanishingItem> items;
  std::map<std::string, ReductionEvent> events;
  std::map<std::string, HybridFieldState> hybrid_fields;
};

/// Checks every referential-integrity invariant; throws corrupt-store
/// naming the first broken reference.
void validate(const StoreDocument& doc);

/// Canonical serialization: UTF-8 JSON with sorted keys, so identical
/// documents are byte-identical.
std::string serialize(const StoreDocument& doc);

/// Parses and validates; throws corrupt-store or version-mismatch.
StoreDocument deserialize(std::string_view text);

/// A single-writer handle over one store file. Opening acquires an advisory
/// lock file next to the store; a second writer gets store-locked. commit()
/// writes the whole document atomically (temp file + rename).
class StoreHandle {
 public:
  static StoreHandle open(const std::filesystem::path& path);

  /// A store without a backing file; commit() is a no-op. For tests.
  static StoreHandle in_memory();

  StoreHandle(StoreHandle&&) noexcept;
  StoreHandle& operator=(StoreHandle&&) noexcept;
  StoreHandle(const StoreHandle&) = delete;
  StoreHandle& operator=(const StoreHandle&) = delete;
  ~StoreHandle();

  StoreDocument& doc() { return doc_; }
  const StoreDocument& doc() const { return doc_; }

  /// Draws the next id from the document's deterministic UUID stream.
  std::string new_uuid();

  void commit();

 private:
  StoreHandle() = default;

  std::filesystem::path path_;
  std::filesystem::path lock_path_;
  bool persistent_ = false;
  StoreDocument doc_;
};

/// Creates an empty record with the given field schema and returns it.
Record& create_record(StoreHandle& store,
                      const std::map<std::string, RecordField>& schema,
                      std::string payload = "");

}  // namespace privacydates
