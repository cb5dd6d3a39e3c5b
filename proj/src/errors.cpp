#include "privacydates/errors.hpp"

namespace privacydates {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_count: return "invalid-count";
    case Errc::invalid_timestamp: return "invalid-timestamp";
    case Errc::empty_label: return "empty-label";
    case Errc::counter_overflow: return "counter-overflow";
    case Errc::out_of_order_insertion: return "out-of-order-insertion";
    case Errc::non_monotonic_precision: return "non-monotonic-precision";
    case Errc::non_monotonic_offset: return "non-monotonic-offset";
    case Errc::step_exceeds_next_offset: return "step-exceeds-next-offset";
    case Errc::empty_policy: return "empty-policy";
    case Errc::unknown_policy: return "unknown-policy";
    case Errc::unknown_owner: return "unknown-owner";
    case Errc::unknown_kind: return "unknown-kind";
    case Errc::empty_mix: return "empty-mix";
    case Errc::corrupt_store: return "corrupt-store";
    case Errc::corrupt_queue: return "corrupt-queue";
    case Errc::version_mismatch: return "version-mismatch";
    case Errc::store_locked: return "store-locked";
    case Errc::store_io: return "store-io";
  }
  return "unknown-error";
}

}  // namespace privacydates
