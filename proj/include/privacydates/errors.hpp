#pragma once

#include <stdexcept>
#include <string>

namespace privacydates {

enum class Errc {
  invalid_count,
  invalid_timestamp,
  empty_label,
  counter_overflow,
  out_of_order_insertion,
  non_monotonic_precision,
  non_monotonic_offset,
  step_exceeds_next_offset,
  empty_policy,
  unknown_policy,
  unknown_owner,
  unknown_kind,
  empty_mix,
  corrupt_store,
  corrupt_queue,
  version_mismatch,
  store_locked,
  store_io,
};

/// Stable kebab-case name, used in CLI reports and error messages.
const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail),
        code_(code) {}

  Errc code() const noexcept { return code_; }
  const char* name() const noexcept { return errc_name(code_); }

 private:
  Errc code_;
};

}  // namespace privacydates
