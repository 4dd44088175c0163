#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace leapfrog {

enum class ErrorCode {
  DuplicateElement,
  UnknownElement,
  EmptyElement,
  ReflexivePair,
  CycleDetected,
  ArrangementMismatch,
  NotPermissible,
  IndexOutOfRange,
  OrderViolation,
  InternalInconsistency,
  LimitExceeded,
  UnsupportedSize,
  InvalidSpec,
  SchemaError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library. `location()` names the offending
/// input item (for example "/relations/2/1") when one is known.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string location = {});

  ErrorCode code() const noexcept { return code_; }
  const std::string& location() const noexcept { return location_; }

 private:
  ErrorCode code_;
  std::string location_;
};

}  // namespace leapfrog
