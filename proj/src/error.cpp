#include "leapfrog/error.hpp"

namespace leapfrog {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DuplicateElement: return "DuplicateElement";
    case ErrorCode::UnknownElement: return "UnknownElement";
    case ErrorCode::EmptyElement: return "EmptyElement";
    case ErrorCode::ReflexivePair: return "ReflexivePair";
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::ArrangementMismatch: return "ArrangementMismatch";
    case ErrorCode::NotPermissible: return "NotPermissible";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::OrderViolation: return "OrderViolation";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::LimitExceeded: return "LimitExceeded";
    case ErrorCode::UnsupportedSize: return "UnsupportedSize";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::SchemaError: return "SchemaError";
  }
  return "Unknown";
}

namespace {
std::string compose(ErrorCode code, const std::string& message, const std::string& location) {
  std::string out(to_string(code));
  if (!location.empty()) out += " at " + location;
  if (!message.empty()) out += ": " + message;
  return out;
}
}  // namespace

Error::Error(ErrorCode code, const std::string& message, std::string location)
    : std::runtime_error(compose(code, message, location)),
      code_(code),
      location_(std::move(location)) {}

}  // namespace leapfrog
