// Error taxonomy shared by every module. Each error carries a category (which
// maps onto a CLI exit code) and a short machine-readable identifier.
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace robba {

enum class ErrorCategory {
  Parse,          // malformed input text
  Indeterminate,  // undecidable at the working precision
  Precondition,   // caller violated an operation's contract
  Internal,       // an invariant that should always hold did not
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, std::string id, const std::string& message,
        std::string location = {})
      : std::runtime_error(message),
        category_(category),
        id_(std::move(id)),
        location_(std::move(location)) {}

  ErrorCategory category() const noexcept { return category_; }
  const std::string& id() const noexcept { return id_; }
  const std::string& location() const noexcept { return location_; }

 private:
  ErrorCategory category_;
  std::string id_;
  std::string location_;
};

[[noreturn]] inline void throw_indeterminate(const std::string& what) {
  throw Error(ErrorCategory::Indeterminate, "indeterminate", what);
}

[[noreturn]] inline void throw_precondition(std::string id, const std::string& what) {
  throw Error(ErrorCategory::Precondition, std::move(id), what);
}

[[noreturn]] inline void throw_internal(const std::string& what) {
  throw Error(ErrorCategory::Internal, "internal", what);
}

inline void require(bool cond, std::string id, const std::string& what) {
  if (!cond) throw_precondition(std::move(id), what);
}

}  // namespace robba
