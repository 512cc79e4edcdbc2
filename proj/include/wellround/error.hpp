#pragma once

#include <stdexcept>
#include <string>

namespace wellround {

enum class ErrorKind {
  NotPositiveDefinite,
  MixedExtension,
  UnsupportedDimension,
  OutOfRange,
  DomainError,
  NotRational,
  NotApplicable,
  NoFrame,
  NotPrimitiveVector,
  NotIntegralForm,
  UnsupportedDiscriminant,
  Parse,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// frontends can map it to an exit status without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace wellround
