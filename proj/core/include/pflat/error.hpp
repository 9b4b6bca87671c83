#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pflat {

enum class ErrorCode {
  DimensionMismatch,
  NotValidated,
  FactorizationIncomplete,
  MissingCentralElement,
  NotSurjective,
  PreconditionViolated,
  DegenerateDimension,
  ParameterOutOfRange,
  UnknownId,
  Schema,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Base exception for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Input document violation; `pointer()` is a JSON pointer into the document.
class SchemaError : public Error {
 public:
  SchemaError(std::string pointer, const std::string& what)
      : Error(ErrorCode::Schema, pointer + ": " + what),
        pointer_(std::move(pointer)) {}

  const std::string& pointer() const noexcept { return pointer_; }

 private:
  std::string pointer_;
};

}  // namespace pflat
