#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fourierkit {

enum class ErrorKind {
  ConstraintViolation,
  ExistenceViolation,
  NoConvergence,
  ExcludedPoint,
  UnsupportedNode,
  InvalidSystem,
  RootFindingFailure,
  UnstableSystem,
  StepTooLarge,
  NotSettled,
  ParityViolation,
  CausalityViolation,
  SyntaxError,
  Usage,
};

std::string_view to_string(ErrorKind kind);

/// Position in DSL source text, 1-based.
struct SourceSpan {
  int line = 1;
  int column = 1;
};

/// Every failure raised by the library. The kind drives CLI exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<SourceSpan> span = std::nullopt)
      : std::runtime_error(message), kind_(kind), span_(span) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::optional<SourceSpan>& span() const noexcept { return span_; }

 private:
  ErrorKind kind_;
  std::optional<SourceSpan> span_;
};

}  // namespace fourierkit
