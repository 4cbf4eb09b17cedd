#ifndef BCODEC_ERROR_HPP_
#define BCODEC_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace bcodec {

enum class ErrorCode {
  InvalidDiagram,
  InvalidTableau,
  InvalidRealization,
  DuplicateValue,
  ShapeMismatch,
  LengthMismatch,
  LengthLimit,
  EntryMultisetMismatch,
  InvalidZ,
  TooShort,
  EmptyTableau,
  NonpositiveKappa,
  DomainError,
  OutsideDiagram,
  CellCountMismatch,
  IndexOutOfRange,
  ConfigError,
  InvariantViolation,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above so
// callers (the CLI, the Python bindings) can map it without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace bcodec

#endif  // BCODEC_ERROR_HPP_
