#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace platjones {

enum class ErrorCode {
  Syntax,
  Index,
  Plat,
  Truncation,
  OutOfRange,
  EmptyBlock,
  InadmissibleTriple,
  Overflow,
  Domain,
  SizeGuard,
  Color,
  Size,
  SliceMismatch,
};

std::string_view to_string(ErrorCode code);

/// Every library failure is reported through this type. `position` is a
/// byte offset into the braid text when the error came from the parser.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> position = std::nullopt)
      : std::runtime_error(message), code_(code), position_(position) {}

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> position_;
};

}  // namespace platjones
