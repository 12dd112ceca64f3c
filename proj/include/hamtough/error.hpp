#ifndef HAMTOUGH_ERROR_HPP
#define HAMTOUGH_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hamtough {

enum class ErrorKind {
    InvalidVertex,
    LoopRejected,
    InvalidParameter,
    TooLarge,
    FormatError,
    NotConnected,
    BudgetExceeded,
    TooSmall,
    NotRealizable,
    IOError,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for all library failures; `kind()` is the
/// machine-readable classification used by the harness.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Malformed graph6/edge-list input; `offset()` is the byte position of the defect.
class FormatError : public Error {
public:
    FormatError(std::size_t offset, const std::string& message)
        : Error(ErrorKind::FormatError, message + " (at byte " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

}  // namespace hamtough

#endif  // HAMTOUGH_ERROR_HPP
