#pragma once

#include <stdexcept>
#include <string>

namespace chowcount {

/// Raised when (p, n, d) or a related argument falls outside its domain.
class ParameterError : public std::invalid_argument {
public:
  explicit ParameterError(const std::string &what) : std::invalid_argument(what) {}
};

/// Raised when two truncated series of different order are combined.
class OrderMismatchError : public std::invalid_argument {
public:
  explicit OrderMismatchError(const std::string &what) : std::invalid_argument(what) {}
};

} // namespace chowcount
