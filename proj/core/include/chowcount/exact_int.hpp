#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace chowcount {

/// Arbitrary-precision signed integer used for every count in the library.
using ExactInt = boost::multiprecision::cpp_int;

/// Base-10 rendering with a leading '-' for negatives and no separators.
inline std::string to_decimal(const ExactInt &value) { return value.str(); }

} // namespace chowcount
