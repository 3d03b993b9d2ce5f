#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace lapspec {

/// Arbitrary-precision signed integer used for every matrix entry,
/// polynomial coefficient and spanning-tree count.
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt& value) { return value.str(); }

}  // namespace lapspec
