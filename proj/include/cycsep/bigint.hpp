#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cycsep {

// Exact arbitrary-precision integer. Counts and Bezout cofactors outgrow
// 64 bits long before the enumeration budget does.
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

inline BigInt parse_decimal(const std::string& s) { return BigInt(s); }

}  // namespace cycsep
