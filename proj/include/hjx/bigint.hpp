#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace hjx {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt pow(const BigInt& base, std::uint32_t exponent) {
  return boost::multiprecision::pow(base, exponent);
}

inline std::string to_decimal(const BigInt& n) { return n.str(); }

/// Parses a nonnegative decimal string; throws ParseError on anything else.
BigInt parse_decimal(const std::string& text);

}  // namespace hjx
